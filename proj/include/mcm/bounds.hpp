#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

struct BoundReport {
    std::string name;
    bool applicable = true;
    Big value;          // meaningful iff applicable
    std::string reason; // violated condition when not applicable
    std::string note;
};

// Unique (j, delta), j 1-based, with d-1 = n_1 + ... + n_{j-1} + delta and
// 0 <= delta <= n_j - 1.  Shape must be normalized; 1 <= d <= N.
std::pair<std::size_t, std::uint32_t> singleton_decompose(const Shape& s, std::size_t d);

// q^(sum_{i>=j} m_i n_i - m_j delta).
Big singleton_bound(const Shape& s, std::uint64_t q, std::size_t d);

struct EqualRowsBounds {
    BoundReport singleton, hamming, plotkin, elias;
    std::vector<std::pair<std::size_t, Big>> elias_table; // per admissible w
};

// Classical bounds over the alphabet F_{q^m} for equal-row-count shapes of
// length N = sum n_i, at column-Hamming distance d.
EqualRowsBounds equal_rows_bounds(std::uint32_t m, const std::vector<std::uint32_t>& n,
                                  std::uint64_t q, std::size_t d);

struct SpherePackingResult {
    Big value;
    bool exact_ball = false; // false: lower ball estimate used (bound stays valid)
};
SpherePackingResult sphere_packing_bound(const Shape& s, std::uint64_t q, std::size_t d);

// Packing bound with one erasure-sphere layer peeled off; applicable only
// when d-3 = n_1 + ... + n_j + delta with 1 <= j <= l-1 and
// 1 <= delta <= n_{j+1} - 1.
Big projective_sphere_packing(const Shape& s, std::uint64_t q, std::size_t d);

struct EllBounds {
    Big eq4, eq5, eq_mds_derived;
    bool in_tight_regime = false; // (q>=4,n>=2) or (q=3,n>=3) or (q=2,n>=4)
};
// Upper bounds on the number l of square n x n blocks an MMCD code of
// distance d >= 3 can have.
EllBounds ell_bounds(std::uint64_t q, std::uint32_t n, std::size_t d);

struct PerfectFeasibility {
    bool infeasible = false; // proven impossible
    std::string reason;
    bool divisibility_known = false;
    bool divides = false; // B_r | q^(ambient), when computable
};
// d must be odd.  For equal square blocks at d = 3 the parity obstruction is
// decided; otherwise the divisibility test is reported.
PerfectFeasibility perfect_feasibility(const Shape& s, std::uint64_t q, std::size_t d);

// k = ceil(log_q(ceil(q^ambient / B_{d-1}))), with exact B_{d-1}.
std::size_t gv_dimension(const Shape& s, std::uint64_t q, std::size_t d);

// Greedy basis extension over the whole ambient space; the returned code has
// minimum distance >= d and dimension >= gv_dimension.
LinearCode gv_greedy_witness(const Shape& s, const Field& F, std::size_t d);

} // namespace mcm
