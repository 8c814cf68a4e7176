#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

struct SphereInterval {
    Big lower, upper;
    bool exact() const { return lower == upper; }
};

enum class BallMode { exact, bounds };

struct BallSize {
    Big lower, upper;
    bool exact = false;
    const Big& value() const { return lower; } // meaningful in exact mode
};

// Memoized sphere/ball counters for one field size q.  Build phase is
// single-threaded; queries are pure once computed.
class SphereTable {
public:
    explicit SphereTable(std::uint64_t q) : q_(q) {}

    std::uint64_t q() const { return q_; }

    // Exact S_r^{m,n} for all r at once, by support-pattern enumeration
    // weighted with (q-1)^popcount; needs m*n <= 22.
    const std::vector<Big>& bruteforce_table(std::uint32_t m, std::uint32_t n);
    Big bruteforce(std::uint32_t m, std::uint32_t n, std::uint32_t r);

    // Matrices with no zero row and no zero column (inclusion-exclusion).
    Big no_zero_lines(std::uint32_t m, std::uint32_t n);

    // The deletion recursion for the full-radius sphere, boundary terms for
    // empty remainders counted as 1.  Requires n <= m; result checked
    // against the (q-1)^{mn} .. q^{mn} sandwich.
    Big recursion(std::uint32_t m, std::uint32_t n);

    // Sandwich for S_r^{m,n}: upper = UB_r - DC_low, lower = UB_r - DC_high
    // (clamped at 0).  Requires 1 <= r <= min(m,n).
    SphereInterval bounds(std::uint32_t m, std::uint32_t n, std::uint32_t r);

private:
    Big irredundant_upper(std::uint32_t m, std::uint32_t n, std::uint32_t r);
    Big dc_high(std::uint32_t m, std::uint32_t n, std::uint32_t r);
    Big dc_low(std::uint32_t m, std::uint32_t n, std::uint32_t r);

    std::uint64_t q_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Big>> brute_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Big> t_, rec_;
};

// Shared-table front ends (process-wide memo, built single-threaded).
Big sphere_bruteforce(std::uint64_t q, std::uint32_t m, std::uint32_t n, std::uint32_t r);
Big s1_exact(std::uint64_t q, std::uint32_t m, std::uint32_t n);
Big count_no_zero_lines(std::uint64_t q, std::uint32_t m, std::uint32_t n);
Big full_sphere_recursion(std::uint64_t q, std::uint32_t m, std::uint32_t n);
SphereInterval sphere_bounds(std::uint64_t q, std::uint32_t m, std::uint32_t n, std::uint32_t r);

// Ball of radius r around 0 in the product shape: per-block sphere sizes
// composed over all weight decompositions.  Exact mode needs every block
// within brute-force reach; bounds mode composes the per-block intervals.
BallSize ball_size(const Shape& s, std::uint64_t q, std::uint32_t r, BallMode mode);

} // namespace mcm
