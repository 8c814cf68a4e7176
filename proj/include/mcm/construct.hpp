#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcm/ffield.hpp"
#include "mcm/lincode.hpp"
#include "mcm/linalg.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

// Interleaving parameters: u component words over t = u*l blocks of r x s
// are woven into l blocks of (u*r) x (u*s); s <= r keeps shapes normalized.
struct NestParams {
    std::uint32_t u = 1, r = 1, s = 1, ell = 1;
    std::uint32_t t() const { return u * ell; }
    std::uint32_t m() const { return u * r; }
    std::uint32_t n() const { return u * s; }
    void validate() const; // throws std::invalid_argument
};

Shape component_shape(const NestParams& p); // t blocks of r x s
Shape nested_shape(const NestParams& p);    // l blocks of m x n

// Output matrix i holds component block C^w_{i*u+a} at block position (a,b),
// 0-based, where w = (b - a) mod u.
MatrixTuple nest_phi(const NestParams& p, const std::vector<MatrixTuple>& tuples);
std::vector<MatrixTuple> unnest(const NestParams& p, const MatrixTuple& C);

// Image of the u-fold product of the component code under the interleaving;
// dimension u * dim(component).
LinearCode nested_code(const NestParams& p, const LinearCode& component);

// Per component word w: covered rows map into block-row-determined
// components for every w; covered columns map into the unique block-row a
// with (b - a) mod u = w.  Sizes are preserved: |X'(w)| = |X|.
std::vector<MultiCover> lift_cover(const NestParams& p, const MultiCover& X);

struct LrsParams {
    Field base;         // F_q
    std::uint32_t s = 1, t = 1, k = 1;
    std::vector<Elem> beta; // ordered basis of F_{q^s} over F_q (top encodings)
    Elem gamma = 0;         // primitive element of F_{q^s}

    // Defaults: polynomial basis and smallest primitive element.
    static LrsParams make(const Field& base, std::uint32_t s, std::uint32_t t, std::uint32_t k);
};

struct LrsCode {
    Extension ext;
    LrsParams params;
    Mat generator;       // k x (t*s) over the top field
    bool msrd_hypothesis_ok = true;
    std::string warning; // "q <= t violates MSRD hypothesis" when applicable
};

// Generator with row u, block i, column j entry beta_j^(q^u) *
// gamma^((i-1)(1+q+...+q^(u-1))); distance ts-k+1 in the sum-rank metric
// when q > t.
LrsCode lrs_generator(const LrsParams& params);

// Coordinate matrix of a length-s vector over F_{q^s}: column j lists the
// basis coordinates of c_j, row i collecting the beta_i components.
Mat matrix_repr(const Extension& ext, const std::vector<Elem>& c);

// Blockwise matrix_repr of a length t*s vector: t square s x s blocks.
MatrixTuple matrix_repr_tuple(const Extension& ext, std::uint32_t t,
                              const std::vector<Elem>& codeword);

// The F_q-linear matrix code { matrix_repr_tuple(c) : c in rowspace(G) },
// with basis {beta_b * row_u}; dimension s*k over F_q.
LinearCode lrs_matrix_code(const LrsCode& code);

struct SrbchResult {
    bool applicable = true;
    std::string reason; // failed hypotheses when not applicable
    Big eq7, eq8;       // dimension lower bounds; eq7 >= eq8 whenever delta >= 1
    std::vector<std::vector<std::uint32_t>> cosets; // q0^s-cyclotomic cosets mod t
};

// Dimension bounds for sum-rank BCH parameters: q = q0^r, n = u*s, t = u*l,
// designed distance delta, coset offset b_offset.  Hypotheses: gcd(t,s) = 1,
// gcd(t,q) = 1, t | q-1.
SrbchResult srbch_dimension_bound(std::uint64_t q0, std::uint32_t r, std::uint32_t s,
                                  std::uint32_t u, std::uint32_t ell, std::uint64_t delta,
                                  std::uint64_t b_offset = 1);

} // namespace mcm
