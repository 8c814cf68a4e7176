#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mcm/ffield.hpp"
#include "mcm/linalg.hpp"

namespace mcm {

// Deterministic RNG wrapper.  below(n) is rejection-sampled and unbiased.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    Rng(std::uint64_t seed, std::uint64_t stream); // derived per-trial stream
    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 eng_;
};

// Block profile (m_i x n_i)_{i=1..l}.  make() enforces the normalization
// n_i <= m_i and m non-increasing that the cardinality bounds assume;
// unchecked() admits anything (zero dimensions included) for metric work.
class Shape {
public:
    static Shape make(std::vector<std::uint32_t> m, std::vector<std::uint32_t> n);
    static Shape unchecked(std::vector<std::uint32_t> m, std::vector<std::uint32_t> n);

    std::size_t blocks() const { return m_.size(); }
    std::uint32_t m(std::size_t i) const { return m_[i]; }
    std::uint32_t n(std::size_t i) const { return n_[i]; }
    const std::vector<std::uint32_t>& row_counts() const { return m_; }
    const std::vector<std::uint32_t>& col_counts() const { return n_; }

    bool is_normalized() const;
    std::size_t ambient_dim() const; // sum m_i * n_i
    std::size_t total_cols() const;  // N = sum n_i
    std::size_t max_weight() const;  // sum min(m_i, n_i)
    std::size_t line_count() const;  // sum m_i + n_i

    bool operator==(const Shape&) const = default;

private:
    friend struct MatrixTuple; // tuples assemble shape and blocks separately
    Shape() = default;
    std::vector<std::uint32_t> m_, n_;
};

struct MatrixTuple {
    Shape shape;
    std::vector<Mat> blocks;

    static MatrixTuple zero(const Shape& s);
    bool is_zero() const;
    bool operator==(const MatrixTuple&) const = default;
};

// Per-block row/column index sets (0-based, sorted ascending).
struct MultiCover {
    std::vector<std::vector<std::uint32_t>> rows, cols;

    static MultiCover none(const Shape& s);
    std::size_t size() const; // sum |X_i| + |Y_i|
    bool operator==(const MultiCover&) const = default;
};

// Bookkeeping for shape re-normalization after row/column deletions:
// kept blocks only, perm[new] = old block index, transposed[new] set when
// the block was flipped to restore n <= m.
struct NormalizeRecord {
    std::vector<std::size_t> perm;
    std::vector<bool> transposed;
    bool trivial() const;
};

// --- entrywise arithmetic -------------------------------------------------

MatrixTuple tuple_add(const Field& F, const MatrixTuple& A, const MatrixTuple& B);
MatrixTuple tuple_sub(const Field& F, const MatrixTuple& A, const MatrixTuple& B);
MatrixTuple tuple_scale(const Field& F, Elem c, const MatrixTuple& A);

// Global flattening convention: block-major, row-major within each block.
std::vector<Elem> flatten(const MatrixTuple& C);
MatrixTuple unflatten(const Shape& s, const std::vector<Elem>& v);

// --- covers and weights ----------------------------------------------------

// True iff every nonzero entry of C lies on a covered row or column.
bool is_multicover(const MultiCover& X, const MatrixTuple& C);

// Minimum cover size, per block via maximum bipartite matching (Koenig).
std::size_t mc_weight(const MatrixTuple& C);

// Subset-enumeration oracle; requires m_i + n_i <= 24 per block.
std::size_t mc_weight_bruteforce(const MatrixTuple& C);

// A cover attaining mc_weight(C).
MultiCover min_cover(const MatrixTuple& C);

struct CompanionWeights {
    std::size_t sr = 0, ham_col = 0, ham_row = 0;
};
CompanionWeights companion_weights(const Field& F, const MatrixTuple& C);

std::size_t mc_distance(const Field& F, const MatrixTuple& A, const MatrixTuple& B);

// --- projections and transposes --------------------------------------------

// pi_X: delete covered rows/columns; survivors keep their relative order.
MatrixTuple project_out(const MultiCover& X, const MatrixTuple& C);
Shape projected_shape(const Shape& s, const MultiCover& X);

// pi^X: the entries on covered lines, in the fixed order: per block all
// covered rows (left to right, top to bottom), then each covered column's
// remaining (uncovered-row) entries top to bottom.
std::vector<Elem> project_in(const MultiCover& X, const MatrixTuple& C);
std::size_t project_in_length(const Shape& s, const MultiCover& X);

// Blockwise conditional transpose; t_i = 1 flips block i.
MatrixTuple transpose_pattern(const MatrixTuple& C, const std::vector<int>& t);
MultiCover transpose_cover(const MultiCover& X, const std::vector<int>& t);

// --- randomness -------------------------------------------------------------

MatrixTuple random_tuple(const Shape& s, const Field& F, Rng& rng);

// Uniform cover of the given size over the shape's lines.
MultiCover random_cover(const Shape& s, std::size_t size, Rng& rng);

// Tuple of multi-cover weight exactly t (rejection sampling); throws
// std::invalid_argument("unreachable weight") when t exceeds the shape's
// maximum weight.
MatrixTuple random_error(const Shape& s, const Field& F, std::size_t t, Rng& rng);

// --- enumeration helpers ----------------------------------------------------

// Lines are indexed globally: block 0 rows, block 0 columns, block 1 rows, ...
MultiCover cover_from_lines(const Shape& s, const std::vector<std::size_t>& lines);

// Visits every cover of exactly `size` lines; stops early when fn returns false.
// Returns false iff some fn call returned false.
bool for_each_cover_of_size(const Shape& s, std::size_t size,
                            const std::function<bool(const MultiCover&)>& fn);

// Visits all q^(ambient) tuples of the shape; stops early when fn returns false.
bool for_each_tuple(const Shape& s, const Field& F,
                    const std::function<bool(const MatrixTuple&)>& fn);

} // namespace mcm
