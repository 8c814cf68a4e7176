#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mcm/ffield.hpp"
#include "mcm/linalg.hpp"
#include "mcm/mctuple.hpp"
#include "mcm/numeric.hpp"

namespace mcm {

// F_q-linear subspace of the tuple space, held as an RREF generator matrix
// over the global flattening (block-major, row-major within blocks).
class LinearCode {
public:
    // Spanning rows of ambient length; dimension = rank.
    static LinearCode make(const Shape& s, const Field& F,
                           const std::vector<std::vector<Elem>>& spanning_rows);
    static LinearCode from_generator(const Shape& s, const Field& F, Mat gen);
    static LinearCode full_space(const Shape& s, const Field& F);
    static LinearCode zero_code(const Shape& s, const Field& F);

    const Shape& shape() const { return shape_; }
    const Field& field() const { return field_; }
    const Mat& generator() const { return gen_; }
    std::size_t dim() const { return gen_.rows; }
    Big size() const;

    MatrixTuple codeword(const std::vector<Elem>& msg) const;
    MatrixTuple row_tuple(std::size_t r) const;
    bool contains(const MatrixTuple& C) const;

    bool operator==(const LinearCode& o) const {
        return shape_ == o.shape_ && field_ == o.field_ && gen_ == o.gen_;
    }

private:
    LinearCode(Shape s, Field F, Mat gen)
        : shape_(std::move(s)), field_(std::move(F)), gen_(std::move(gen)) {}
    Shape shape_;
    Field field_;
    Mat gen_;
};

inline LinearCode code_make(const Shape& s, const Field& F,
                            const std::vector<std::vector<Elem>>& rows) {
    return LinearCode::make(s, F, rows);
}

// Dual under the entrywise dot product on the flattening (the trace pairing
// evaluated coordinate-wise): dim(C) + dim(dual) = ambient.
LinearCode dual(const LinearCode& C);

enum class Metric { mc, sr, ham_col, ham_row };

std::size_t tuple_weight(const Field& F, const MatrixTuple& C, Metric metric);

// Exact minimum nonzero weight by Gray-code enumeration of the message
// space; budget q^k <= 2^22.
std::size_t min_distance(const LinearCode& C, Metric metric);

// Early-exit variant: true iff every nonzero codeword has weight >= t.
bool distance_at_least(const LinearCode& C, Metric metric, std::size_t t);

// d_MC as the smallest cover size whose line deletion drops the generator
// rank; usable when enumeration is out of reach.
std::size_t min_distance_via_covers(const LinearCode& C);

// Visits all q^k codewords (Gray order, zero first); returns false iff the
// visitor stopped the walk.  Budget q^k <= `budget`.
bool enumerate_codewords(const LinearCode& C, std::uint64_t budget,
                         const std::function<bool(const MatrixTuple&)>& fn);

struct PunctureResult {
    LinearCode code;
    NormalizeRecord norm;
};

// Row space of pi_X(C) over the re-normalized deleted shape.
PunctureResult puncture(const LinearCode& C, const MultiCover& X);
// pi_X of the subcode vanishing on every X-covered entry.
PunctureResult shorten(const LinearCode& C, const MultiCover& X);
// The normalization both of the above apply, determined by shape and X alone.
NormalizeRecord deletion_normalization(const Shape& s, const MultiCover& X);

// Verifies dual(puncture) = shorten(dual) and dual(shorten) = puncture(dual).
bool duality_relations_check(const LinearCode& C, const MultiCover& X);

bool is_mmcd(const LinearCode& C);
bool is_mds_by_columns(const LinearCode& C); // needs equal row counts
bool is_mds_by_rows(const LinearCode& C);    // needs equal column counts
bool is_dually_mmcd(const LinearCode& C);

// V_X: all tuples supported on the covered lines.
LinearCode support_space_basis(const Shape& s, const Field& F, const MultiCover& X);

// True iff the orthogonal space of V_X is itself a support space, i.e. every
// block has an empty row set or an empty column set.
bool support_dual_is_support(const MultiCover& X);

struct CoverClassification {
    MultiCover cover;
    bool is_info = false;      // pi^X surjective from C onto the covered entries
    bool is_comp_info = false; // pi_X injective on C
};
CoverClassification classify_cover(const LinearCode& C, const MultiCover& X);

// Critical-size cover sweeps equivalent to the MMCD predicates; hypotheses:
// equal row counts m and m | dim.
bool mmcd_via_covers(const LinearCode& C);
bool dual_mmcd_via_covers(const LinearCode& C);

// C^t: blockwise transposes; the shape is flipped in place (no re-sorting),
// so applying the same pattern twice is the identity.
LinearCode transposed_code(const LinearCode& C, const std::vector<int>& t);

// dim(C ∩ V_X).
std::size_t support_intersection_dim(const LinearCode& C, const MultiCover& X);

} // namespace mcm
