#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mcm/ffield.hpp"

namespace mcm {

// Dense row-major matrix over a Field.  The field is passed to each
// operation rather than stored.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    bool is_zero() const {
        for (Elem x : a)
            if (x) return false;
        return true;
    }
    bool operator==(const Mat&) const = default;

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref_in_place(const Field& F, Mat& M);

std::size_t gf_rank(const Field& F, Mat M);

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);

// Basis of { x : A x^T = 0 }, one vector per row ((cols - rank) x cols).
Mat nullspace(const Field& F, const Mat& A);

std::optional<Mat> mat_inverse(const Field& F, Mat A);

struct LinSolve {
    bool consistent = false;
    std::vector<Elem> x; // one solution when consistent
    std::size_t freedom = 0; // dimension of the solution space
};

// Solves x * A = b for a row vector x of length A.rows.
LinSolve solve_left(const Field& F, const Mat& A, const std::vector<Elem>& b);

/// RREF with zero rows dropped: canonical basis of the row space.
Mat row_space(const Field& F, Mat M);

inline bool same_row_space(const Field& F, const Mat& A, const Mat& B) {
    return row_space(F, A) == row_space(F, B);
}

} // namespace mcm
