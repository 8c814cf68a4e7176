#include "mcm/linalg.hpp"

#include <stdexcept>

namespace mcm {

std::vector<std::size_t> rref_in_place(const Field& F, Mat& M) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols && row < M.rows; ++col) {
        std::size_t sel = row;
        while (sel < M.rows && M.at(sel, col) == 0) ++sel;
        if (sel == M.rows) continue;
        if (sel != row)
            for (std::size_t c = 0; c < M.cols; ++c)
                std::swap(M.at(sel, c), M.at(row, c));
        Elem piv_inv = F.inv(M.at(row, col));
        for (std::size_t c = col; c < M.cols; ++c)
            M.at(row, c) = F.mul(M.at(row, c), piv_inv);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == row) continue;
            Elem f = M.at(r, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < M.cols; ++c)
                M.at(r, c) = F.sub(M.at(r, c), F.mul(f, M.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t gf_rank(const Field& F, Mat M) {
    return rref_in_place(F, M).size();
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("dimension mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            Elem v = A.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
        }
    return C;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat nullspace(const Field& F, const Mat& A) {
    Mat R = A;
    std::vector<std::size_t> pivots = rref_in_place(F, R);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    Mat N(A.cols - pivots.size(), A.cols);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < A.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        N.at(out, free_col) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            N.at(out, pivots[pr]) = F.neg(R.at(pr, free_col));
        ++out;
    }
    return N;
}

std::optional<Mat> mat_inverse(const Field& F, Mat A) {
    if (A.rows != A.cols) return std::nullopt;
    const std::size_t n = A.rows;
    if (n == 0) return Mat::identity(0);
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = rref_in_place(F, aug);
    // Invertible iff all n pivots land in the left block.
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

LinSolve solve_left(const Field& F, const Mat& A, const std::vector<Elem>& b) {
    if (b.size() != A.cols) throw std::invalid_argument("dimension mismatch");
    // x * A = b  <=>  A^T x^T = b^T: augment A^T with b as a final column.
    Mat aug(A.cols, A.rows + 1);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) aug.at(j, i) = A.at(i, j);
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(j, A.rows) = b[j];

    auto pivots = rref_in_place(F, aug);
    LinSolve out;
    if (!pivots.empty() && pivots.back() == A.rows) return out; // b not in column span
    out.consistent = true;
    out.x.assign(A.rows, 0);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        out.x[pivots[pr]] = aug.at(pr, A.rows);
    out.freedom = A.rows - pivots.size();
    return out;
}

Mat row_space(const Field& F, Mat M) {
    auto pivots = rref_in_place(F, M);
    Mat R(pivots.size(), M.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < M.cols; ++c) R.at(r, c) = M.at(r, c);
    return R;
}

} // namespace mcm
