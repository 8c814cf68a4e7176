#include "mcm/lincode.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcm/bounds.hpp"
#include "mcm/errors.hpp"

namespace mcm {
namespace {

void check_budget(const Field& F, std::size_t k, std::uint64_t budget) {
    if (big_pow(Big(F.q()), static_cast<unsigned long>(k)) > budget)
        throw InfeasibleError("enumeration budget exceeded");
}

// Stacked flat rows of pi_X applied to every generator row (un-normalized).
Mat projected_generator(const LinearCode& C, const MultiCover& X) {
    Mat P(0, projected_shape(C.shape(), X).ambient_dim());
    for (std::size_t r = 0; r < C.dim(); ++r) {
        std::vector<Elem> flat = flatten(project_out(X, C.row_tuple(r)));
        P.a.insert(P.a.end(), flat.begin(), flat.end());
        ++P.rows;
    }
    return P;
}

// Stacked rows of pi^X applied to every generator row.
Mat inner_generator(const LinearCode& C, const MultiCover& X) {
    const std::size_t len = project_in_length(C.shape(), X);
    Mat P(0, len);
    for (std::size_t r = 0; r < C.dim(); ++r) {
        std::vector<Elem> row = project_in(X, C.row_tuple(r));
        P.a.insert(P.a.end(), row.begin(), row.end());
        ++P.rows;
    }
    return P;
}

// Applies a deletion normalization to a tuple already projected by pi_X.
std::vector<Elem> normalize_flat(const MatrixTuple& proj, const NormalizeRecord& rec) {
    std::vector<Elem> out;
    for (std::size_t j = 0; j < rec.perm.size(); ++j) {
        const Mat& b = proj.blocks[rec.perm[j]];
        if (rec.transposed[j]) {
            Mat t = mat_transpose(b);
            out.insert(out.end(), t.a.begin(), t.a.end());
        } else {
            out.insert(out.end(), b.a.begin(), b.a.end());
        }
    }
    return out;
}

Shape normalized_shape(const Shape& s, const MultiCover& X, const NormalizeRecord& rec) {
    Shape proj = projected_shape(s, X);
    std::vector<std::uint32_t> m, n;
    for (std::size_t j = 0; j < rec.perm.size(); ++j) {
        std::uint32_t bm = proj.m(rec.perm[j]), bn = proj.n(rec.perm[j]);
        if (rec.transposed[j]) std::swap(bm, bn);
        m.push_back(bm);
        n.push_back(bn);
    }
    return Shape::make(std::move(m), std::move(n));
}

PunctureResult project_code(const LinearCode& C, const MultiCover& X, Mat sub_gen) {
    NormalizeRecord rec = deletion_normalization(C.shape(), X);
    Shape out_shape = normalized_shape(C.shape(), X, rec);
    Mat rows(0, out_shape.ambient_dim());
    for (std::size_t r = 0; r < sub_gen.rows; ++r) {
        std::vector<Elem> flat_row(sub_gen.a.begin() + r * sub_gen.cols,
                                   sub_gen.a.begin() + (r + 1) * sub_gen.cols);
        MatrixTuple proj = project_out(X, unflatten(C.shape(), flat_row));
        std::vector<Elem> norm_row = normalize_flat(proj, rec);
        rows.a.insert(rows.a.end(), norm_row.begin(), norm_row.end());
        ++rows.rows;
    }
    return PunctureResult{LinearCode::from_generator(out_shape, C.field(), std::move(rows)),
                          std::move(rec)};
}

} // namespace

LinearCode LinearCode::make(const Shape& s, const Field& F,
                            const std::vector<std::vector<Elem>>& spanning_rows) {
    Mat gen(0, s.ambient_dim());
    for (const auto& row : spanning_rows) {
        if (row.size() != s.ambient_dim()) throw std::invalid_argument("length mismatch");
        gen.a.insert(gen.a.end(), row.begin(), row.end());
        ++gen.rows;
    }
    return from_generator(s, F, std::move(gen));
}

LinearCode LinearCode::from_generator(const Shape& s, const Field& F, Mat gen) {
    if (gen.rows > 0 && gen.cols != s.ambient_dim())
        throw std::invalid_argument("length mismatch");
    if (gen.rows == 0) gen = Mat(0, s.ambient_dim());
    for (Elem x : gen.a)
        if (!F.is_valid(x)) throw std::invalid_argument("element out of field range");
    Mat reduced = row_space(F, std::move(gen));
    return LinearCode(s, F, std::move(reduced));
}

LinearCode LinearCode::full_space(const Shape& s, const Field& F) {
    return from_generator(s, F, Mat::identity(s.ambient_dim()));
}

LinearCode LinearCode::zero_code(const Shape& s, const Field& F) {
    return from_generator(s, F, Mat(0, s.ambient_dim()));
}

Big LinearCode::size() const {
    return big_pow(Big(field_.q()), static_cast<unsigned long>(dim()));
}

MatrixTuple LinearCode::codeword(const std::vector<Elem>& msg) const {
    if (msg.size() != dim()) throw std::invalid_argument("length mismatch");
    std::vector<Elem> flat(gen_.cols, 0);
    for (std::size_t r = 0; r < gen_.rows; ++r) {
        if (msg[r] == 0) continue;
        for (std::size_t c = 0; c < gen_.cols; ++c)
            flat[c] = field_.add(flat[c], field_.mul(msg[r], gen_.at(r, c)));
    }
    return unflatten(shape_, flat);
}

MatrixTuple LinearCode::row_tuple(std::size_t r) const {
    if (r >= dim()) throw std::out_of_range("row index out of range");
    std::vector<Elem> flat(gen_.a.begin() + r * gen_.cols, gen_.a.begin() + (r + 1) * gen_.cols);
    return unflatten(shape_, flat);
}

bool LinearCode::contains(const MatrixTuple& C) const {
    if (!(C.shape == shape_)) throw std::invalid_argument("shape mismatch");
    if (dim() == 0) return C.is_zero();
    return solve_left(field_, gen_, flatten(C)).consistent;
}

LinearCode dual(const LinearCode& C) {
    Mat N = nullspace(C.field(), C.generator());
    return LinearCode::from_generator(C.shape(), C.field(), std::move(N));
}

std::size_t tuple_weight(const Field& F, const MatrixTuple& C, Metric metric) {
    switch (metric) {
    case Metric::mc:
        return mc_weight(C);
    case Metric::sr:
        return companion_weights(F, C).sr;
    case Metric::ham_col:
        return companion_weights(F, C).ham_col;
    case Metric::ham_row:
        return companion_weights(F, C).ham_row;
    }
    throw std::logic_error("unknown metric");
}

bool enumerate_codewords(const LinearCode& C, std::uint64_t budget,
                         const std::function<bool(const MatrixTuple&)>& fn) {
    check_budget(C.field(), C.dim(), budget);
    const Field& F = C.field();
    const std::size_t k = C.dim();
    const std::size_t len = C.generator().cols;
    const Elem qm1 = static_cast<Elem>(F.q() - 1);

    std::vector<Elem> digits(k, 0);
    std::vector<int> dir(k, +1);
    std::vector<Elem> cw(len, 0);

    if (!fn(unflatten(C.shape(), cw))) return false;
    while (true) {
        std::size_t i = 0;
        while (i < k) {
            if (dir[i] > 0 ? digits[i] < qm1 : digits[i] > 0) break;
            dir[i] = -dir[i];
            ++i;
        }
        if (i == k) return true;
        const Mat& G = C.generator();
        if (dir[i] > 0) {
            ++digits[i];
            for (std::size_t c = 0; c < len; ++c) cw[c] = F.add(cw[c], G.at(i, c));
        } else {
            --digits[i];
            for (std::size_t c = 0; c < len; ++c) cw[c] = F.sub(cw[c], G.at(i, c));
        }
        if (!fn(unflatten(C.shape(), cw))) return false;
    }
}

std::size_t min_distance(const LinearCode& C, Metric metric) {
    if (C.dim() == 0) throw std::invalid_argument("zero-dimensional code");
    std::size_t best = SIZE_MAX;
    bool first = true;
    enumerate_codewords(C, 1u << 22, [&](const MatrixTuple& w) {
        if (first) { // Gray walk starts at the zero codeword
            first = false;
            return true;
        }
        best = std::min(best, tuple_weight(C.field(), w, metric));
        return best > 1; // weight 1 cannot be beaten
    });
    return best;
}

bool distance_at_least(const LinearCode& C, Metric metric, std::size_t t) {
    if (C.dim() == 0) return true;
    bool first = true;
    return enumerate_codewords(C, 1u << 22, [&](const MatrixTuple& w) {
        if (first) {
            first = false;
            return true;
        }
        return tuple_weight(C.field(), w, metric) >= t;
    });
}

std::size_t min_distance_via_covers(const LinearCode& C) {
    if (C.dim() == 0) throw std::invalid_argument("zero-dimensional code");
    const std::size_t lines = C.shape().line_count();
    for (std::size_t size = 1; size <= lines; ++size) {
        bool found = !for_each_cover_of_size(C.shape(), size, [&](const MultiCover& X) {
            Mat P = projected_generator(C, X);
            return gf_rank(C.field(), P) == C.dim(); // keep going while injective
        });
        if (found) return size;
    }
    throw std::logic_error("cover sweep failed"); // unreachable: full deletion kills rank
}

NormalizeRecord deletion_normalization(const Shape& s, const MultiCover& X) {
    Shape proj = projected_shape(s, X);
    struct Entry {
        std::uint32_t m, n;
        std::size_t old;
        bool flip;
    };
    std::vector<Entry> kept;
    for (std::size_t i = 0; i < proj.blocks(); ++i) {
        std::uint32_t bm = proj.m(i), bn = proj.n(i);
        if (bm == 0 || bn == 0) continue;
        bool flip = bn > bm;
        if (flip) std::swap(bm, bn);
        kept.push_back({bm, bn, i, flip});
    }
    if (kept.empty()) throw std::invalid_argument("projection removes every block");
    std::stable_sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) {
        if (a.m != b.m) return a.m > b.m;
        return a.n > b.n;
    });
    NormalizeRecord rec;
    for (const Entry& e : kept) {
        rec.perm.push_back(e.old);
        rec.transposed.push_back(e.flip);
    }
    return rec;
}

PunctureResult puncture(const LinearCode& C, const MultiCover& X) {
    return project_code(C, X, C.generator());
}

PunctureResult shorten(const LinearCode& C, const MultiCover& X) {
    Mat G_in = inner_generator(C, X);
    Mat N;
    if (G_in.cols == 0) {
        N = Mat::identity(C.dim()); // no covered entries: no constraints
    } else {
        N = nullspace(C.field(), mat_transpose(G_in)); // {x : x * G_in = 0}
    }
    Mat sub_gen = mat_mul(C.field(), N, C.generator());
    return project_code(C, X, std::move(sub_gen));
}

bool duality_relations_check(const LinearCode& C, const MultiCover& X) {
    LinearCode D = dual(C);
    LinearCode lhs1 = dual(puncture(C, X).code);
    LinearCode rhs1 = shorten(D, X).code;
    LinearCode lhs2 = dual(shorten(C, X).code);
    LinearCode rhs2 = puncture(D, X).code;
    return lhs1 == rhs1 && lhs2 == rhs2;
}

bool is_mmcd(const LinearCode& C) {
    if (C.dim() == 0) return true; // degenerate: no distance, bound vacuous
    std::size_t d;
    try {
        d = min_distance(C, Metric::mc);
    } catch (const InfeasibleError&) {
        d = min_distance_via_covers(C);
    }
    return C.size() == singleton_bound(C.shape(), C.field().q(), d);
}

bool is_mds_by_columns(const LinearCode& C) {
    const Shape& s = C.shape();
    for (std::size_t i = 0; i < s.blocks(); ++i)
        if (s.m(i) != s.m(0)) throw std::invalid_argument("unequal row counts");
    if (C.dim() == 0) return true;
    const std::size_t d = min_distance(C, Metric::ham_col);
    return C.dim() == static_cast<std::size_t>(s.m(0)) * (s.total_cols() - d + 1);
}

bool is_mds_by_rows(const LinearCode& C) {
    const Shape& s = C.shape();
    for (std::size_t i = 0; i < s.blocks(); ++i)
        if (s.n(i) != s.n(0)) throw std::invalid_argument("unequal column counts");
    return is_mds_by_columns(transposed_code(C, std::vector<int>(s.blocks(), 1)));
}

bool is_dually_mmcd(const LinearCode& C) { return is_mmcd(C) && is_mmcd(dual(C)); }

LinearCode support_space_basis(const Shape& s, const Field& F, const MultiCover& X) {
    const std::size_t ambient = s.ambient_dim();
    Mat rows(0, ambient);
    std::size_t base = 0;
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        std::vector<char> rin(s.m(i), 0), cin_(s.n(i), 0);
        for (std::uint32_t r : X.rows[i]) rin[r] = 1;
        for (std::uint32_t c : X.cols[i]) cin_[c] = 1;
        for (std::size_t a = 0; a < s.m(i); ++a)
            for (std::size_t b = 0; b < s.n(i); ++b)
                if (rin[a] || cin_[b]) {
                    rows.a.resize(rows.a.size() + ambient, 0);
                    rows.a[rows.rows * ambient + base + a * s.n(i) + b] = 1;
                    ++rows.rows;
                }
        base += (std::size_t)s.m(i) * s.n(i);
    }
    return LinearCode::from_generator(s, F, std::move(rows));
}

bool support_dual_is_support(const MultiCover& X) {
    for (std::size_t i = 0; i < X.rows.size(); ++i)
        if (!X.rows[i].empty() && !X.cols[i].empty()) return false;
    return true;
}

CoverClassification classify_cover(const LinearCode& C, const MultiCover& X) {
    CoverClassification out;
    out.cover = X;
    Mat P = projected_generator(C, X);
    out.is_comp_info = gf_rank(C.field(), P) == C.dim();
    Mat I = inner_generator(C, X);
    out.is_info = gf_rank(C.field(), I) == project_in_length(C.shape(), X);
    return out;
}

namespace {

bool critical_cover_sweep(const LinearCode& C, bool dual_side) {
    const Shape& s = C.shape();
    const std::uint32_t m = s.m(0);
    for (std::size_t i = 0; i < s.blocks(); ++i)
        if (s.m(i) != m)
            throw std::invalid_argument("hypotheses violated: unequal rows or dim not multiple of m");
    if (C.dim() % m != 0)
        throw std::invalid_argument("hypotheses violated: unequal rows or dim not multiple of m");
    const std::size_t critical =
        dual_side ? C.dim() / m : s.total_cols() - C.dim() / m;
    return for_each_cover_of_size(s, critical, [&](const MultiCover& X) {
        CoverClassification cls = classify_cover(C, X);
        return dual_side ? cls.is_info : cls.is_comp_info;
    });
}

} // namespace

bool mmcd_via_covers(const LinearCode& C) { return critical_cover_sweep(C, false); }

bool dual_mmcd_via_covers(const LinearCode& C) { return critical_cover_sweep(C, true); }

LinearCode transposed_code(const LinearCode& C, const std::vector<int>& t) {
    if (C.dim() == 0) {
        MatrixTuple probe = transpose_pattern(MatrixTuple::zero(C.shape()), t);
        return LinearCode::from_generator(probe.shape, C.field(), Mat(0, 0));
    }
    Shape out_shape = transpose_pattern(MatrixTuple::zero(C.shape()), t).shape;
    Mat rows(0, C.shape().ambient_dim());
    for (std::size_t r = 0; r < C.dim(); ++r) {
        MatrixTuple flipped = transpose_pattern(C.row_tuple(r), t);
        std::vector<Elem> flat = flatten(flipped);
        rows.a.insert(rows.a.end(), flat.begin(), flat.end());
        ++rows.rows;
    }
    return LinearCode::from_generator(out_shape, C.field(), std::move(rows));
}

std::size_t support_intersection_dim(const LinearCode& C, const MultiCover& X) {
    LinearCode V = support_space_basis(C.shape(), C.field(), X);
    Mat stacked(0, C.shape().ambient_dim());
    stacked.a = C.generator().a;
    stacked.rows = C.generator().rows;
    stacked.a.insert(stacked.a.end(), V.generator().a.begin(), V.generator().a.end());
    stacked.rows += V.generator().rows;
    const std::size_t joint = gf_rank(C.field(), stacked);
    return C.dim() + V.dim() - joint;
}

} // namespace mcm
