#include "mcm/mctuple.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcm/errors.hpp"

namespace mcm {
namespace {

void require_same_shape(const MatrixTuple& A, const MatrixTuple& B) {
    if (!(A.shape == B.shape)) throw std::invalid_argument("shape mismatch");
}

void require_cover_shape(const Shape& s, const MultiCover& X) {
    if (X.rows.size() != s.blocks() || X.cols.size() != s.blocks())
        throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        for (std::uint32_t r : X.rows[i])
            if (r >= s.m(i)) throw std::invalid_argument("shape mismatch");
        for (std::uint32_t c : X.cols[i])
            if (c >= s.n(i)) throw std::invalid_argument("shape mismatch");
    }
}

// Kuhn's augmenting-path matching on the bipartite graph rows x cols with
// edges at nonzero entries; returns match_col (col -> matched row or -1).
std::vector<int> max_matching(const Mat& B) {
    std::vector<int> match_col(B.cols, -1);
    std::vector<char> used(B.cols, 0);
    std::function<bool(std::size_t)> augment = [&](std::size_t u) {
        for (std::size_t v = 0; v < B.cols; ++v) {
            if (!B.at(u, v) || used[v]) continue;
            used[v] = 1;
            if (match_col[v] < 0 || augment(static_cast<std::size_t>(match_col[v]))) {
                match_col[v] = static_cast<int>(u);
                return true;
            }
        }
        return false;
    };
    for (std::size_t u = 0; u < B.rows; ++u) {
        std::fill(used.begin(), used.end(), 0);
        augment(u);
    }
    return match_col;
}

// Koenig: a minimum vertex cover from a maximum matching.
void block_min_cover(const Mat& B, std::vector<std::uint32_t>& rows,
                     std::vector<std::uint32_t>& cols) {
    std::vector<int> match_col = max_matching(B);
    std::vector<int> match_row(B.rows, -1);
    for (std::size_t v = 0; v < B.cols; ++v)
        if (match_col[v] >= 0) match_row[match_col[v]] = static_cast<int>(v);

    // Z = unmatched rows plus everything reachable by alternating paths.
    std::vector<char> zrow(B.rows, 0), zcol(B.cols, 0);
    std::vector<std::size_t> stack;
    for (std::size_t u = 0; u < B.rows; ++u)
        if (match_row[u] < 0) {
            zrow[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < B.cols; ++v) {
            if (!B.at(u, v) || zcol[v]) continue;
            if (static_cast<int>(u) == match_col[v]) continue; // follow non-matching edges only
            zcol[v] = 1;
            if (match_col[v] >= 0 && !zrow[match_col[v]]) {
                zrow[match_col[v]] = 1;
                stack.push_back(static_cast<std::size_t>(match_col[v]));
            }
        }
    }
    rows.clear();
    cols.clear();
    for (std::size_t u = 0; u < B.rows; ++u)
        if (!zrow[u]) rows.push_back(static_cast<std::uint32_t>(u));
    for (std::size_t v = 0; v < B.cols; ++v)
        if (zcol[v]) cols.push_back(static_cast<std::uint32_t>(v));
}

bool block_covered(const Mat& B, const std::vector<std::uint32_t>& rows,
                   const std::vector<std::uint32_t>& cols) {
    std::vector<char> rin(B.rows, 0), cin_(B.cols, 0);
    for (std::uint32_t r : rows) rin[r] = 1;
    for (std::uint32_t c : cols) cin_[c] = 1;
    for (std::size_t a = 0; a < B.rows; ++a)
        for (std::size_t b = 0; b < B.cols; ++b)
            if (B.at(a, b) && !rin[a] && !cin_[b]) return false;
    return true;
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return r % n;
}

Shape Shape::make(std::vector<std::uint32_t> m, std::vector<std::uint32_t> n) {
    if (m.empty() || m.size() != n.size())
        throw std::invalid_argument("shape: m and n must be non-empty lists of equal length");
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0 || n[i] == 0)
            throw std::invalid_argument("shape: block dimensions must be positive");
        if (n[i] > m[i])
            throw std::invalid_argument("shape: n exceeds m at block " + std::to_string(i + 1));
        if (i > 0 && m[i] > m[i - 1])
            throw std::invalid_argument("shape: m must be non-increasing");
    }
    Shape s;
    s.m_ = std::move(m);
    s.n_ = std::move(n);
    return s;
}

Shape Shape::unchecked(std::vector<std::uint32_t> m, std::vector<std::uint32_t> n) {
    if (m.size() != n.size())
        throw std::invalid_argument("shape: m and n must be lists of equal length");
    Shape s;
    s.m_ = std::move(m);
    s.n_ = std::move(n);
    return s;
}

bool Shape::is_normalized() const {
    if (m_.empty()) return false;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (m_[i] == 0 || n_[i] == 0 || n_[i] > m_[i]) return false;
        if (i > 0 && m_[i] > m_[i - 1]) return false;
    }
    return true;
}

std::size_t Shape::ambient_dim() const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) d += (std::size_t)m_[i] * n_[i];
    return d;
}

std::size_t Shape::total_cols() const {
    return std::accumulate(n_.begin(), n_.end(), std::size_t{0});
}

std::size_t Shape::max_weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) w += std::min(m_[i], n_[i]);
    return w;
}

std::size_t Shape::line_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) c += (std::size_t)m_[i] + n_[i];
    return c;
}

MatrixTuple MatrixTuple::zero(const Shape& s) {
    MatrixTuple t;
    t.shape = s;
    for (std::size_t i = 0; i < s.blocks(); ++i) t.blocks.emplace_back(s.m(i), s.n(i));
    return t;
}

bool MatrixTuple::is_zero() const {
    for (const Mat& b : blocks)
        if (!b.is_zero()) return false;
    return true;
}

MultiCover MultiCover::none(const Shape& s) {
    MultiCover x;
    x.rows.resize(s.blocks());
    x.cols.resize(s.blocks());
    return x;
}

std::size_t MultiCover::size() const {
    std::size_t n = 0;
    for (const auto& v : rows) n += v.size();
    for (const auto& v : cols) n += v.size();
    return n;
}

bool NormalizeRecord::trivial() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    for (bool t : transposed)
        if (t) return false;
    return true;
}

MatrixTuple tuple_add(const Field& F, const MatrixTuple& A, const MatrixTuple& B) {
    require_same_shape(A, B);
    MatrixTuple C = A;
    for (std::size_t i = 0; i < C.blocks.size(); ++i)
        for (std::size_t k = 0; k < C.blocks[i].a.size(); ++k)
            C.blocks[i].a[k] = F.add(C.blocks[i].a[k], B.blocks[i].a[k]);
    return C;
}

MatrixTuple tuple_sub(const Field& F, const MatrixTuple& A, const MatrixTuple& B) {
    require_same_shape(A, B);
    MatrixTuple C = A;
    for (std::size_t i = 0; i < C.blocks.size(); ++i)
        for (std::size_t k = 0; k < C.blocks[i].a.size(); ++k)
            C.blocks[i].a[k] = F.sub(C.blocks[i].a[k], B.blocks[i].a[k]);
    return C;
}

MatrixTuple tuple_scale(const Field& F, Elem c, const MatrixTuple& A) {
    MatrixTuple C = A;
    for (Mat& b : C.blocks)
        for (Elem& x : b.a) x = F.mul(c, x);
    return C;
}

std::vector<Elem> flatten(const MatrixTuple& C) {
    std::vector<Elem> v;
    v.reserve(C.shape.ambient_dim());
    for (const Mat& b : C.blocks) v.insert(v.end(), b.a.begin(), b.a.end());
    return v;
}

MatrixTuple unflatten(const Shape& s, const std::vector<Elem>& v) {
    if (v.size() != s.ambient_dim()) throw std::invalid_argument("shape mismatch");
    MatrixTuple t = MatrixTuple::zero(s);
    std::size_t pos = 0;
    for (Mat& b : t.blocks) {
        std::copy(v.begin() + pos, v.begin() + pos + b.a.size(), b.a.begin());
        pos += b.a.size();
    }
    return t;
}

bool is_multicover(const MultiCover& X, const MatrixTuple& C) {
    require_cover_shape(C.shape, X);
    for (std::size_t i = 0; i < C.blocks.size(); ++i)
        if (!block_covered(C.blocks[i], X.rows[i], X.cols[i])) return false;
    return true;
}

std::size_t mc_weight(const MatrixTuple& C) {
    std::size_t w = 0;
    for (const Mat& b : C.blocks) {
        std::vector<int> match_col = max_matching(b);
        for (int u : match_col)
            if (u >= 0) ++w;
    }
    return w;
}

std::size_t mc_weight_bruteforce(const MatrixTuple& C) {
    std::size_t w = 0;
    for (const Mat& b : C.blocks) {
        const std::size_t lines = b.rows + b.cols;
        if (lines > 24) throw InfeasibleError("too large for brute force");
        bool found = false;
        for (std::size_t s = 0; s <= lines && !found; ++s) {
            for_each_subset(lines, s, [&](const std::vector<std::size_t>& idx) {
                std::vector<std::uint32_t> rows, cols;
                for (std::size_t line : idx) {
                    if (line < b.rows)
                        rows.push_back(static_cast<std::uint32_t>(line));
                    else
                        cols.push_back(static_cast<std::uint32_t>(line - b.rows));
                }
                if (block_covered(b, rows, cols)) {
                    w += s;
                    found = true;
                    return false;
                }
                return true;
            });
        }
        if (!found) throw std::logic_error("cover search failed"); // unreachable: full cover always works
    }
    return w;
}

MultiCover min_cover(const MatrixTuple& C) {
    MultiCover X = MultiCover::none(C.shape);
    for (std::size_t i = 0; i < C.blocks.size(); ++i)
        block_min_cover(C.blocks[i], X.rows[i], X.cols[i]);
    return X;
}

CompanionWeights companion_weights(const Field& F, const MatrixTuple& C) {
    CompanionWeights w;
    for (const Mat& b : C.blocks) {
        w.sr += gf_rank(F, b);
        for (std::size_t v = 0; v < b.cols; ++v)
            for (std::size_t u = 0; u < b.rows; ++u)
                if (b.at(u, v)) {
                    ++w.ham_col;
                    break;
                }
        for (std::size_t u = 0; u < b.rows; ++u)
            for (std::size_t v = 0; v < b.cols; ++v)
                if (b.at(u, v)) {
                    ++w.ham_row;
                    break;
                }
    }
    return w;
}

std::size_t mc_distance(const Field& F, const MatrixTuple& A, const MatrixTuple& B) {
    return mc_weight(tuple_sub(F, A, B));
}

Shape projected_shape(const Shape& s, const MultiCover& X) {
    require_cover_shape(s, X);
    std::vector<std::uint32_t> m, n;
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        m.push_back(s.m(i) - static_cast<std::uint32_t>(X.rows[i].size()));
        n.push_back(s.n(i) - static_cast<std::uint32_t>(X.cols[i].size()));
    }
    return Shape::unchecked(std::move(m), std::move(n));
}

MatrixTuple project_out(const MultiCover& X, const MatrixTuple& C) {
    require_cover_shape(C.shape, X);
    MatrixTuple out;
    out.shape = projected_shape(C.shape, X);
    for (std::size_t i = 0; i < C.blocks.size(); ++i) {
        const Mat& b = C.blocks[i];
        std::vector<char> rdel(b.rows, 0), cdel(b.cols, 0);
        for (std::uint32_t r : X.rows[i]) rdel[r] = 1;
        for (std::uint32_t c : X.cols[i]) cdel[c] = 1;
        Mat nb(out.shape.m(i), out.shape.n(i));
        std::size_t nr = 0;
        for (std::size_t a = 0; a < b.rows; ++a) {
            if (rdel[a]) continue;
            std::size_t nc = 0;
            for (std::size_t c = 0; c < b.cols; ++c) {
                if (cdel[c]) continue;
                nb.at(nr, nc) = b.at(a, c);
                ++nc;
            }
            ++nr;
        }
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

std::vector<Elem> project_in(const MultiCover& X, const MatrixTuple& C) {
    require_cover_shape(C.shape, X);
    std::vector<Elem> out;
    for (std::size_t i = 0; i < C.blocks.size(); ++i) {
        const Mat& b = C.blocks[i];
        std::vector<char> rin(b.rows, 0);
        for (std::uint32_t r : X.rows[i]) rin[r] = 1;
        for (std::uint32_t r : X.rows[i])
            for (std::size_t c = 0; c < b.cols; ++c) out.push_back(b.at(r, c));
        for (std::uint32_t c : X.cols[i])
            for (std::size_t r = 0; r < b.rows; ++r)
                if (!rin[r]) out.push_back(b.at(r, c));
    }
    return out;
}

std::size_t project_in_length(const Shape& s, const MultiCover& X) {
    require_cover_shape(s, X);
    std::size_t len = 0;
    for (std::size_t i = 0; i < s.blocks(); ++i) {
        const std::size_t xr = X.rows[i].size(), yc = X.cols[i].size();
        len += s.n(i) * xr + s.m(i) * yc - xr * yc;
    }
    return len;
}

MatrixTuple transpose_pattern(const MatrixTuple& C, const std::vector<int>& t) {
    if (t.size() != C.blocks.size()) throw std::invalid_argument("shape mismatch");
    MatrixTuple out;
    std::vector<std::uint32_t> m, n;
    for (std::size_t i = 0; i < C.blocks.size(); ++i) {
        if (t[i]) {
            out.blocks.push_back(mat_transpose(C.blocks[i]));
            m.push_back(C.shape.n(i));
            n.push_back(C.shape.m(i));
        } else {
            out.blocks.push_back(C.blocks[i]);
            m.push_back(C.shape.m(i));
            n.push_back(C.shape.n(i));
        }
    }
    out.shape = Shape::unchecked(std::move(m), std::move(n));
    return out;
}

MultiCover transpose_cover(const MultiCover& X, const std::vector<int>& t) {
    if (t.size() != X.rows.size()) throw std::invalid_argument("shape mismatch");
    MultiCover out = X;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i]) std::swap(out.rows[i], out.cols[i]);
    return out;
}

MatrixTuple random_tuple(const Shape& s, const Field& F, Rng& rng) {
    MatrixTuple t = MatrixTuple::zero(s);
    for (Mat& b : t.blocks)
        for (Elem& x : b.a) x = static_cast<Elem>(rng.below(F.q()));
    return t;
}

MultiCover random_cover(const Shape& s, std::size_t size, Rng& rng) {
    const std::size_t lines = s.line_count();
    if (size > lines) throw std::invalid_argument("cover size exceeds line count");
    std::vector<std::size_t> pool(lines);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < size; ++i)
        std::swap(pool[i], pool[i + rng.below(lines - i)]);
    pool.resize(size);
    return cover_from_lines(s, pool);
}

MatrixTuple random_error(const Shape& s, const Field& F, std::size_t t, Rng& rng) {
    if (t > s.max_weight()) throw std::invalid_argument("unreachable weight");
    if (t == 0) return MatrixTuple::zero(s);
    while (true) {
        MultiCover X = random_cover(s, t, rng);
        MatrixTuple E = MatrixTuple::zero(s);
        for (std::size_t i = 0; i < E.blocks.size(); ++i) {
            Mat& b = E.blocks[i];
            std::vector<char> rin(b.rows, 0), cin_(b.cols, 0);
            for (std::uint32_t r : X.rows[i]) rin[r] = 1;
            for (std::uint32_t c : X.cols[i]) cin_[c] = 1;
            for (std::size_t a = 0; a < b.rows; ++a)
                for (std::size_t c = 0; c < b.cols; ++c)
                    if (rin[a] || cin_[c]) b.at(a, c) = static_cast<Elem>(rng.below(F.q()));
        }
        if (mc_weight(E) == t) return E;
    }
}

MultiCover cover_from_lines(const Shape& s, const std::vector<std::size_t>& lines) {
    MultiCover X = MultiCover::none(s);
    for (std::size_t line : lines) {
        std::size_t i = 0, base = 0;
        while (i < s.blocks() && line >= base + s.m(i) + s.n(i)) {
            base += (std::size_t)s.m(i) + s.n(i);
            ++i;
        }
        if (i == s.blocks()) throw std::invalid_argument("line index out of range");
        std::size_t local = line - base;
        if (local < s.m(i))
            X.rows[i].push_back(static_cast<std::uint32_t>(local));
        else
            X.cols[i].push_back(static_cast<std::uint32_t>(local - s.m(i)));
    }
    for (auto& v : X.rows) std::sort(v.begin(), v.end());
    for (auto& v : X.cols) std::sort(v.begin(), v.end());
    return X;
}

bool for_each_cover_of_size(const Shape& s, std::size_t size,
                            const std::function<bool(const MultiCover&)>& fn) {
    return for_each_subset(s.line_count(), size, [&](const std::vector<std::size_t>& idx) {
        return fn(cover_from_lines(s, idx));
    });
}

bool for_each_tuple(const Shape& s, const Field& F,
                    const std::function<bool(const MatrixTuple&)>& fn) {
    const std::size_t dim = s.ambient_dim();
    std::vector<Elem> v(dim, 0);
    while (true) {
        if (!fn(unflatten(s, v))) return false;
        std::size_t i = 0;
        while (i < dim) {
            if (++v[i] < F.q()) break;
            v[i] = 0;
            ++i;
        }
        if (i == dim) return true;
    }
}

} // namespace mcm
