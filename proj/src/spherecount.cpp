#include "mcm/spherecount.hpp"

#include <mutex>
#include <stdexcept>

#include "mcm/errors.hpp"

namespace mcm {
namespace {

// Minimum cover size of a 0/1 pattern given per-row column masks: choose the
// covered row set, remaining nonzero columns are forced.
std::uint32_t pattern_weight(const std::vector<std::uint32_t>& row_masks) {
    const std::uint32_t m = static_cast<std::uint32_t>(row_masks.size());
    std::uint32_t best = UINT32_MAX;
    for (std::uint32_t R = 0; R < (1u << m); ++R) {
        std::uint32_t rest = 0;
        for (std::uint32_t a = 0; a < m; ++a)
            if (!((R >> a) & 1)) rest |= row_masks[a];
        std::uint32_t w = static_cast<std::uint32_t>(__builtin_popcount(R)) +
                          static_cast<std::uint32_t>(__builtin_popcount(rest));
        best = std::min(best, w);
    }
    return best;
}

} // namespace

const std::vector<Big>& SphereTable::bruteforce_table(std::uint32_t m, std::uint32_t n) {
    auto key = std::make_pair(m, n);
    auto it = brute_.find(key);
    if (it != brute_.end()) return it->second;
    if (static_cast<std::uint64_t>(m) * n > 22)
        throw InfeasibleError("too large for brute force");

    // Enumerate the cover over the smaller side; results are transpose-invariant.
    const bool flip = m > n;
    const std::uint32_t rows = flip ? n : m, cols = flip ? m : n;

    std::vector<Big> pw(static_cast<std::size_t>(m) * n + 1); // (q-1)^k
    for (std::size_t k = 0; k < pw.size(); ++k) pw[k] = qpow(q_ - 1, static_cast<unsigned long>(k));

    std::vector<Big> table(std::min(m, n) + 1, 0);
    std::vector<std::uint32_t> row_masks(rows);
    const std::uint64_t total = 1ull << (static_cast<std::uint64_t>(m) * n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::uint32_t a = 0; a < rows; ++a)
            row_masks[a] = static_cast<std::uint32_t>((mask >> (a * cols)) & ((1u << cols) - 1));
        std::uint32_t w = pattern_weight(row_masks);
        table[w] += pw[static_cast<std::size_t>(__builtin_popcountll(mask))];
    }
    return brute_.emplace(key, std::move(table)).first->second;
}

Big SphereTable::bruteforce(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    const auto& tab = bruteforce_table(m, n);
    if (r >= tab.size()) return 0;
    return tab[r];
}

Big SphereTable::no_zero_lines(std::uint32_t m, std::uint32_t n) {
    if (m == 0 && n == 0) return 1;
    if (m == 0 || n == 0) return 0;
    auto key = std::make_pair(m, n);
    auto it = t_.find(key);
    if (it != t_.end()) return it->second;
    Big tot = qpow(q_, static_cast<unsigned long>(m) * n);
    for (std::uint32_t i = 0; i <= m; ++i)
        for (std::uint32_t j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) continue;
            tot -= binom(m, i) * binom(n, j) * no_zero_lines(m - i, n - j);
        }
    return t_.emplace(key, std::move(tot)).first->second;
}

Big SphereTable::recursion(std::uint32_t m, std::uint32_t n) {
    if (n > m) throw std::invalid_argument("n exceeds m");
    // inner(a,0) = inner(0,b) = 1: the empty remainder counts once.
    std::function<Big(std::uint32_t, std::uint32_t)> inner = [&](std::uint32_t a,
                                                                 std::uint32_t b) -> Big {
        if (a == 0 || b == 0) return 1;
        auto key = std::make_pair(a, b);
        auto it = rec_.find(key);
        if (it != rec_.end()) return it->second;
        Big tot = qpow(q_, static_cast<unsigned long>(a) * b);
        for (std::uint32_t i = 1; i <= a; ++i)
            for (std::uint32_t j = 1; j <= b; ++j)
                tot -= binom(a, i) * binom(b, j) * inner(a - i, b - j);
        return rec_.emplace(key, std::move(tot)).first->second;
    };
    Big val = inner(m, n);
    Big lo = qpow(q_ - 1, static_cast<unsigned long>(m) * n);
    Big hi = qpow(q_, static_cast<unsigned long>(m) * n);
    if (val < lo || val > hi) throw std::logic_error("recursion outside sandwich");
    return val;
}

Big SphereTable::irredundant_upper(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    Big tot = 0;
    for (std::uint32_t s = 0; s <= r; ++s) {
        Big term = binom(m, s) * binom(n, r - s);
        if (term == 0) continue;
        term *= big_pow(qpow(q_, m - s) - 1, r - s);
        term *= big_pow(qpow(q_, n - r + s) - 1, s);
        term *= qpow(q_, static_cast<unsigned long>(s) * (r - s));
        tot += term;
    }
    return tot;
}

Big SphereTable::dc_high(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    Big tot = 0;
    for (std::uint32_t w = 0; w < r; ++w)
        for (std::uint32_t u = 0; u <= w; ++u) {
            Big pref = binom(m, u) * binom(n, w - u);
            if (pref == 0) continue;
            for (std::uint32_t s = 0; s <= r - w; ++s)
                for (std::uint32_t t = s; t <= r - w; ++t) {
                    Big m1 = multinom2(m - u, s, t);
                    Big m2 = multinom2(n - w + u, r - w - s, r - w - t);
                    if (m1 == 0 || m2 == 0) continue;
                    Big inner = no_zero_lines(t, r - w - s) * no_zero_lines(s, r - w - t);
                    if (inner == 0) continue;
                    Big vert_base = qpow(q_, t + s) * (qpow(q_, m - u - s - t) - 1) +
                                    (qpow(q_, s) - 1) * (qpow(q_, t) - 1);
                    Big horiz_base =
                        qpow(q_, (r - w - t) + (r - w - s)) *
                            (qpow(q_, n - (w - u) - (r - w - t) - (r - w - s)) - 1) +
                        (qpow(q_, r - w - s) - 1) * (qpow(q_, r - w - t) - 1);
                    tot += pref * m1 * m2 * qpow(q_, static_cast<unsigned long>(u) * (w - u)) *
                           inner * big_pow(vert_base, w - u) * big_pow(horiz_base, u);
                }
        }
    return tot;
}

Big SphereTable::dc_low(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    auto nz = [this](std::uint32_t a, std::uint32_t b) -> Big {
        if (a == 0 && b == 0) return 1;
        if (a == 0 || b == 0) return 0;
        return qpow(q_ - 1, static_cast<unsigned long>(a) * b);
    };
    // Accumulate doubled terms so the s = t half-weight stays integral.
    Big doubled = 0;
    for (std::uint32_t s = 0; s <= r; ++s)
        for (std::uint32_t t = s; t <= r; ++t) {
            Big m1 = multinom2(m, s, t);
            Big m2 = multinom2(n, r - s, r - t);
            if (m1 == 0 || m2 == 0) continue;
            Big inner = nz(t, r - s) * nz(s, r - t);
            if (inner == 0) continue;
            Big term = m1 * m2 * inner;
            doubled += (s == t) ? term : 2 * term;
        }
    if (doubled % 2 != 0) throw std::logic_error("double-count total not integral");
    return doubled / 2;
}

SphereInterval SphereTable::bounds(std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    if (r < 1 || r > std::min(m, n)) throw std::invalid_argument("radius out of range");
    Big ub = irredundant_upper(m, n, r);
    Big lower = ub - dc_high(m, n, r);
    if (lower < 0) lower = 0;
    Big upper = ub - dc_low(m, n, r);
    return SphereInterval{std::move(lower), std::move(upper)};
}

namespace {

SphereTable& shared_table(std::uint64_t q) {
    static std::mutex mu;
    static std::map<std::uint64_t, SphereTable> tables;
    std::lock_guard<std::mutex> lock(mu);
    return tables.try_emplace(q, q).first->second;
}

} // namespace

Big sphere_bruteforce(std::uint64_t q, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    return shared_table(q).bruteforce(m, n, r);
}

Big s1_exact(std::uint64_t q, std::uint32_t m, std::uint32_t n) {
    return Big(m) * (qpow(q, n) - 1) + Big(n) * (qpow(q, m) - 1) -
           Big(m) * n * (Big(q) - 1);
}

Big count_no_zero_lines(std::uint64_t q, std::uint32_t m, std::uint32_t n) {
    return shared_table(q).no_zero_lines(m, n);
}

Big full_sphere_recursion(std::uint64_t q, std::uint32_t m, std::uint32_t n) {
    return shared_table(q).recursion(m, n);
}

SphereInterval sphere_bounds(std::uint64_t q, std::uint32_t m, std::uint32_t n, std::uint32_t r) {
    return shared_table(q).bounds(m, n, r);
}

BallSize ball_size(const Shape& s, std::uint64_t q, std::uint32_t r, BallMode mode) {
    SphereTable& tab = shared_table(q);
    const std::size_t l = s.blocks();

    // Per-block ball intervals by radius; exact mode uses point intervals.
    // Convolve across blocks, then take radius at most r overall by composing
    // per-block *sphere* intervals over all decompositions — equivalently a
    // table conv[j] = interval for tuples of total weight j.
    std::vector<std::pair<Big, Big>> conv{{1, 1}}; // weight-0 tuple
    for (std::size_t i = 0; i < l; ++i) {
        // Per-block counts are transpose-invariant; query in row-major orientation.
        const std::uint32_t bm = std::max(s.m(i), s.n(i)), bn = std::min(s.m(i), s.n(i));
        const std::uint32_t cap = std::min(bn, r);
        std::vector<std::pair<Big, Big>> sph(cap + 1);
        sph[0] = {1, 1};
        for (std::uint32_t w = 1; w <= cap; ++w) {
            if (mode == BallMode::exact) {
                if (static_cast<std::uint64_t>(bm) * bn > 22)
                    throw InfeasibleError("too large for exact mode");
                Big v = tab.bruteforce(bm, bn, w);
                sph[w] = {v, v};
            } else {
                SphereInterval iv = tab.bounds(bm, bn, w);
                sph[w] = {iv.lower, iv.upper};
            }
        }
        std::vector<std::pair<Big, Big>> next(std::min<std::size_t>(conv.size() + cap, r + 1),
                                              {0, 0});
        for (std::size_t a = 0; a < conv.size(); ++a)
            for (std::uint32_t b = 0; b <= cap && a + b <= r; ++b) {
                next[a + b].first += conv[a].first * sph[b].first;
                next[a + b].second += conv[a].second * sph[b].second;
            }
        conv = std::move(next);
    }

    BallSize out;
    out.lower = 0;
    out.upper = 0;
    for (const auto& [lo, hi] : conv) {
        out.lower += lo;
        out.upper += hi;
    }
    out.exact = (out.lower == out.upper);
    return out;
}

} // namespace mcm
