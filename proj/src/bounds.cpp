#include "mcm/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcm/errors.hpp"
#include "mcm/spherecount.hpp"

namespace mcm {
namespace {

void require_normalized(const Shape& s) {
    if (!s.is_normalized()) throw std::invalid_argument("shape not normalized");
}

Big floor_div(const Big& a, const Big& b) { return a / b; } // nonnegative operands

Big ceil_div(const Big& a, const Big& b) { return (a + b - 1) / b; }

} // namespace

std::pair<std::size_t, std::uint32_t> singleton_decompose(const Shape& s, std::size_t d) {
    require_normalized(s);
    if (d < 1 || d > s.total_cols()) throw std::invalid_argument("d out of range");
    std::size_t rem = d - 1;
    for (std::size_t j = 0; j < s.blocks(); ++j) {
        if (rem <= s.n(j) - 1) return {j + 1, static_cast<std::uint32_t>(rem)};
        rem -= s.n(j);
    }
    throw std::logic_error("decomposition failed"); // unreachable for valid d
}

Big singleton_bound(const Shape& s, std::uint64_t q, std::size_t d) {
    auto [j, delta] = singleton_decompose(s, d);
    std::size_t exp = 0;
    for (std::size_t i = j - 1; i < s.blocks(); ++i) exp += (std::size_t)s.m(i) * s.n(i);
    exp -= (std::size_t)s.m(j - 1) * delta;
    return qpow(q, static_cast<unsigned long>(exp));
}

EqualRowsBounds equal_rows_bounds(std::uint32_t m, const std::vector<std::uint32_t>& n,
                                  std::uint64_t q, std::size_t d) {
    require_normalized(Shape::make(std::vector<std::uint32_t>(n.size(), m), n));
    EqualRowsBounds out;
    out.singleton.name = "singleton";
    out.hamming.name = "hamming";
    out.plotkin.name = "plotkin";
    out.elias.name = "elias";

    const std::size_t N = std::accumulate(n.begin(), n.end(), std::size_t{0});
    const Big Q = qpow(q, m);
    const Big QN = big_pow(Q, static_cast<unsigned long>(N));

    if (d < 1 || d > N) {
        for (BoundReport* r : {&out.singleton, &out.hamming, &out.plotkin, &out.elias}) {
            r->applicable = false;
            r->reason = "not applicable: d outside [1, N]";
        }
        return out;
    }

    out.singleton.value = big_pow(Q, static_cast<unsigned long>(N - d + 1));

    // Hamming: |C| <= Q^N / sum_{j<=floor((d-1)/2)} C(N,j)(Q-1)^j.
    {
        const std::size_t t = (d - 1) / 2;
        Big denom = 0;
        for (std::size_t j = 0; j <= t; ++j)
            denom += binom(static_cast<long>(N), static_cast<long>(j)) *
                     big_pow(Q - 1, static_cast<unsigned long>(j));
        out.hamming.value = floor_div(QN, denom);
    }

    // Plotkin: requires d*Q > (Q-1)*N.
    {
        Big dq = Big(d) * Q;
        Big rhs = (Q - 1) * N;
        if (dq > rhs) {
            out.plotkin.value = floor_div(dq, dq - rhs);
        } else {
            out.plotkin.applicable = false;
            out.plotkin.reason = "not applicable: d <= (q^m - 1) N / q^m";
        }
    }

    // Elias: min over integer w with w*Q <= N*(Q-1) and positive denominator of
    // floor( N(Q-1)d Q^N / ((Q w^2 + N(Q-1)(d-2w)) * sum_{j<=w} C(N,j)(Q-1)^j) ).
    {
        Big best = -1;
        Big vol = 0; // running sum_{j<=w} C(N,j)(Q-1)^j
        for (std::size_t w = 0; Big(w) * Q <= Big(N) * (Q - 1); ++w) {
            vol += binom(static_cast<long>(N), static_cast<long>(w)) *
                   big_pow(Q - 1, static_cast<unsigned long>(w));
            Big shell = Q * w * w + Big(N) * (Q - 1) * (Big(d) - 2 * Big(w));
            if (shell <= 0) continue;
            Big val = floor_div(Big(N) * (Q - 1) * d * QN, shell * vol);
            out.elias_table.emplace_back(w, val);
            if (best < 0 || val < best) best = val;
        }
        if (best < 0) {
            out.elias.applicable = false;
            out.elias.reason = "not applicable: no admissible w";
        } else {
            out.elias.value = best;
        }
    }
    return out;
}

SpherePackingResult sphere_packing_bound(const Shape& s, std::uint64_t q, std::size_t d) {
    require_normalized(s);
    if (d < 1) throw std::invalid_argument("d out of range");
    const std::uint32_t r = static_cast<std::uint32_t>((d - 1) / 2);
    const Big ambient = qpow(q, static_cast<unsigned long>(s.ambient_dim()));
    SpherePackingResult out;
    if (r == 0) {
        out.value = ambient;
        out.exact_ball = true;
        return out;
    }
    Big ball;
    try {
        BallSize b = ball_size(s, q, r, BallMode::exact);
        ball = b.lower;
        out.exact_ball = true;
    } catch (const InfeasibleError&) {
        BallSize b = ball_size(s, q, r, BallMode::bounds);
        ball = b.lower; // lower ball estimate keeps the quotient a valid upper bound
        out.exact_ball = b.exact;
    }
    out.value = floor_div(ambient, ball);
    return out;
}

Big projective_sphere_packing(const Shape& s, std::uint64_t q, std::size_t d) {
    require_normalized(s);
    const std::size_t N = s.total_cols();
    const std::size_t l = s.blocks();
    if (d >= 3 && d <= N) {
        std::size_t prefix = 0;
        for (std::size_t j = 1; j < l; ++j) { // 1-based j in [1, l-1]
            prefix += s.n(j - 1);
            if (d - 3 < prefix) break;
            std::size_t delta = d - 3 - prefix;
            if (delta < 1 || delta + 1 > s.n(j)) continue;
            // n' equals n except n'_{j+1} = n_{j+1} - delta.
            const std::uint32_t np = s.n(j) - static_cast<std::uint32_t>(delta);
            std::size_t exp = (std::size_t)s.m(j) * np;
            for (std::size_t i = j + 1; i < l; ++i) exp += (std::size_t)s.m(i) * s.n(i);
            Big num = qpow(q, static_cast<unsigned long>(exp));
            Big den = 1 + Big(l - j) * (Big(np) * (qpow(q, s.m(j - 1)) - 1) +
                                        Big(s.m(j)) * (qpow(q, np) - 1) -
                                        Big(s.m(j)) * np * (Big(q) - 1));
            return floor_div(num, den);
        }
    }
    throw std::invalid_argument("not applicable: no valid (j, delta)");
}

EllBounds ell_bounds(std::uint64_t q, std::uint32_t n, std::size_t d) {
    if (d < 3) throw std::invalid_argument("d < 3 unsupported");
    if (n < 1) throw std::invalid_argument("n must be positive");
    EllBounds out;
    const std::uint32_t delta = static_cast<std::uint32_t>((d - 3) % n);
    const Big shift = Big((d - 3) / n) + 1;

    Big num = qpow(q, 2ul * n) - 1 - Big(n) * (qpow(q, n - delta) - 1) -
              Big(n - delta) * (qpow(q, n) - 1) + Big(n) * (n - delta) * (Big(q) - 1);
    out.eq4 = floor_div(num, s1_exact(q, n, n)) + shift;
    out.eq5 = floor_div(2 * qpow(q, n), Big(3) * n) + shift;
    out.eq_mds_derived = floor_div(qpow(q, n) + Big(d) - 2, Big(n));
    out.in_tight_regime =
        (q >= 4 && n >= 2) || (q == 3 && n >= 3) || (q == 2 && n >= 4);
    return out;
}

PerfectFeasibility perfect_feasibility(const Shape& s, std::uint64_t q, std::size_t d) {
    require_normalized(s);
    if (d % 2 == 0) throw std::invalid_argument("d even");
    PerfectFeasibility out;

    bool square_equal = true;
    for (std::size_t i = 0; i < s.blocks(); ++i)
        if (s.m(i) != s.n(i) || s.n(i) != s.n(0)) square_equal = false;

    if (square_equal && d == 3) {
        const std::uint32_t n = s.n(0);
        const std::size_t l = s.blocks();
        if (q % 2 == 0 && (n % 2 == 0 || l % 2 == 0)) {
            out.infeasible = true;
            out.reason = "parity: 1 + l*n*(2(q^n - 1) - n(q - 1)) is odd and exceeds 1";
            return out;
        }
    }

    out.reason = "unknown";
    const std::uint32_t r = static_cast<std::uint32_t>((d - 1) / 2);
    try {
        BallSize b = ball_size(s, q, r, BallMode::exact);
        out.divisibility_known = true;
        out.divides = qpow(q, static_cast<unsigned long>(s.ambient_dim())) % b.value() == 0;
    } catch (const InfeasibleError&) {
        out.divisibility_known = false;
    }
    return out;
}

std::size_t gv_dimension(const Shape& s, std::uint64_t q, std::size_t d) {
    require_normalized(s);
    if (d < 1 || d > s.total_cols()) throw std::invalid_argument("d out of range");
    Big ball = ball_size(s, q, static_cast<std::uint32_t>(d - 1), BallMode::exact).value();
    Big target = ceil_div(qpow(q, static_cast<unsigned long>(s.ambient_dim())), ball);
    std::size_t k = 0;
    Big pw = 1;
    while (pw < target) {
        pw *= q;
        ++k;
    }
    return k;
}

LinearCode gv_greedy_witness(const Shape& s, const Field& F, std::size_t d) {
    require_normalized(s);
    const std::size_t dim = s.ambient_dim();
    const std::uint64_t q = F.q();
    Big total_big = qpow(q, static_cast<unsigned long>(dim));
    if (total_big > (1u << 18)) throw InfeasibleError("witness search infeasible");
    const std::uint64_t total = total_big.convert_to<std::uint64_t>();

    auto unpack = [&](std::uint64_t packed) {
        std::vector<Elem> v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = static_cast<Elem>(packed % q);
            packed /= q;
        }
        return v;
    };
    auto pack = [&](const std::vector<Elem>& v) {
        std::uint64_t packed = 0;
        for (std::size_t i = dim; i-- > 0;) packed = packed * q + v[i];
        return packed;
    };

    std::vector<char> in_span(total, 0);
    in_span[0] = 1;
    std::vector<std::vector<Elem>> span{std::vector<Elem>(dim, 0)};
    Mat basis(0, dim);

    for (std::uint64_t cand = 1; cand < total; ++cand) {
        if (in_span[cand]) continue;
        const std::vector<Elem> v = unpack(cand);
        bool ok = true;
        std::vector<Elem> w(dim);
        for (Elem alpha = 1; alpha < q && ok; ++alpha)
            for (const auto& c : span) {
                for (std::size_t i = 0; i < dim; ++i) w[i] = F.add(F.mul(alpha, v[i]), c[i]);
                if (mc_weight(unflatten(s, w)) < d) {
                    ok = false;
                    break;
                }
            }
        if (!ok) continue;
        const std::size_t old_size = span.size();
        for (Elem alpha = 1; alpha < q; ++alpha)
            for (std::size_t ci = 0; ci < old_size; ++ci) {
                for (std::size_t i = 0; i < dim; ++i)
                    w[i] = F.add(F.mul(alpha, v[i]), span[ci][i]);
                in_span[pack(w)] = 1;
                span.push_back(w);
            }
        basis.a.insert(basis.a.end(), v.begin(), v.end());
        ++basis.rows;
    }
    return LinearCode::from_generator(s, F, std::move(basis));
}

} // namespace mcm
