#include "mcm/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcm {

void NestParams::validate() const {
    if (u < 1 || r < 1 || s < 1 || ell < 1)
        throw std::invalid_argument("nesting parameters must be positive");
    if (s > r) throw std::invalid_argument("nesting requires s <= r");
}

Shape component_shape(const NestParams& p) {
    p.validate();
    return Shape::make(std::vector<std::uint32_t>(p.t(), p.r),
                       std::vector<std::uint32_t>(p.t(), p.s));
}

Shape nested_shape(const NestParams& p) {
    p.validate();
    return Shape::make(std::vector<std::uint32_t>(p.ell, p.m()),
                       std::vector<std::uint32_t>(p.ell, p.n()));
}

MatrixTuple nest_phi(const NestParams& p, const std::vector<MatrixTuple>& tuples) {
    const Shape comp = component_shape(p);
    if (tuples.size() != p.u) throw std::invalid_argument("shape mismatch");
    for (const MatrixTuple& t : tuples)
        if (!(t.shape == comp)) throw std::invalid_argument("shape mismatch");

    MatrixTuple out = MatrixTuple::zero(nested_shape(p));
    for (std::uint32_t i = 0; i < p.ell; ++i)
        for (std::uint32_t a = 0; a < p.u; ++a)
            for (std::uint32_t b = 0; b < p.u; ++b) {
                const std::uint32_t w = (b + p.u - a) % p.u; // (b - a) mod u
                const Mat& src = tuples[w].blocks[i * p.u + a];
                for (std::uint32_t x = 0; x < p.r; ++x)
                    for (std::uint32_t y = 0; y < p.s; ++y)
                        out.blocks[i].at(a * p.r + x, b * p.s + y) = src.at(x, y);
            }
    return out;
}

std::vector<MatrixTuple> unnest(const NestParams& p, const MatrixTuple& C) {
    if (!(C.shape == nested_shape(p))) throw std::invalid_argument("shape mismatch");
    std::vector<MatrixTuple> out(p.u, MatrixTuple::zero(component_shape(p)));
    for (std::uint32_t i = 0; i < p.ell; ++i)
        for (std::uint32_t a = 0; a < p.u; ++a)
            for (std::uint32_t b = 0; b < p.u; ++b) {
                const std::uint32_t w = (b + p.u - a) % p.u;
                Mat& dst = out[w].blocks[i * p.u + a];
                for (std::uint32_t x = 0; x < p.r; ++x)
                    for (std::uint32_t y = 0; y < p.s; ++y)
                        dst.at(x, y) = C.blocks[i].at(a * p.r + x, b * p.s + y);
            }
    return out;
}

LinearCode nested_code(const NestParams& p, const LinearCode& component) {
    if (!(component.shape() == component_shape(p)))
        throw std::invalid_argument("shape mismatch");
    std::vector<std::vector<Elem>> rows;
    for (std::uint32_t w = 0; w < p.u; ++w)
        for (std::size_t r = 0; r < component.dim(); ++r) {
            std::vector<MatrixTuple> slot(p.u, MatrixTuple::zero(component.shape()));
            slot[w] = component.row_tuple(r);
            rows.push_back(flatten(nest_phi(p, slot)));
        }
    return LinearCode::make(nested_shape(p), component.field(), rows);
}

std::vector<MultiCover> lift_cover(const NestParams& p, const MultiCover& X) {
    const Shape nest = nested_shape(p);
    if (X.rows.size() != nest.blocks() || X.cols.size() != nest.blocks())
        throw std::invalid_argument("shape mismatch");
    const Shape comp = component_shape(p);
    std::vector<MultiCover> lifted(p.u, MultiCover::none(comp));
    for (std::uint32_t i = 0; i < p.ell; ++i) {
        for (std::uint32_t rho : X.rows[i]) {
            if (rho >= p.m()) throw std::invalid_argument("shape mismatch");
            const std::uint32_t a = rho / p.r;
            for (std::uint32_t w = 0; w < p.u; ++w)
                lifted[w].rows[i * p.u + a].push_back(rho - a * p.r);
        }
        for (std::uint32_t gamma : X.cols[i]) {
            if (gamma >= p.n()) throw std::invalid_argument("shape mismatch");
            const std::uint32_t b = gamma / p.s;
            for (std::uint32_t w = 0; w < p.u; ++w) {
                const std::uint32_t a = (b + p.u - w) % p.u; // (b - w) mod u
                lifted[w].cols[i * p.u + a].push_back(gamma - b * p.s);
            }
        }
    }
    for (MultiCover& mc : lifted) {
        for (auto& v : mc.rows) std::sort(v.begin(), v.end());
        for (auto& v : mc.cols) std::sort(v.begin(), v.end());
    }
    return lifted;
}

LrsParams LrsParams::make(const Field& base, std::uint32_t s, std::uint32_t t,
                          std::uint32_t k) {
    Extension ext = Extension::make(base, s);
    return LrsParams{base, s, t, k, ext.basis(), ext.top().primitive_element()};
}

LrsCode lrs_generator(const LrsParams& params) {
    if (params.t < 1) throw std::invalid_argument("t must be positive");
    if (params.k < 1 || params.k > (std::uint64_t)params.s * params.t)
        throw std::invalid_argument("k out of range");
    Extension ext = Extension::make(params.base, params.s);
    if (params.beta.size() != params.s) throw std::invalid_argument("length mismatch");

    const std::uint64_t q = params.base.q();

    LrsCode out{std::move(ext), params, Mat(params.k, (std::size_t)params.t * params.s), true, ""};
    const Field& top = out.ext.top();
    const std::uint64_t order = top.q() - 1;
    if (q <= params.t) {
        out.msrd_hypothesis_ok = false;
        out.warning = "q <= t violates MSRD hypothesis";
    }

    for (std::uint32_t u0 = 0; u0 < params.k; ++u0) {
        // 1 + q + ... + q^(u0-1), reduced into the multiplicative order.
        Big geom = 0;
        Big qp = 1;
        for (std::uint32_t i = 0; i < u0; ++i) {
            geom += qp;
            qp *= q;
        }
        const std::uint64_t exp_unit = static_cast<std::uint64_t>(geom % order);
        for (std::uint32_t i = 0; i < params.t; ++i) {
            const Elem gpow =
                top.pow(params.gamma, (static_cast<std::uint64_t>(i) * exp_unit) % order);
            for (std::uint32_t j = 0; j < params.s; ++j)
                out.generator.at(u0, (std::size_t)i * params.s + j) =
                    top.mul(out.ext.frobenius(params.beta[j], u0), gpow);
        }
    }
    return out;
}

Mat matrix_repr(const Extension& ext, const std::vector<Elem>& c) {
    const std::uint32_t s = ext.s();
    if (c.size() != s) throw std::invalid_argument("length mismatch");
    Mat M(s, s);
    for (std::uint32_t j = 0; j < s; ++j) {
        std::vector<Elem> co = ext.coords(c[j]);
        for (std::uint32_t i = 0; i < s; ++i) M.at(i, j) = co[i];
    }
    return M;
}

MatrixTuple matrix_repr_tuple(const Extension& ext, std::uint32_t t,
                              const std::vector<Elem>& codeword) {
    const std::uint32_t s = ext.s();
    if (codeword.size() != (std::size_t)t * s) throw std::invalid_argument("length mismatch");
    MatrixTuple out = MatrixTuple::zero(Shape::make(std::vector<std::uint32_t>(t, s),
                                                    std::vector<std::uint32_t>(t, s)));
    for (std::uint32_t i = 0; i < t; ++i) {
        std::vector<Elem> block(codeword.begin() + (std::size_t)i * s,
                                codeword.begin() + (std::size_t)(i + 1) * s);
        out.blocks[i] = matrix_repr(ext, block);
    }
    return out;
}

LinearCode lrs_matrix_code(const LrsCode& code) {
    const Extension& ext = code.ext;
    const Field& top = ext.top();
    const std::uint32_t s = code.params.s, t = code.params.t;
    std::vector<std::vector<Elem>> rows;
    for (std::uint32_t u0 = 0; u0 < code.params.k; ++u0)
        for (std::uint32_t b = 0; b < s; ++b) {
            std::vector<Elem> scaled((std::size_t)t * s);
            for (std::size_t c = 0; c < scaled.size(); ++c)
                scaled[c] = top.mul(ext.basis()[b], code.generator.at(u0, c));
            rows.push_back(flatten(matrix_repr_tuple(ext, t, scaled)));
        }
    Shape shape = Shape::make(std::vector<std::uint32_t>(t, s), std::vector<std::uint32_t>(t, s));
    return LinearCode::make(shape, code.params.base, rows);
}

SrbchResult srbch_dimension_bound(std::uint64_t q0, std::uint32_t r, std::uint32_t s,
                                  std::uint32_t u, std::uint32_t ell, std::uint64_t delta,
                                  std::uint64_t b_offset) {
    if (q0 < 2 || r < 1 || s < 1 || u < 1 || ell < 1)
        throw std::invalid_argument("parameters must be positive (q0 >= 2)");
    const std::uint64_t n = (std::uint64_t)u * s;
    const std::uint64_t t = (std::uint64_t)u * ell;
    if (delta > (std::uint64_t)ell * n) throw std::invalid_argument("delta out of range");

    auto pow_mod = [](std::uint64_t base, std::uint64_t e, std::uint64_t mod) {
        if (mod == 1) return std::uint64_t{0};
        std::uint64_t acc = 1 % mod;
        base %= mod;
        while (e) {
            if (e & 1) acc = (unsigned __int128)acc * base % mod;
            base = (unsigned __int128)base * base % mod;
            e >>= 1;
        }
        return acc;
    };

    SrbchResult out;
    std::vector<std::string> failed;
    if (std::gcd(t, (std::uint64_t)s) != 1) failed.push_back("gcd(t, s) != 1");
    if (std::gcd(t, q0) != 1) failed.push_back("gcd(t, q) != 1");
    if (pow_mod(q0, r, t) != 1 % t) failed.push_back("t does not divide q - 1");
    if (!failed.empty()) {
        out.applicable = false;
        out.reason = "hypotheses violated: ";
        for (std::size_t i = 0; i < failed.size(); ++i)
            out.reason += (i ? ", " : "") + failed[i];
        return out;
    }

    // q0^s-cyclotomic cosets modulo t.
    const std::uint64_t mult = pow_mod(q0, s, t);
    std::vector<char> seen(t, 0);
    for (std::uint64_t x = 0; x < t; ++x) {
        if (seen[x]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t y = x;
        do {
            seen[y] = 1;
            coset.push_back(static_cast<std::uint32_t>(y));
            y = y * mult % t;
        } while (y != x);
        out.cosets.push_back(std::move(coset));
    }

    Big sum_min = 0;
    for (const auto& coset : out.cosets) {
        std::uint64_t ki = 0;
        for (std::uint64_t j = 0; delta >= 2 && j <= delta - 2; ++j) {
            const std::uint32_t rep = static_cast<std::uint32_t>((b_offset + j) % t);
            if (std::find(coset.begin(), coset.end(), rep) != coset.end()) ++ki;
        }
        sum_min += std::min<Big>(Big(s) * coset.size(), Big(r) * ki);
    }
    const Big full = Big(ell) * n * n;
    out.eq7 = full - Big(n) * sum_min;
    out.eq8 = full - Big(n) * r * (Big(delta) - 1);
    return out;
}

} // namespace mcm
