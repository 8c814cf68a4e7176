#include "mcm/ffield.hpp"

#include <algorithm>
#include <stdexcept>

#include "mcm/errors.hpp"
#include "mcm/linalg.hpp"

namespace mcm {
namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 20;
constexpr std::uint64_t kTableLimit = 1024;

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint32_t>; // little-endian coefficients mod p

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod m over F_p; m monic.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint64_t sub = (std::uint64_t)m[i] * lead % p;
                std::uint32_t& c = a[i + shift];
                c = static_cast<std::uint32_t>((c + p - sub) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

bool poly_divides(const Poly& div, const Poly& m, std::uint32_t p) {
    return poly_mod(m, div, p).empty();
}

bool poly_irreducible(const Poly& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly cand(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (poly_divides(cand, m, p)) return false;
        }
    }
    return true;
}

Poly default_modulus(std::uint32_t p, std::uint32_t e) {
    if (e == 1) return {0, 1}; // x
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly cand(e + 1, 0);
        std::uint64_t v = low;
        for (std::uint32_t i = 0; i < e; ++i) {
            cand[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        cand[e] = 1;
        if (poly_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible modulus found"); // unreachable
}

Poly decode_elem(Elem a, std::uint32_t p, std::uint32_t e) {
    Poly d(e, 0);
    for (std::uint32_t i = 0; i < e && a; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem encode_poly(const Poly& d, std::uint32_t p) {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = static_cast<Elem>(v * p + d[i]);
    return v;
}

} // namespace

Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("not prime");
    if (e < 1) throw std::invalid_argument("degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw InfeasibleError("field too large");
    }
    return make(p, e, default_modulus(p, e));
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("not prime");
    if (e < 1) throw std::invalid_argument("degree must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw InfeasibleError("field too large");
    }
    for (auto& c : modulus) c %= p;
    if (modulus.size() != e + 1u || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    if (!poly_irreducible(modulus, p)) throw std::invalid_argument("reducible modulus");

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;
    f.modulus_ = std::move(modulus);
    f.generator_ = encode_poly(poly_mod({0, 1}, f.modulus_, p), p);
    if (q <= kTableLimit) f.build_tables();
    f.find_primitive();
    return f;
}

Elem Field::add_nt(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>(((std::uint64_t)a + b) % p_);
    Elem r = 0, mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

Elem Field::mul_nt(Elem a, Elem b) const {
    if (e_ == 1) return static_cast<Elem>((std::uint64_t)a * b % p_);
    Poly da = decode_elem(a, p_, e_), db = decode_elem(b, p_, e_);
    Poly prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + (std::uint64_t)da[i] * db[j]) % p_);
    }
    return encode_poly(poly_mod(std::move(prod), modulus_, p_), p_);
}

void Field::build_tables() {
    const std::size_t q = static_cast<std::size_t>(q_);
    add_tab_.resize(q * q);
    mul_tab_.resize(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b <= a; ++b) {
            Elem s = add_nt(static_cast<Elem>(a), static_cast<Elem>(b));
            Elem m = mul_nt(static_cast<Elem>(a), static_cast<Elem>(b));
            add_tab_[a * q + b] = add_tab_[b * q + a] = s;
            mul_tab_[a * q + b] = mul_tab_[b * q + a] = m;
        }
    tables_ = true;
    inv_tab_.assign(q, 0);
    for (std::size_t a = 1; a < q; ++a)
        inv_tab_[a] = pow(static_cast<Elem>(a), q_ - 2);
}

Elem Field::add(Elem a, Elem b) const {
    return tables_ ? add_tab_[(std::size_t)a * q_ + b] : add_nt(a, b);
}

Elem Field::neg(Elem a) const {
    if (a == 0) return 0;
    Elem r = 0, mul = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        r += (d ? p_ - d : 0) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    return tables_ ? mul_tab_[(std::size_t)a * q_ + b] : mul_nt(a, b);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("division by zero");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, q_ - 2);
}

void Field::find_primitive() {
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t rem = q_ - 1;
    for (std::uint64_t d = 2; d * d <= rem; ++d)
        if (rem % d == 0) {
            prime_factors.push_back(d);
            while (rem % d == 0) rem /= d;
        }
    if (rem > 1) prime_factors.push_back(rem);
    for (Elem a = 1; a < q_; ++a) {
        bool ok = true;
        for (std::uint64_t f : prime_factors)
            if (pow(a, (q_ - 1) / f) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            primitive_ = a;
            return;
        }
    }
    throw std::logic_error("no primitive element found"); // unreachable
}

Field field_from_order(std::uint64_t v) {
    if (v < 2) throw std::invalid_argument("not a prime power");
    std::uint64_t p = v;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0;
    std::uint64_t w = v;
    while (w > 1) {
        if (w % p != 0) throw std::invalid_argument("not a prime power");
        w /= p;
        ++e;
    }
    return Field::make(static_cast<std::uint32_t>(p), e);
}

Extension Extension::make(const Field& base, std::uint32_t s) {
    Extension ext;
    ext.base_ = base;
    ext.s_ = s;
    ext.top_ = Field::make(base.p(), base.e() * s);
    ext.setup({});
    return ext;
}

Extension Extension::make(const Field& base, std::uint32_t s, std::vector<Elem> basis_top) {
    Extension ext;
    ext.base_ = base;
    ext.s_ = s;
    ext.top_ = Field::make(base.p(), base.e() * s);
    ext.setup(std::move(basis_top));
    return ext;
}

void Extension::setup(std::vector<Elem> basis_top) {
    if (s_ < 1) throw std::invalid_argument("degree must be positive");
    const std::uint32_t p = base_.p();
    const std::uint32_t e = base_.e();

    // Smallest root of the base modulus in the top field.
    const auto& mod = base_.modulus();
    bool found = false;
    for (Elem c = 0; c < top_.q(); ++c) {
        Elem acc = 0;
        for (std::size_t i = mod.size(); i-- > 0;)
            acc = top_.add(top_.mul(acc, c), top_.from_int(mod[i]));
        if (acc == 0) {
            root_ = c;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("base modulus has no root in the top field");

    embed_tab_.resize(base_.q());
    for (Elem a = 0; a < base_.q(); ++a) {
        Elem acc = 0, v = a;
        std::vector<std::uint32_t> digits(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            digits[i] = v % p;
            v /= p;
        }
        for (std::size_t i = e; i-- > 0;)
            acc = top_.add(top_.mul(acc, root_), top_.from_int(digits[i]));
        embed_tab_[a] = acc;
    }

    if (basis_top.empty()) {
        Elem g = top_.generator();
        for (std::uint32_t j = 0; j < s_; ++j) basis_top.push_back(top_.pow(g, j));
    }
    if (basis_top.size() != s_) throw std::invalid_argument("basis length mismatch");
    basis_ = std::move(basis_top);

    // Coordinate matrix over F_p: column (j*e + t) = digits of
    // embed(x^t) * basis_j; invertibility certifies basis independence.
    const std::uint32_t es = e * s_;
    Field prime = Field::make(p, 1);
    Mat M(es, es);
    for (std::uint32_t j = 0; j < s_; ++j)
        for (std::uint32_t t = 0; t < e; ++t) {
            Elem xt = 1;
            for (std::uint32_t i = 0; i < t; ++i) xt = static_cast<Elem>(xt * p);
            Elem col_elem = top_.mul(embed_tab_[xt], basis_[j]);
            Elem v = col_elem;
            for (std::uint32_t row = 0; row < es; ++row) {
                M.at(row, j * e + t) = v % p;
                v /= p;
            }
        }
    auto inv = mat_inverse(prime, M);
    if (!inv) throw std::invalid_argument("basis not linearly independent over the base field");
    coord_inv_.assign(inv->a.begin(), inv->a.end());
}

Elem Extension::embed(Elem a) const { return embed_tab_[a]; }

bool Extension::in_base(Elem c) const { return top_.pow(c, base_.q()) == c; }

Elem Extension::to_base(Elem c) const {
    // embed is injective and embed_tab_ is small; linear scan suffices here
    // because the table is only consulted for desk-scale fields.
    for (Elem a = 0; a < base_.q(); ++a)
        if (embed_tab_[a] == c) return a;
    throw std::invalid_argument("element not in the embedded base field");
}

std::vector<Elem> Extension::coords(Elem c) const {
    const std::uint32_t p = base_.p();
    const std::uint32_t e = base_.e();
    const std::uint32_t es = e * s_;
    std::vector<std::uint32_t> digits(es, 0);
    Elem v = c;
    for (std::uint32_t i = 0; i < es; ++i) {
        digits[i] = v % p;
        v /= p;
    }
    std::vector<Elem> out(s_, 0);
    for (std::uint32_t j = 0; j < s_; ++j) {
        Elem enc = 0, mul = 1;
        for (std::uint32_t t = 0; t < e; ++t) {
            std::uint64_t y = 0;
            const std::uint32_t row = j * e + t;
            for (std::uint32_t k = 0; k < es; ++k)
                y += (std::uint64_t)coord_inv_[row * es + k] * digits[k];
            enc += static_cast<Elem>(y % p) * mul;
            mul *= p;
        }
        out[j] = enc;
    }
    return out;
}

Elem Extension::from_coords(const std::vector<Elem>& v) const {
    if (v.size() != s_) throw std::invalid_argument("length mismatch");
    Elem acc = 0;
    for (std::uint32_t j = 0; j < s_; ++j)
        acc = top_.add(acc, top_.mul(embed_tab_[v[j]], basis_[j]));
    return acc;
}

Elem Extension::frobenius(Elem c, std::uint64_t u) const {
    u %= s_;
    for (std::uint64_t i = 0; i < u; ++i) c = top_.pow(c, base_.q());
    return c;
}

} // namespace mcm
