#pragma once

#include <cstdint>
#include <vector>

namespace mcm {

// Field element encoding: base-p digits of the representative polynomial,
// packed little-endian into one integer (constant term = least significant
// digit).  Values are always < p^e.
using Elem = std::uint32_t;

// F_{p^e} with an explicit irreducible modulus.  Immutable after
// construction; all operations are pure.  Sizes are capped at 2^20.
class Field {
public:
    // Default modulus: the lexicographically smallest (by packed encoding)
    // monic irreducible of degree e over F_p; for e = 1 this is x.
    static Field make(std::uint32_t p, std::uint32_t e);
    // modulus: e+1 coefficients, constant term first, monic.
    static Field make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // Residue class of x modulo the modulus (0 when e = 1 with modulus x).
    Elem generator() const { return generator_; }
    // Smallest element encoding of multiplicative order q-1.
    Elem primitive_element() const { return primitive_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws std::invalid_argument("division by zero") for a = 0
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;
    // v mod p as a prime-subfield scalar.
    Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }
    bool is_valid(Elem a) const { return a < q_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    friend class Extension; // Extension aggregates two Fields before setup()
    Field() = default;
    Elem add_nt(Elem a, Elem b) const;
    Elem mul_nt(Elem a, Elem b) const;
    void build_tables();
    void find_primitive();

    std::uint32_t p_ = 0, e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem generator_ = 0, primitive_ = 0;
    bool tables_ = false;
    std::vector<Elem> add_tab_, mul_tab_, inv_tab_;
};

// F_{q^s} over F_q = base, realized as F_{p^{e*s}}.  The embedding maps the
// base generator to the smallest root of the base modulus inside the top
// field (identity on encodings when the base is a prime field with modulus
// x).  The ordered basis defaults to (1, g, ..., g^{s-1}) for the top-field
// generator g; independence over the base is verified at construction.
class Extension {
public:
    static Extension make(const Field& base, std::uint32_t s);
    static Extension make(const Field& base, std::uint32_t s, std::vector<Elem> basis_top);

    const Field& base() const { return base_; }
    const Field& top() const { return top_; }
    std::uint32_t s() const { return s_; }
    const std::vector<Elem>& basis() const { return basis_; }

    Elem embed(Elem a) const;   // base -> top, a field homomorphism
    bool in_base(Elem c) const; // c fixed by x -> x^q
    Elem to_base(Elem c) const; // inverse of embed; throws if c not embedded

    // Coordinates over the base w.r.t. the ordered basis: c = sum embed(v_j) * basis_j.
    std::vector<Elem> coords(Elem c) const;
    Elem from_coords(const std::vector<Elem>& v) const;

    // c^(q^u) with q the base size; u is reduced mod s.
    Elem frobenius(Elem c, std::uint64_t u) const;

private:
    Extension() = default;
    void setup(std::vector<Elem> basis_top);

    Field base_, top_;
    std::uint32_t s_ = 0;
    Elem root_ = 0;
    std::vector<Elem> basis_;
    std::vector<Elem> embed_tab_;
    std::vector<Elem> coord_inv_; // (es x es) inverse over F_p, row-major
};

// Convenience alias matching the documented operation name.
inline Field field_make(std::uint32_t p, std::uint32_t e) { return Field::make(p, e); }
inline Field field_make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    return Field::make(p, e, std::move(modulus));
}

// Factors v = p^e with p prime; throws std::invalid_argument("not a prime power") otherwise.
Field field_from_order(std::uint64_t v);

} // namespace mcm
