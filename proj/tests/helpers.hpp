#pragma once

#include <cstdint>
#include <vector>

#include "mcm/lincode.hpp"
#include "mcm/mctuple.hpp"

namespace testutil {

using namespace mcm;

// Row space of `rows` random ambient vectors; dimension is whatever the RREF
// yields, which is what the predicates under test should cope with anyway.
inline LinearCode random_code(const Shape& s, const Field& F, std::size_t rows, Rng& rng) {
    std::vector<std::vector<Elem>> gen(rows, std::vector<Elem>(s.ambient_dim()));
    for (auto& row : gen)
        for (Elem& x : row) x = static_cast<Elem>(rng.below(F.q()));
    return LinearCode::make(s, F, gen);
}

// Keeps drawing rows until the requested dimension is hit (small spaces only).
inline LinearCode random_code_of_dim(const Shape& s, const Field& F, std::size_t dim, Rng& rng) {
    while (true) {
        LinearCode c = random_code(s, F, dim, rng);
        if (c.dim() == dim) return c;
    }
}

inline MatrixTuple tuple_of(const Shape& s, const std::vector<Elem>& flat) {
    return unflatten(s, flat);
}

} // namespace testutil
