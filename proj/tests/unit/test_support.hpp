#pragma once

#include <random>

#include "diskspec/bivar_poly.hpp"

namespace diskspec::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rational(num(rng), den(rng));
}

// Up to `terms` monomials with dz, dzbar <= max_degree.
inline BivarPoly random_poly(std::mt19937_64& rng, std::uint32_t max_degree = 6, int terms = 6) {
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<int> count(0, terms);
    BivarPoly p;
    for (int i = count(rng); i > 0; --i) p += BivarPoly::monomial({deg(rng), deg(rng)}, random_rational(rng));
    return p;
}

}  // namespace diskspec::testing
