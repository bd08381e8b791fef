#ifndef BPFO_TESTS_HELPERS_HPP
#define BPFO_TESTS_HELPERS_HPP

#include <random>
#include <utility>
#include <vector>

#include "bpfo/octonion.hpp"
#include "bpfo/quadratic.hpp"
#include "bpfo/rational.hpp"

namespace bpfo::testing {

/// The verification grid: signs, both parities, non-integers; (2, -2)
/// is the deliberate degenerate pair (ab = -4).
inline std::vector<std::pair<Rational, Rational>> parameter_grid() {
    const std::vector<Rational> as{Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                   Rational(-1), Rational(-3)};
    const std::vector<Rational> bs{Rational(1), Rational(2), Rational(3), Rational(5),
                                   Rational(-2)};
    std::vector<std::pair<Rational, Rational>> grid;
    for (const auto& a : as)
        for (const auto& b : bs)
            grid.emplace_back(a, b);
    return grid;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Rational(num(rng), den(rng));
}

inline Octonion<Rational> random_octonion(std::mt19937& rng) {
    std::array<Rational, 8> c;
    for (auto& x : c)
        x = random_rational(rng);
    return Octonion<Rational>(std::move(c));
}

inline QuadraticElement random_quadratic(std::mt19937& rng, const Rational& disc) {
    return {random_rational(rng), random_rational(rng), disc};
}

} // namespace bpfo::testing

#endif
