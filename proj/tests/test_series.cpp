#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bpfo/series.hpp"
#include "helpers.hpp"

using namespace bpfo;

TEST_CASE("laurent series bookkeeping") {
    // (x^{-1} + x) * (1 + x) = x^{-1} + 1 + x + x^2
    const RationalSeries f(-1, 4, {Rational(1), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)});
    const RationalSeries g(0, 4, {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    const RationalSeries p = f * g;
    CHECK(p.min_degree() == -1);
    CHECK(p.order() == 3); // min(4+0, 4-1)
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(-5) == 0); // below the window is identically zero
    CHECK_THROWS_AS((void)p.coeff(4), Error);

    CHECK(f.shifted(2).min_degree() == 1);
    CHECK_FALSE(f.principal_part_zero());
    CHECK(g.principal_part_zero());
}

TEST_CASE("division by a unit polynomial inverts multiplication") {
    const std::vector<Rational> den{Rational(1), Rational(-3), Rational(0), Rational(2)};
    const RationalSeries f(0, 12, [] {
        std::vector<Rational> c;
        for (int i = 0; i <= 12; ++i)
            c.emplace_back(i * i - 5, i + 1);
        return c;
    }());
    const RationalSeries q = f.divided_by_unit_poly(den);
    const RationalSeries den_series(0, 12, [&] {
        std::vector<Rational> c(13, Rational(0));
        for (std::size_t k = 0; k < den.size(); ++k)
            c[k] = den[k];
        return c;
    }());
    CHECK(q * den_series == f);
    CHECK_THROWS_AS(f.divided_by_unit_poly({Rational(0), Rational(1)}), DivisionByZero);
}

TEST_CASE("series_f matches the odd-subscript Fibonacci numbers") {
    for (const auto& [a, b] : bpfo::testing::parameter_grid()) {
        SeqCache cache(make_context(a, b));
        const RationalSeries f = series_f(cache.params(), 33);
        for (std::int64_t n = 0; n <= 33; ++n) {
            if (n % 2 == 1)
                CHECK(f.coeff(n) == cache.fib_q(n));
            else
                CHECK(f.coeff(n) == 0);
        }
    }
    // low-order coefficients by one step of long division
    const SeqParams p = make_context(Rational(2), Rational(3));
    const RationalSeries f = series_f(p, 4);
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(2) == 0);
    CHECK(f.coeff(3) == p.ab + 1);
}

TEST_CASE("series_L1 matches the odd-subscript Lucas numbers") {
    for (const auto& [a, b] : bpfo::testing::parameter_grid()) {
        SeqCache cache(make_context(a, b));
        const RationalSeries L = series_L1(cache.params(), 33);
        for (std::int64_t n = 0; n <= 33; ++n) {
            if (n % 2 == 1)
                CHECK(L.coeff(n) == cache.lucas_l(n));
            else
                CHECK(L.coeff(n) == 0);
        }
    }
    const SeqParams p = make_context(Rational(2), Rational(3));
    const RationalSeries L = series_L1(p, 3);
    CHECK(L.coeff(0) == 0);
    CHECK(L.coeff(1) == p.a);
    CHECK(L.coeff(3) == p.a * (p.ab + 2) + p.a); // a^2 b + 3a = l_3
}

TEST_CASE("series_R assembles with zero principal part and starts at degree 2") {
    for (const auto& [a, b] : bpfo::testing::parameter_grid()) {
        const OctonionSeries R = series_R(make_context(a, b), 24);
        for (std::size_t s = 0; s < 8; ++s) {
            CHECK(R.coord[s].min_degree() == 0);
            CHECK(R.coord[s].principal_part_zero());
            CHECK(R.coord[s].coeff(0) == 0);
            CHECK(R.coord[s].coeff(1) == 0);
        }
    }
    // a = b: R is assembled the same way even though (a-b) kills it in G
    const OctonionSeries R = series_R(make_context(Rational(1), Rational(1)), 16);
    CHECK(R.coord[0].coeff(2) == 1);
}

TEST_CASE("displayed subtracted coefficients equal the recurrence values") {
    // the e7 subtracted polynomial carries q_1, q_3, q_5, q_7 literally
    for (const auto& [a, b] : bpfo::testing::parameter_grid()) {
        SeqCache cache(make_context(a, b));
        const Rational ab = a * b;
        CHECK(cache.fib_q(3) == ab + 1);
        CHECK(cache.fib_q(5) == ab * ab + 3 * ab + 1);
        CHECK(cache.fib_q(7) == ab * ab * ab + 5 * ab * ab + 6 * ab + 1);
    }
}

TEST_CASE("two R(x) assembly routes agree") {
    for (const auto& [a, b] : bpfo::testing::parameter_grid()) {
        SeqCache cache(make_context(a, b));
        const OctonionSeries display = series_R(cache.params(), 20);
        const OctonionSeries proof = series_R_proof(cache.params(), cache, 20);
        for (std::size_t s = 0; s < 8; ++s)
            CHECK(display.coord[s] == proof.coord[s]);
    }
}

TEST_CASE("series_R e0 coordinate is x f(x)") {
    SeqCache cache(make_context(Rational(2), Rational(3)));
    const OctonionSeries R = series_R(cache.params(), 16);
    CHECK(R.coord[0].coeff(2) == cache.fib_q(1));
    CHECK(R.coord[0].coeff(4) == cache.fib_q(3));
}

TEST_CASE("generating function reproduces every octonion coefficient") {
    SUBCASE("a=1 b=1, R-term vanishes") {
        SeqCache cache(make_context(Rational(1), Rational(1)));
        const GenfunReport r = genfun_check(cache.params(), cache, 32);
        CHECK(r.pass);
        CHECK(r.reexpansion_ok);
        CHECK_FALSE(r.first_mismatch_degree.has_value());
    }
    SUBCASE("a=2 b=3 to order 64") {
        SeqCache cache(make_context(Rational(2), Rational(3)));
        CHECK(genfun_check(cache.params(), cache, 64).pass);
    }
    SUBCASE("rational a=1/2 b=2") {
        SeqCache cache(make_context(Rational(1, 2), Rational(2)));
        CHECK(genfun_check(cache.params(), cache, 32).pass);
    }
}

TEST_CASE("series preconditions") {
    const SeqParams p = make_context(Rational(1), Rational(1));
    SeqCache cache(p);
    CHECK_THROWS_AS(series_f(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(series_L1(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(genfun_check(p, cache, 1), std::invalid_argument);
}
