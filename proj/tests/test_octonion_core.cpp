#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bpfo/octonion.hpp"
#include "helpers.hpp"

using namespace bpfo;
using bpfo::testing::random_octonion;

namespace {
using OctQ = Octonion<Rational>;
OctQ basis(std::size_t s) { return OctQ::basis(s); }
} // namespace

TEST_CASE("golden table: frozen table equals the pair-formula table") {
    const BasisTable regenerated = basis_table_from_pair_formula();
    CHECK(regenerated.index == kBasisTable.index);
    CHECK(regenerated.sign == kBasisTable.sign);
}

TEST_CASE("quaternion relations inside the first four basis elements") {
    CHECK(basis(1) * basis(1) == -basis(0)); // i^2 = -1
    CHECK(basis(2) * basis(2) == -basis(0));
    CHECK(basis(3) * basis(3) == -basis(0));
    CHECK(basis(1) * basis(2) == basis(3)); // ij = k
    CHECK(basis(2) * basis(3) == basis(1));
    CHECK(basis(3) * basis(1) == basis(2));
    CHECK((basis(1) * basis(2)) * basis(3) == -basis(0)); // ijk = -1
}

TEST_CASE("doubled part of the table") {
    CHECK(basis(1) * basis(4) == basis(5));
    CHECK(basis(4) * basis(1) == -basis(5));
    CHECK(basis(4) * basis(4) == -basis(0));
}

TEST_CASE("non-associativity witness") {
    CHECK((basis(1) * basis(2)) * basis(4) == basis(7));
    CHECK(basis(1) * (basis(2) * basis(4)) == -basis(7));
}

TEST_CASE("conjugate examples") {
    CHECK(oct_conj(basis(0)) == basis(0));
    CHECK(oct_conj(basis(5)) == -basis(5));
    const OctQ p = basis(0) + basis(3) * Rational(2);
    CHECK(oct_conj(p) == basis(0) - basis(3) * Rational(2));
}

TEST_CASE("norm examples") {
    CHECK(oct_norm(basis(0)) == 1);
    OctQ all = basis(0);
    for (std::size_t s = 1; s < 8; ++s)
        all = all + basis(s);
    CHECK(oct_norm(all) == 8);
    // norm is the e0 coordinate of p conj(p); the rest vanish
    const OctQ pc = all * oct_conj(all);
    CHECK(pc == basis(0) * Rational(8));
}

TEST_CASE("scalar division") {
    const OctQ p = basis(0) * Rational(2) + basis(7) * Rational(4);
    CHECK(scalar_div(p, Rational(2)) == basis(0) + basis(7) * Rational(2));
    CHECK(scalar_div(p, Rational(1)) == p);
    CHECK_THROWS_AS(scalar_div(p, Rational(0)), DivisionByZero);
}

TEST_CASE("composition law and conjugation on random octonions") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        const OctQ p = random_octonion(rng);
        const OctQ q = random_octonion(rng);
        CHECK(oct_norm(p * q) == oct_norm(p) * oct_norm(q));
        CHECK(oct_conj(p * q) == oct_conj(q) * oct_conj(p));
        CHECK(p + oct_conj(p) == basis(0) * (Rational(2) * p[0]));
    }
}

TEST_CASE("alternativity holds where full associativity fails") {
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
        const OctQ p = random_octonion(rng);
        const OctQ q = random_octonion(rng);
        CHECK((p * p) * q == p * (p * q));
        CHECK((q * p) * p == q * (p * p));
    }
}

TEST_CASE("table route equals pair-formula route on random octonions") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        const OctQ p = random_octonion(rng);
        const OctQ q = random_octonion(rng);
        CHECK(p * q == oct_mul_pair_formula(p, q));
    }
}

TEST_CASE("octonions over a quadratic field mix contexts loudly") {
    const Rational D5(5), D7(7);
    auto embed = [](int v, const Rational& d) {
        return QuadraticElement::from_rational(Rational(v), d);
    };
    const Octonion<QuadraticElement> p({embed(1, D5), embed(0, D5), embed(0, D5), embed(0, D5),
                                        embed(0, D5), embed(0, D5), embed(0, D5), embed(0, D5)});
    const Octonion<QuadraticElement> q({embed(1, D7), embed(0, D7), embed(0, D7), embed(0, D7),
                                        embed(0, D7), embed(0, D7), embed(0, D7), embed(0, D7)});
    CHECK_THROWS_AS((void)(p * q), ContextMismatch);
}
