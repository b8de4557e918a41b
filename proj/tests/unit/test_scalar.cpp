#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "z3orb/scalar.hpp"

using namespace z3orb;

namespace {

std::mt19937_64 rng(12345);

Rational rnd_q() {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
    return Rational(num(rng), den(rng));
}
Quad3 rnd_quad() { return {rnd_q(), rnd_q()}; }
Cyclo3 rnd_cyc() { return {rnd_q(), rnd_q()}; }

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("rational canonical form") {
    Rational x(6, -4);
    CHECK(x.num() == -3);
    CHECK(x.den() == 2);
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("binomials with negative upper index") {
    CHECK(binomial(-4, 2) == 10);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(6) == 720);
}

TEST_CASE("cyclo_mul examples") {
    const Cyclo3 z = Cyclo3::zeta();
    CHECK(cyclo_mul(z, z) == Cyclo3(-1, -1));
    CHECK(cyclo_mul(Cyclo3(1) + z, Cyclo3(1) + z * z) == Cyclo3(1));
    CHECK(cyclo_mul(cyclo_mul(z, z), z) == Cyclo3(1));
    CHECK(Cyclo3::zeta_pow(-1) == z * z);
}

TEST_CASE("field axioms on random inputs") {
    for (int k = 0; k < 200; ++k) {
        const Rational a = rnd_q(), b = rnd_q(), c = rnd_q();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));

        const Quad3 x = rnd_quad(), y = rnd_quad(), w = rnd_quad();
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * y == y * x);
        CHECK(x * (y + w) == x * y + x * w);
        if (!x.is_zero()) CHECK(x * x.inverse() == Quad3(1));

        const Cyclo3 p = rnd_cyc(), q = rnd_cyc(), r = rnd_cyc();
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        if (!p.is_zero()) CHECK(p * p.inverse() == Cyclo3(1));
    }
    CHECK(Quad3::sqrt3() * Quad3::sqrt3() == Quad3(3));
}

TEST_CASE("cyclotomic conjugation is an involutive automorphism") {
    for (int k = 0; k < 200; ++k) {
        const Cyclo3 p = rnd_cyc(), q = rnd_cyc();
        CHECK(p.conj().conj() == p);
        CHECK((p * q).conj() == p.conj() * q.conj());
        CHECK((p + q).conj() == p.conj() + q.conj());
        const Cyclo3 n = p * p.conj();
        CHECK(n.v.is_zero());
        CHECK(n.u.sign() >= 0);
        CHECK(n.u == p.norm());
    }
}

TEST_CASE("numeric_embed") {
    const Complex z = numeric_embed(Cyclo3::zeta());
    CHECK(z.real() == doctest::Approx(-0.5));
    CHECK(z.imag() == doctest::Approx(0.8660254037844386));
    CHECK(numeric_embed(Quad3(1) + Quad3::sqrt3()).real() == doctest::Approx(2.7320508075688772));
    const Complex one = numeric_embed(ModularScalar::tau_over_i_sqrt(), Complex(0, 1));
    CHECK(one.real() == doctest::Approx(1.0));
    CHECK(one.imag() == doctest::Approx(0.0));
    CHECK_THROWS_AS(numeric_embed(ModularScalar::tau_over_i_sqrt(), Complex(1, 0)), std::domain_error);
    CHECK_THROWS_AS(numeric_embed(ModularScalar::tau_over_i_sqrt(), Complex(0, -1)), std::domain_error);
}

TEST_CASE("numeric_embed is a ring homomorphism") {
    for (int k = 0; k < 200; ++k) {
        const Cyclo3 p = rnd_cyc(), q = rnd_cyc();
        CHECK(rel(numeric_embed(p * q), numeric_embed(p) * numeric_embed(q)) < 1e-12);
        CHECK(rel(numeric_embed(p + q), numeric_embed(p) + numeric_embed(q)) < 1e-12);
        const Quad3 x = rnd_quad(), y = rnd_quad();
        CHECK(rel(numeric_embed(x * y), numeric_embed(x) * numeric_embed(y)) < 1e-12);
    }
    const Complex tau(0.3, 1.7);
    const ModularScalar a = ModularScalar::tau_over_i_sqrt(), b = ModularScalar::tau_over_3i_sqrt();
    CHECK(rel(numeric_embed(a * b, tau), numeric_embed(a, tau) * numeric_embed(b, tau)) < 1e-12);
    CHECK(rel(numeric_embed(ModularScalar::tau_over_i_sqrt3(), tau), tau / (Complex(0, 1) * std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("modular_mul") {
    const ModularScalar s = ModularScalar::tau_over_i_sqrt();
    const ModularScalar s2 = s * s;
    CHECK(s2.tau_half_exponent == 2);
    CHECK(((s2.eighth_root_exponent - (-2)) % 8 + 8) % 8 == 0);
    const ModularScalar r3(Quad3(1), 0, 0, 1);
    const ModularScalar nine = r3 * r3;
    CHECK(nine.mag == Quad3(3));
    CHECK(nine.three_half_exponent == 0);
    CHECK(nine.closed());
    CHECK((s * s.inverse()).closed());
    CHECK((s * s.inverse()).value() == Quad3(1));
}
