#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "z3orb/qseries.hpp"

using namespace z3orb;

namespace {

// prod (1-q^n) by Euler's pentagonal theorem
std::map<long, long> pentagonal(long N) {
    std::map<long, long> c;
    for (long k = -N; k <= N; ++k) {
        const long e = k * (3 * k - 1) / 2;
        if (e <= N) c[e] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

// integer power series helpers, exponents 0..N
using Poly = std::vector<long long>;
Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}
Poly euler(std::size_t N, long step, int power) {  // prod (1 - q^(step n))^power
    Poly r(N + 1, 0);
    r[0] = 1;
    for (long n = step; n <= static_cast<long>(N); n += step)
        for (int k = 0; k < std::abs(power); ++k) {
            if (power > 0) {
                for (long e = static_cast<long>(N); e >= n; --e) r[static_cast<std::size_t>(e)] -= r[static_cast<std::size_t>(e - n)];
            } else {
                for (long e = n; e <= static_cast<long>(N); ++e) r[static_cast<std::size_t>(e)] += r[static_cast<std::size_t>(e - n)];
            }
        }
    return r;
}

// theta series of sqrt3 E6^*: Gram matrix 3 C^-1 in the fundamental weight basis
std::map<long, long> theta_H_bruteforce(int box) {
    Eigen::Matrix<double, 6, 6> C;
    C << 2, 0, -1, 0, 0, 0,
         0, 2, 0, -1, 0, 0,
        -1, 0, 2, -1, 0, 0,
         0, -1, -1, 2, -1, 0,
         0, 0, 0, -1, 2, -1,
         0, 0, 0, 0, -1, 2;
    Eigen::Matrix<double, 6, 6> G = 3.0 * C.inverse();
    Eigen::Matrix<long, 6, 6> Gi;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) Gi(i, j) = std::lround(G(i, j));
    std::map<long, long> counts;  // key: norm (= 2 * exponent)
    std::array<long, 6> x{};
    const long side = 2 * box + 1;
    long total = 1;
    for (int i = 0; i < 6; ++i) total *= side;
    for (long idx = 0; idx < total; ++idx) {
        long t = idx;
        for (int i = 0; i < 6; ++i) {
            x[static_cast<std::size_t>(i)] = t % side - box;
            t /= side;
        }
        long nrm = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) nrm += x[static_cast<std::size_t>(i)] * Gi(i, j) * x[static_cast<std::size_t>(j)];
        counts[nrm]++;
    }
    return counts;
}

double relerr(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("eta matches the pentagonal number theorem") {
    const QSeries e = eta(Rational(1), Rational(40));
    const auto pent = pentagonal(40);
    for (long n = 0; n < 40; ++n) {
        const auto it = pent.find(n);
        const long want = it == pent.end() ? 0 : it->second;
        CHECK(e.coeff(Rational(n) + Rational(1, 24)) == Quad3(want));
    }
    CHECK_THROWS_AS(e.coeff(Rational(41)), std::out_of_range);
}

TEST_CASE("eta powers agree with direct products") {
    const QSeries e = eta_power(Rational(3), -12, Rational(20));
    const Poly ref = euler(20, 3, -12);
    for (long n = 0; n + 3 * 12 / 24 < 20; ++n)
        CHECK(e.coeff(Rational(n) - Rational(36, 24)) == Quad3(static_cast<long>(ref[static_cast<std::size_t>(n)])));
}

TEST_CASE("theta building blocks") {
    const QSeries t3 = theta3(Rational(1), Rational(20));
    CHECK(t3.coeff(Rational(0)) == Quad3(1));
    CHECK(t3.coeff(Rational(1)) == Quad3(2));
    CHECK(t3.coeff(Rational(2)) == Quad3(0));
    CHECK(t3.coeff(Rational(16)) == Quad3(2));
    const QSeries t2 = theta2(Rational(1), Rational(20));
    CHECK(t2.coeff(Rational(1, 4)) == Quad3(2));
    CHECK(t2.coeff(Rational(9, 4)) == Quad3(2));
    // A2 theta series: number of representations by x^2+xy+y^2
    const QSeries p = phi0(Rational(1), Rational(30));
    for (long n = 0; n < 30; ++n) {
        long cnt = 0;
        for (long x = -10; x <= 10; ++x)
            for (long y = -10; y <= 10; ++y)
                if (x * x + x * y + y * y == n) ++cnt;
        CHECK(p.coeff(Rational(n)) == Quad3(cnt));
    }
}

TEST_CASE("theta series of sqrt3 E6* against lattice enumeration") {
    const QSeries th = theta_H_E6(Rational(7));
    const auto counts = theta_H_bruteforce(3);
    CHECK(th.coeff(Rational(0)) == Quad3(1));
    CHECK(th.coeff(Rational(2)) == Quad3(54));
    CHECK(th.coeff(Rational(3)) == Quad3(72));
    for (long n = 0; n <= 6; ++n) {
        const auto it = counts.find(2 * n);
        const long want = it == counts.end() ? 0 : it->second;
        INFO("q^", n);
        CHECK(th.coeff(Rational(n)) == Quad3(want));
    }
}

TEST_CASE("Leech twisted trace is eta^12/eta(3tau)^12") {
    const QSeries tw = twisted_trace(0, 12, QSeries(Quad3(1)), Rational(12));
    const Poly ref = mul(euler(14, 1, 12), euler(14, 3, -12));
    for (long n = 0; n <= 11; ++n)
        CHECK(tw.coeff(Rational(n - 1)) == Quad3(static_cast<long>(ref[static_cast<std::size_t>(n)])));
    CHECK(tw.coeff(Rational(-1)) == Quad3(1));
    CHECK(tw.coeff(Rational(0)) == Quad3(-12));
    CHECK(tw.coeff(Rational(1)) == Quad3(54));
}

TEST_CASE("J oracle") {
    const QSeries j = j_oracle(Rational(6));
    CHECK(j.coeff(Rational(-1)) == Quad3(1));
    CHECK(j.coeff(Rational(0)) == Quad3(0));
    CHECK(j.coeff(Rational(1)) == Quad3(196884));
    CHECK(j.coeff(Rational(2)) == Quad3(21493760));
    CHECK(j.coeff(Rational(3)) == Quad3(864299970));
    CHECK(j.coeff(Rational(4)) == Quad3(Rational(mpz_class("20245856256"))));
    CHECK(j.coeff(Rational(5)) == Quad3(Rational(mpz_class("333202640600"))));
}

TEST_CASE("Leech orbifold character") {
    const OrbifoldCharacter oc = orbifold_character(LatticeCase::LEECH, Rational(12));
    CHECK(oc.ch_v.coeff(Rational(0)) == Quad3(24));
    CHECK(oc.w3.coeff(Rational(1)) == Quad3(65610));
    CHECK(oc.total.agrees_with(j_oracle(Rational(12))));
    CHECK(oc.total.coeff(Rational(1)) == Quad3(196884));
    CHECK(oc.transformed.rational_coefficients());
}

TEST_CASE("E6 orbifold character") {
    const OrbifoldCharacter oc = orbifold_character(LatticeCase::E6_NIEMEIER, Rational(6));
    CHECK(oc.ch_v.coeff(Rational(0)) == Quad3(24 + 288));
    CHECK(oc.w3.coeff(Rational(0)) == Quad3(9));
    CHECK(oc.ch_w0.coeff(Rational(0)) == Quad3(102));
    CHECK(oc.total.coeff(Rational(-1)) == Quad3(1));
    CHECK(oc.total.coeff(Rational(0)) == Quad3(120));
    CHECK(oc.total.coeff(Rational(1)) == Quad3(196884));
}

TEST_CASE("transformation constants close") {
    for (LatticeCase c : {LatticeCase::LEECH, LatticeCase::E6_NIEMEIER}) {
        const Transformed t = s_transform_twisted(c, Rational(3));
        CHECK(t.constant.closed());
        CHECK(t.constant.tau_half_exponent == 0);
        CHECK(t.constant.eighth_root_exponent == 0);
    }
    const Transformed leech = s_transform_twisted(LatticeCase::LEECH, Rational(3));
    CHECK(leech.constant.value() == Quad3(729));
    CHECK(leech.series.coeff(Rational(0)) == Quad3(0));
    CHECK(leech.series.coeff(Rational(1, 3)) == Quad3(729));
    CHECK(leech.series.coeff(Rational(1)) == Quad3(65610));
    CHECK(s_transform_twisted(LatticeCase::E6_NIEMEIER, Rational(3)).constant.value() == Quad3(27));
    CHECK(s_transform_twisted(LatticeCase::E6_NIEMEIER, Rational(3)).series.coeff(Rational(0)) == Quad3(9));
    const Transformed h = theta_H_over_eta6_transformed(Rational(1));
    CHECK(h.series.coeff(Rational(-1, 4)) == Quad3(Rational(1, 9)) * Quad3::sqrt3().inverse());
}

TEST_CASE("numeric transformation checks") {
    for (Complex tau : {Complex(0, 1.1), Complex(0.4, 1.2), Complex(0, 2)}) {
        const Rational N(60);
        const Complex l = numeric_eval(phi0(Rational(1), N), -1.0 / tau);
        const Complex r =
            numeric_embed(ModularScalar::tau_over_i_sqrt3(), tau) * numeric_eval(phi0(Rational(1, 3), N), tau);
        CHECK(relerr(l, r) < 1e-8);
        const Complex l5 = numeric_eval(twisted_trace(6, 9, theta_H_E6(Rational(62)), N), -1.0 / tau);
        const Complex r5 = numeric_eval(s_transform_twisted(LatticeCase::E6_NIEMEIER, N).series, tau);
        CHECK(relerr(l5, r5) < 1e-8);
    }
    CHECK_THROWS_AS(numeric_eval(phi0(Rational(1), Rational(5)), Complex(0.5, -0.1)), std::domain_error);
}

TEST_CASE("sector extraction partitions a series") {
    const Transformed t = s_transform_twisted(LatticeCase::LEECH, Rational(5));
    QSeries sum = sector_extract(t.series, Rational(0)) + sector_extract(t.series, Rational(1, 3)) +
                  sector_extract(t.series, Rational(2, 3));
    CHECK(sum.agrees_with(t.series));
    CHECK(sector_extract(t.series, Rational(1, 3)).coeff(Rational(1, 3)) == Quad3(729));
}

TEST_CASE("series arithmetic") {
    const QSeries e = eta(Rational(1), Rational(10));
    const QSeries one = e * e.inverse();
    CHECK(one.coeff(Rational(0)) == Quad3(1));
    for (long n = 1; n < 9; ++n) CHECK(one.coeff(Rational(n)) == Quad3(0));
    CHECK((e.pow(3)).agrees_with(e * e * e));
    CHECK(to_json(e).dump() == to_json(eta(Rational(1), Rational(10))).dump());
    CHECK(to_json(e)["exp_denominator"] == 24);
}
