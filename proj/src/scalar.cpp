#include "z3orb/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace z3orb {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(long n, long k) {
    if (k < 0) return 0;
    mpz_class out;
    mpz_class nn(n);
    mpz_bin_ui(out.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

mpz_class factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Rational pow(const Rational& x, long e) {
    if (e < 0) return pow(Rational(1) / x, -e);
    Rational out(1), b = x;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Quad3 Quad3::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Quad3: inverse of zero");
    return {r / n, -s / n};
}

Quad3& Quad3::operator*=(const Quad3& o) {
    Rational nr = r * o.r + Rational(3) * s * o.s;
    Rational ns = r * o.s + s * o.r;
    r = std::move(nr);
    s = std::move(ns);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Quad3& x) {
    if (x.s.is_zero()) return os << x.r;
    if (x.r.is_zero()) return os << x.s << "*sqrt3";
    return os << x.r << (x.s.sign() > 0 ? "+" : "") << x.s << "*sqrt3";
}

Cyclo3 Cyclo3::zeta_pow(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        default: return {Rational(-1), Rational(-1)};
    }
}

Cyclo3 Cyclo3::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("Cyclo3: inverse of zero");
    Cyclo3 c = conj();
    return {c.u / n, c.v / n};
}

// zeta^2 = -1 - zeta
Cyclo3& Cyclo3::operator*=(const Cyclo3& o) {
    Rational vv = v * o.v;
    Rational nu = u * o.u - vv;
    Rational nv = u * o.v + v * o.u - vv;
    u = std::move(nu);
    v = std::move(nv);
    return *this;
}

Cyclo3 cyclo_mul(const Cyclo3& x, const Cyclo3& y) { return x * y; }

std::ostream& operator<<(std::ostream& os, const Cyclo3& x) {
    if (x.v.is_zero()) return os << x.u;
    if (x.u.is_zero()) return os << x.v << "*z";
    return os << x.u << (x.v.sign() > 0 ? "+" : "") << x.v << "*z";
}

ModularScalar::ModularScalar(Quad3 m, int eighth, int tau_half, int three_half)
    : mag(std::move(m)),
      eighth_root_exponent(eighth),
      tau_half_exponent(tau_half),
      three_half_exponent(three_half) {
    normalize();
}

void ModularScalar::normalize() {
    eighth_root_exponent = ((eighth_root_exponent % 8) + 8) % 8;
    while (three_half_exponent >= 2) {
        mag *= Quad3(3);
        three_half_exponent -= 2;
    }
    while (three_half_exponent < 0) {
        mag /= Quad3(3);
        three_half_exponent += 2;
    }
}

ModularScalar ModularScalar::tau_over_i_sqrt() { return {Quad3(1), -1, 1, 0}; }
ModularScalar ModularScalar::tau_over_3i_sqrt() { return {Quad3(1), -1, 1, -1}; }
ModularScalar ModularScalar::tau_over_i_sqrt3() { return {Quad3(1), -2, 2, -1}; }

Quad3 ModularScalar::value() const {
    if (!closed()) throw std::logic_error("ModularScalar: value of a non-closed scalar");
    return three_half_exponent ? mag * Quad3::sqrt3() : mag;
}

ModularScalar ModularScalar::pow(int e) const {
    ModularScalar out;
    ModularScalar b = *this;
    if (e < 0) {
        b = ModularScalar(mag.inverse(), -eighth_root_exponent, -tau_half_exponent, -three_half_exponent);
        e = -e;
    }
    while (e) {
        if (e & 1) out = modular_mul(out, b);
        b = modular_mul(b, b);
        e >>= 1;
    }
    return out;
}

ModularScalar modular_mul(const ModularScalar& x, const ModularScalar& y) {
    return {x.mag * y.mag, x.eighth_root_exponent + y.eighth_root_exponent,
            x.tau_half_exponent + y.tau_half_exponent, x.three_half_exponent + y.three_half_exponent};
}

std::ostream& operator<<(std::ostream& os, const ModularScalar& x) {
    os << "(" << x.mag << ")";
    if (x.three_half_exponent) os << "*3^(1/2)";
    if (x.eighth_root_exponent) os << "*e^(i pi " << x.eighth_root_exponent << "/4)";
    if (x.tau_half_exponent) os << "*tau^(" << x.tau_half_exponent << "/2)";
    return os;
}

Complex numeric_embed(const Rational& x) { return {x.to_double(), 0.0}; }

Complex numeric_embed(const Quad3& x) { return {x.r.to_double() + x.s.to_double() * std::sqrt(3.0), 0.0}; }

Complex numeric_embed(const Cyclo3& x) {
    const Complex z(-0.5, std::sqrt(3.0) / 2.0);
    return x.u.to_double() + x.v.to_double() * z;
}

Complex numeric_embed(const ModularScalar& x, Complex tau) {
    if (!(tau.imag() > 0)) throw std::domain_error("numeric_embed: tau must lie in the upper half plane");
    Complex out = numeric_embed(x.mag);
    out *= std::polar(1.0, M_PI * x.eighth_root_exponent / 4.0);
    out *= std::exp(0.5 * x.tau_half_exponent * std::log(tau));
    if (x.three_half_exponent) out *= std::sqrt(3.0);
    return out;
}

}  // namespace z3orb
