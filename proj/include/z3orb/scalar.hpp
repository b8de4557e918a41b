#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace z3orb {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    static Rational parse(const std::string& s);

    const mpq_class& get() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// C(n, k) for any integer n and k >= 0; zero for k < 0.
mpz_class binomial(long n, long k);
mpz_class factorial(long n);
Rational pow(const Rational& x, long e);

// Q(sqrt 3): r + s*sqrt(3)
struct Quad3 {
    Rational r, s;

    Quad3() = default;
    Quad3(Rational r_) : r(std::move(r_)) {}  // NOLINT(google-explicit-constructor)
    Quad3(long n) : r(n) {}                   // NOLINT(google-explicit-constructor)
    Quad3(int n) : r(n) {}                    // NOLINT(google-explicit-constructor)
    Quad3(Rational r_, Rational s_) : r(std::move(r_)), s(std::move(s_)) {}

    static Quad3 sqrt3() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return r.is_zero() && s.is_zero(); }
    bool is_rational() const { return s.is_zero(); }
    Quad3 conj() const { return {r, -s}; }
    Rational norm() const { return r * r - Rational(3) * s * s; }
    Quad3 inverse() const;

    Quad3 operator-() const { return {-r, -s}; }
    Quad3& operator+=(const Quad3& o) { r += o.r; s += o.s; return *this; }
    Quad3& operator-=(const Quad3& o) { r -= o.r; s -= o.s; return *this; }
    Quad3& operator*=(const Quad3& o);
    Quad3& operator/=(const Quad3& o) { return *this *= o.inverse(); }

    friend Quad3 operator+(Quad3 a, const Quad3& b) { return a += b; }
    friend Quad3 operator-(Quad3 a, const Quad3& b) { return a -= b; }
    friend Quad3 operator*(Quad3 a, const Quad3& b) { return a *= b; }
    friend Quad3 operator/(Quad3 a, const Quad3& b) { return a /= b; }
    friend bool operator==(const Quad3& a, const Quad3& b) { return a.r == b.r && a.s == b.s; }
    friend bool operator!=(const Quad3& a, const Quad3& b) { return !(a == b); }
};

std::ostream& operator<<(std::ostream& os, const Quad3& x);

// Q(zeta), zeta = exp(2 pi i / 3): u + v*zeta
struct Cyclo3 {
    Rational u, v;

    Cyclo3() = default;
    Cyclo3(Rational u_) : u(std::move(u_)) {}  // NOLINT(google-explicit-constructor)
    Cyclo3(long n) : u(n) {}                   // NOLINT(google-explicit-constructor)
    Cyclo3(int n) : u(n) {}                    // NOLINT(google-explicit-constructor)
    Cyclo3(Rational u_, Rational v_) : u(std::move(u_)), v(std::move(v_)) {}

    static Cyclo3 zeta() { return {Rational(0), Rational(1)}; }
    static Cyclo3 zeta_pow(int k);

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool is_rational() const { return v.is_zero(); }
    Cyclo3 conj() const { return {u - v, -v}; }
    Rational norm() const { return u * u - u * v + v * v; }
    Cyclo3 inverse() const;

    Cyclo3 operator-() const { return {-u, -v}; }
    Cyclo3& operator+=(const Cyclo3& o) { u += o.u; v += o.v; return *this; }
    Cyclo3& operator-=(const Cyclo3& o) { u -= o.u; v -= o.v; return *this; }
    Cyclo3& operator*=(const Cyclo3& o);
    Cyclo3& operator/=(const Cyclo3& o) { return *this *= o.inverse(); }

    friend Cyclo3 operator+(Cyclo3 a, const Cyclo3& b) { return a += b; }
    friend Cyclo3 operator-(Cyclo3 a, const Cyclo3& b) { return a -= b; }
    friend Cyclo3 operator*(Cyclo3 a, const Cyclo3& b) { return a *= b; }
    friend Cyclo3 operator/(Cyclo3 a, const Cyclo3& b) { return a /= b; }
    friend bool operator==(const Cyclo3& a, const Cyclo3& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Cyclo3& a, const Cyclo3& b) { return !(a == b); }
};

std::ostream& operator<<(std::ostream& os, const Cyclo3& x);

Cyclo3 cyclo_mul(const Cyclo3& x, const Cyclo3& y);

// mag * exp(i pi e/4) * tau^(t/2) * 3^(h/2), h kept in {0, 1}.
struct ModularScalar {
    Quad3 mag{1};
    int eighth_root_exponent = 0;
    int tau_half_exponent = 0;
    int three_half_exponent = 0;

    ModularScalar() = default;
    explicit ModularScalar(Quad3 m) : mag(std::move(m)) {}
    ModularScalar(Quad3 m, int eighth, int tau_half, int three_half);

    static ModularScalar tau_over_i_sqrt();        // (tau/i)^(1/2)
    static ModularScalar tau_over_3i_sqrt();       // (tau/(3i))^(1/2)
    static ModularScalar tau_over_i_sqrt3();       // tau/(i sqrt 3)

    bool closed() const { return tau_half_exponent == 0 && eighth_root_exponent == 0; }
    // Value as an element of Q(sqrt 3); only for closed scalars.
    Quad3 value() const;
    ModularScalar pow(int e) const;
    ModularScalar inverse() const { return pow(-1); }

    friend bool operator==(const ModularScalar& a, const ModularScalar& b) {
        return a.mag == b.mag && a.eighth_root_exponent == b.eighth_root_exponent &&
               a.tau_half_exponent == b.tau_half_exponent &&
               a.three_half_exponent == b.three_half_exponent;
    }

private:
    void normalize();
};

ModularScalar modular_mul(const ModularScalar& x, const ModularScalar& y);
inline ModularScalar operator*(const ModularScalar& x, const ModularScalar& y) { return modular_mul(x, y); }
std::ostream& operator<<(std::ostream& os, const ModularScalar& x);

using Complex = std::complex<double>;

Complex numeric_embed(const Rational& x);
Complex numeric_embed(const Quad3& x);
Complex numeric_embed(const Cyclo3& x);
// Throws std::domain_error when Im(tau) <= 0.
Complex numeric_embed(const ModularScalar& x, Complex tau);

}  // namespace z3orb

namespace Eigen {

template <>
struct NumTraits<z3orb::Rational> : GenericNumTraits<z3orb::Rational> {
    using Real = z3orb::Rational;
    using NonInteger = z3orb::Rational;
    using Nested = z3orb::Rational;
    using Literal = z3orb::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 20
    };
};

template <>
struct NumTraits<z3orb::Cyclo3> : GenericNumTraits<z3orb::Cyclo3> {
    using Real = z3orb::Cyclo3;
    using NonInteger = z3orb::Cyclo3;
    using Nested = z3orb::Cyclo3;
    using Literal = z3orb::Cyclo3;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 60
    };
};

}  // namespace Eigen
