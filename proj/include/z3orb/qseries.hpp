#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "z3orb/scalar.hpp"

namespace z3orb {

// Truncated q-expansion sum c_k q^(k/d); exponents >= truncation are unknown.
// An absent truncation means the series is exact (a finite sum).
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(Quad3 c);  // exact constant
    static QSeries monomial(const Rational& exponent, const Quad3& c);
    static QSeries zero(std::optional<Rational> trunc = std::nullopt);
    // terms[k] is the coefficient of q^(k/d)
    static QSeries from_terms(int d, std::map<long, Quad3> terms, std::optional<Rational> trunc);

    int exp_denominator() const { return d_; }
    const std::optional<Rational>& truncation() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Coefficient at an exponent; throws std::out_of_range beyond the truncation.
    Quad3 coeff(const Rational& exponent) const;
    std::vector<std::pair<Rational, Quad3>> terms() const;
    std::optional<Rational> lowest_exponent() const;
    bool rational_coefficients() const;

    QSeries truncated(const Rational& t) const;
    QSeries scaled(const Rational& k) const;       // q -> q^k
    QSeries shifted(const Rational& e) const;      // multiply by q^e
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const Quad3& c);
    QSeries& operator*=(const QSeries& o);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(const Quad3& c, QSeries a) { return a *= c; }

    // 1/this; needs an invertible leading coefficient. limit caps the truncation (required for exact input).
    QSeries inverse(std::optional<Rational> limit = std::nullopt) const;
    QSeries pow(int e, std::optional<Rational> limit = std::nullopt) const;

    // Equality of known coefficients below the smaller truncation.
    bool agrees_with(const QSeries& o) const;
    std::string str(int max_terms = 12) const;

private:
    void rescale(int new_d);
    void normalize();
    static int lcm(int a, int b);

    int d_ = 1;
    std::map<long, Quad3> terms_;
    std::optional<Rational> trunc_;
};

QSeries operator/(const QSeries& a, const QSeries& b);

// eta(k tau) = q^(k/24) prod (1 - q^(kn)), raised to e.
QSeries eta(const Rational& scale, const Rational& trunc);
QSeries eta_power(const Rational& scale, int e, const Rational& trunc);
// theta2(s) = sum q^(s (m+1/2)^2), theta3(s) = sum q^(s m^2).
QSeries theta2(const Rational& scale, const Rational& trunc);
QSeries theta3(const Rational& scale, const Rational& trunc);
// A2 theta series at s tau: theta2(s) theta2(3s) + theta3(s) theta3(3s) = 1 + 6q^s + ...
QSeries phi0(const Rational& scale, const Rational& trunc);
QSeries theta_H_E6(const Rational& trunc);

QSeries twisted_trace(int s, int t, const QSeries& theta_H, const Rational& trunc);

enum class LatticeCase { LEECH, E6_NIEMEIER };
std::string to_string(LatticeCase c);

struct Transformed {
    QSeries series;          // with the closed constant already multiplied in
    ModularScalar constant;  // product of the per-factor transformation constants
    std::vector<std::pair<std::string, ModularScalar>> factors;
};

// Eq. (5) image of the sigma-twisted trace under tau -> -1/tau. Throws std::logic_error if the constant does not close.
Transformed s_transform_twisted(LatticeCase c, const Rational& trunc);
// Theta_H(-1/tau) / eta(-1/tau)^6 for the E6 case; the constant is closed.
Transformed theta_H_over_eta6_transformed(const Rational& trunc);

QSeries sector_extract(const QSeries& series, const Rational& residue);

QSeries eisenstein_E4(const Rational& trunc);
QSeries j_oracle(const Rational& trunc);

struct OrbifoldCharacter {
    QSeries ch_v;           // Theta_L / eta^24
    QSeries twisted;        // T(sigma)
    QSeries ch_w0;          // (ch V + 2 T) / 3
    QSeries transformed;    // twisted-module character
    QSeries w3;             // integer-residue part of transformed
    QSeries total;          // ch W0 + 2 ch W3
};

OrbifoldCharacter orbifold_character(LatticeCase c, const Rational& trunc);

// sum c q^e at q = exp(2 pi i tau); throws std::domain_error for Im(tau) <= 0.
Complex numeric_eval(const QSeries& s, Complex tau);

nlohmann::ordered_json to_json(const QSeries& s);

}  // namespace z3orb
