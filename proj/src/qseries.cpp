#include "z3orb/qseries.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace z3orb {

namespace {

// k/d < t
bool below(long k, int d, const Rational& t) {
    return mpz_class(k) * t.den() < t.num() * d;
}

bool below(long k, int d, const std::optional<Rational>& t) { return !t || below(k, d, *t); }

std::optional<Rational> min_trunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

long to_long(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("q-series exponent out of range");
    return z.get_si();
}

int to_int(const mpz_class& z) {
    if (!z.fits_sint_p()) throw std::overflow_error("q-series denominator out of range");
    return static_cast<int>(z.get_si());
}

mpz_class ceil_q(const Rational& x) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return out;
}

}  // namespace

int QSeries::lcm(int a, int b) { return std::lcm(a, b); }

QSeries::QSeries(Quad3 c) {
    if (!c.is_zero()) terms_.emplace(0, std::move(c));
}

QSeries QSeries::monomial(const Rational& exponent, const Quad3& c) {
    QSeries s;
    s.d_ = to_int(exponent.den());
    if (!c.is_zero()) s.terms_.emplace(to_long(exponent.num()), c);
    return s;
}

QSeries QSeries::zero(std::optional<Rational> trunc) {
    QSeries s;
    s.trunc_ = std::move(trunc);
    return s;
}

QSeries QSeries::from_terms(int d, std::map<long, Quad3> terms, std::optional<Rational> trunc) {
    if (d <= 0) throw std::invalid_argument("QSeries: denominator must be positive");
    QSeries s;
    s.d_ = d;
    s.terms_ = std::move(terms);
    s.trunc_ = std::move(trunc);
    s.normalize();
    return s;
}

void QSeries::rescale(int new_d) {
    if (new_d == d_) return;
    if (new_d % d_) throw std::logic_error("QSeries::rescale: not a multiple");
    const long f = new_d / d_;
    std::map<long, Quad3> t;
    for (auto& [k, c] : terms_) t.emplace(k * f, std::move(c));
    terms_ = std::move(t);
    d_ = new_d;
}

void QSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || !below(it->first, d_, trunc_)) it = terms_.erase(it);
        else ++it;
    }
    long g = d_;
    for (const auto& [k, c] : terms_) g = std::gcd(g, std::labs(k));
    if (g > 1) {
        std::map<long, Quad3> t;
        for (auto& [k, c] : terms_) t.emplace(k / g, std::move(c));
        terms_ = std::move(t);
        d_ = static_cast<int>(d_ / g);
    }
}

Quad3 QSeries::coeff(const Rational& e) const {
    if (trunc_ && e >= *trunc_) throw std::out_of_range("QSeries::coeff: exponent beyond truncation");
    Rational k = e * Rational(d_);
    if (!k.is_integer()) return {};
    auto it = terms_.find(to_long(k.num()));
    return it == terms_.end() ? Quad3() : it->second;
}

std::vector<std::pair<Rational, Quad3>> QSeries::terms() const {
    std::vector<std::pair<Rational, Quad3>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(Rational(k, d_), c);
    return out;
}

std::optional<Rational> QSeries::lowest_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return Rational(terms_.begin()->first, d_);
}

bool QSeries::rational_coefficients() const {
    for (const auto& [k, c] : terms_)
        if (!c.is_rational()) return false;
    return true;
}

QSeries QSeries::truncated(const Rational& t) const {
    QSeries s = *this;
    s.trunc_ = min_trunc(s.trunc_, t);
    s.normalize();
    return s;
}

QSeries QSeries::scaled(const Rational& k) const {
    if (k.sign() <= 0) throw std::invalid_argument("QSeries::scaled: scale must be positive");
    QSeries s;
    const long a = to_long(k.num());
    s.d_ = d_ * to_int(k.den());
    for (const auto& [e, c] : terms_) s.terms_.emplace(e * a, c);
    if (trunc_) s.trunc_ = *trunc_ * k;
    s.normalize();
    return s;
}

QSeries QSeries::shifted(const Rational& e) const {
    QSeries s = *this;
    const int nd = lcm(d_, to_int(e.den()));
    s.rescale(nd);
    const long off = to_long(e.num()) * (nd / to_int(e.den()));
    std::map<long, Quad3> t;
    for (auto& [k, c] : s.terms_) t.emplace(k + off, std::move(c));
    s.terms_ = std::move(t);
    if (s.trunc_) s.trunc_ = *s.trunc_ + e;
    s.normalize();
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (auto& [k, c] : s.terms_) c = -c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    const int nd = lcm(d_, o.d_);
    rescale(nd);
    QSeries b = o;
    b.rescale(nd);
    for (const auto& [k, c] : b.terms_) {
        auto [it, ins] = terms_.try_emplace(k, c);
        if (!ins) it->second += c;
    }
    trunc_ = min_trunc(trunc_, o.trunc_);
    normalize();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Quad3& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_) x *= c;
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
    const int nd = lcm(d_, o.d_);
    QSeries a = *this;
    a.rescale(nd);
    QSeries b = o;
    b.rescale(nd);
    // known range: min(low_a + T_b, low_b + T_a); an empty truncated factor contributes its truncation as low
    auto low = [](const QSeries& s) -> std::optional<Rational> {
        if (!s.terms_.empty()) return Rational(s.terms_.begin()->first, s.d_);
        return s.trunc_;
    };
    std::optional<Rational> t;
    auto la = low(a), lb = low(b);
    if (b.trunc_ && la) t = min_trunc(t, *la + *b.trunc_);
    if (a.trunc_ && lb) t = min_trunc(t, *lb + *a.trunc_);
    if ((a.terms_.empty() && !a.trunc_) || (b.terms_.empty() && !b.trunc_)) t.reset();

    std::map<long, Quad3> out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const long k = ka + kb;
            if (!below(k, nd, t)) break;
            auto [it, ins] = out.try_emplace(k, ca * cb);
            if (!ins) it->second += ca * cb;
        }
    }
    terms_ = std::move(out);
    d_ = nd;
    trunc_ = t;
    normalize();
    return *this;
}

QSeries QSeries::inverse(std::optional<Rational> limit) const {
    if (terms_.empty()) throw std::domain_error("QSeries::inverse: zero series");
    const long k0 = terms_.begin()->first;
    const Quad3 c0 = terms_.begin()->second;
    const Rational low(k0, d_);
    std::optional<Rational> t;
    if (trunc_) t = *trunc_ - low - low;
    t = min_trunc(t, limit);
    if (!t) throw std::invalid_argument("QSeries::inverse: exact input needs a truncation limit");
    long g = 0;
    for (const auto& [k, c] : terms_) g = std::gcd(g, k - k0);
    if (g == 0) g = d_;
    // grid points j with (-k0 + j g)/d < t
    const Rational bound = (*t + low) * Rational(d_) / Rational(g);
    const long N = std::max(0L, to_long(ceil_q(bound)));
    std::vector<std::pair<long, Quad3>> a;  // sparse unit series, a_0 = 1 omitted
    const Quad3 inv0 = c0.inverse();
    for (const auto& [k, c] : terms_)
        if (k != k0) a.emplace_back((k - k0) / g, c * inv0);
    std::vector<Quad3> b(static_cast<std::size_t>(N));
    if (N > 0) b[0] = Quad3(1);
    for (long j = 1; j < N; ++j) {
        Quad3 acc;
        for (const auto& [i, ai] : a) {
            if (i > j) break;
            acc += ai * b[static_cast<std::size_t>(j - i)];
        }
        b[static_cast<std::size_t>(j)] = -acc;
    }
    QSeries s;
    s.d_ = d_;
    s.trunc_ = t;
    for (long j = 0; j < N; ++j)
        if (!b[static_cast<std::size_t>(j)].is_zero()) s.terms_.emplace(-k0 + j * g, b[static_cast<std::size_t>(j)] * inv0);
    s.normalize();
    return s;
}

QSeries QSeries::pow(int e, std::optional<Rational> limit) const {
    if (e < 0) return pow(-e, std::nullopt).inverse(limit);
    QSeries out(Quad3(1)), b = *this;
    while (e) {
        if (e & 1) out *= b;
        e >>= 1;
        if (e) b *= b;
    }
    if (limit) out = out.truncated(*limit);
    return out;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
    if (b.is_zero()) throw std::domain_error("QSeries division by zero");
    // a/b known to min(T_a - low_b, low_a + T_b - 2 low_b)
    std::optional<Rational> lim;
    const Rational lb = *b.lowest_exponent();
    if (a.truncation()) lim = *a.truncation() - lb;
    if (!lim && !b.truncation()) throw std::invalid_argument("QSeries division of exact series needs a truncation");
    if (!lim) lim = *b.truncation() - lb - lb + a.lowest_exponent().value_or(Rational(0));
    return a * b.inverse(lim);
}

bool QSeries::agrees_with(const QSeries& o) const {
    QSeries diff = *this - o;
    return diff.is_zero();
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int n = 0;
    for (const auto& [k, c] : terms_) {
        if (n++ == max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << "(" << c << ")q^" << Rational(k, d_);
    }
    if (terms_.empty()) os << "0";
    if (trunc_) os << " + O(q^" << *trunc_ << ")";
    return os.str();
}

namespace {

// Generic truncation planner: factors[i] = (lowest exponent, builder for a given truncation).
using Builder = std::function<QSeries(const Rational&)>;

QSeries product_to(const Rational& T, const std::vector<std::pair<Rational, Builder>>& factors) {
    Rational total;
    for (const auto& f : factors) total += f.first;
    QSeries out(Quad3(1));
    for (const auto& [low, build] : factors) out *= build(T - (total - low));
    out = out.truncated(T);
    if (!out.truncation() || *out.truncation() < T) throw std::logic_error("product_to: truncation shortfall");
    return out;
}

}  // namespace

QSeries eta_power(const Rational& scale, int e, const Rational& trunc) {
    if (scale.sign() <= 0) throw std::invalid_argument("eta: scale must be positive");
    const Rational lead = Rational(e) * scale / Rational(24);
    // prod (1 - x^n) to relative order N in x = q^scale
    const Rational rel = (trunc - lead) / scale;
    const long N = std::max(0L, to_long(ceil_q(rel)));
    std::vector<mpz_class> p(static_cast<std::size_t>(N), 0);
    if (N > 0) p[0] = 1;
    for (long n = 1; n < N; ++n)
        for (long j = N - 1; j >= n; --j) p[static_cast<std::size_t>(j)] -= p[static_cast<std::size_t>(j - n)];
    // g = p^e by the power recurrence n g_n = sum_k ((e+1)k - n) p_k g_{n-k}
    std::vector<std::pair<long, mpz_class>> nz;
    for (long k = 1; k < N; ++k)
        if (p[static_cast<std::size_t>(k)] != 0) nz.emplace_back(k, p[static_cast<std::size_t>(k)]);
    std::vector<mpz_class> g(static_cast<std::size_t>(N), 0);
    if (N > 0) g[0] = 1;
    for (long n = 1; n < N; ++n) {
        mpz_class acc = 0;
        for (const auto& [k, pk] : nz) {
            if (k > n) break;
            acc += ((e + 1) * k - n) * pk * g[static_cast<std::size_t>(n - k)];
        }
        if (acc % n != 0) throw std::logic_error("eta_power: non-integral coefficient");
        g[static_cast<std::size_t>(n)] = acc / n;
    }
    std::map<long, Quad3> t;
    for (long n = 0; n < N; ++n)
        if (g[static_cast<std::size_t>(n)] != 0) t.emplace(n, Quad3(Rational(g[static_cast<std::size_t>(n)])));
    return QSeries::from_terms(1, std::move(t), Rational(N)).scaled(scale).shifted(lead).truncated(trunc);
}

QSeries eta(const Rational& scale, const Rational& trunc) { return eta_power(scale, 1, trunc); }

QSeries theta2(const Rational& s, const Rational& trunc) {
    // exponents s(2m+1)^2/4 on the grid 1/(4 den s)
    const int d = to_int(s.den()) * 4;
    std::map<long, Quad3> t;
    for (long m = 0;; ++m) {
        Rational e = s * Rational(2 * m + 1, 2) * Rational(2 * m + 1, 2);
        if (e >= trunc) break;
        t.emplace(to_long((e * Rational(d)).num()), Quad3(2));
    }
    return QSeries::from_terms(d, std::move(t), trunc);
}

QSeries theta3(const Rational& s, const Rational& trunc) {
    const int d = to_int(s.den());
    std::map<long, Quad3> t;
    t.emplace(0, Quad3(1));
    for (long m = 1;; ++m) {
        Rational e = s * Rational(m * m);
        if (e >= trunc) break;
        t.emplace(to_long((e * Rational(d)).num()), Quad3(2));
    }
    return QSeries::from_terms(d, std::move(t), trunc);
}

QSeries phi0(const Rational& s, const Rational& trunc) {
    return (theta2(s, trunc) * theta2(Rational(3) * s, trunc) + theta3(s, trunc) * theta3(Rational(3) * s, trunc))
        .truncated(trunc);
}

QSeries theta_H_E6(const Rational& trunc) {
    QSeries p = phi0(Rational(1), trunc);
    QSeries p3 = phi0(Rational(3), trunc);
    QSeries d = Quad3(3) * p3 - p;
    QSeries out = p.pow(3) + Quad3(Rational(1, 4)) * d.pow(3);
    return (Quad3(Rational(1, 3)) * out).truncated(trunc);
}

QSeries twisted_trace(int s, int t, const QSeries& theta_H, const Rational& trunc) {
    if (s < 0 || t < 0) throw std::invalid_argument("twisted_trace: s, t must be nonnegative");
    const Rational l1 = Rational(t - s, 24), l2 = Rational(-3 * t, 24);
    const Rational l0 = theta_H.lowest_exponent().value_or(Rational(0));
    return product_to(trunc, {{l0, [&](const Rational& T) { return theta_H.truncated(T); }},
                              {l1, [&](const Rational& T) { return eta_power(Rational(1), t - s, T); }},
                              {l2, [&](const Rational& T) { return eta_power(Rational(3), -t, T); }}});
}

std::string to_string(LatticeCase c) { return c == LatticeCase::LEECH ? "LEECH" : "E6_NIEMEIER"; }

namespace {

// (1/3)[phi0(tau/3)^3 + (1/4)(phi0(tau/9) - phi0(tau/3))^3], i.e. Theta_H(-1/tau) without its constant
QSeries theta_H_E6_dual(const Rational& trunc) {
    QSeries a = phi0(Rational(1, 3), trunc);
    QSeries b = phi0(Rational(1, 9), trunc);
    QSeries d = b - a;
    return (Quad3(Rational(1, 3)) * (a.pow(3) + Quad3(Rational(1, 4)) * d.pow(3))).truncated(trunc);
}

Transformed finish(std::vector<std::pair<std::string, ModularScalar>> factors, QSeries series) {
    Transformed out;
    for (const auto& f : factors) out.constant = out.constant * f.second;
    out.factors = std::move(factors);
    if (!out.constant.closed()) {
        std::ostringstream os;
        os << "transformation constant does not close: " << out.constant;
        throw std::logic_error(os.str());
    }
    out.series = out.constant.value() * std::move(series);
    return out;
}

}  // namespace

Transformed s_transform_twisted(LatticeCase c, const Rational& trunc) {
    if (c == LatticeCase::LEECH) {
        std::vector<std::pair<std::string, ModularScalar>> f = {
            {"eta(-1/tau)^12", ModularScalar::tau_over_i_sqrt().pow(12)},
            {"eta(-3/tau)^-12", ModularScalar::tau_over_3i_sqrt().pow(-12)}};
        QSeries s = product_to(trunc, {{Rational(12, 24), [](const Rational& T) { return eta_power(Rational(1), 12, T); }},
                                       {Rational(-12, 72),
                                        [](const Rational& T) { return eta_power(Rational(1, 3), -12, T); }}});
        return finish(std::move(f), std::move(s));
    }
    std::vector<std::pair<std::string, ModularScalar>> f = {
        {"Theta_H(-1/tau)", ModularScalar::tau_over_i_sqrt3().pow(3)},
        {"eta(-1/tau)^3", ModularScalar::tau_over_i_sqrt().pow(3)},
        {"eta(-3/tau)^-9", ModularScalar::tau_over_3i_sqrt().pow(-9)}};
    QSeries s = product_to(trunc, {{Rational(0), [](const Rational& T) { return theta_H_E6_dual(T); }},
                                   {Rational(3, 24), [](const Rational& T) { return eta_power(Rational(1), 3, T); }},
                                   {Rational(-9, 72),
                                    [](const Rational& T) { return eta_power(Rational(1, 3), -9, T); }}});
    return finish(std::move(f), std::move(s));
}

Transformed theta_H_over_eta6_transformed(const Rational& trunc) {
    std::vector<std::pair<std::string, ModularScalar>> f = {
        {"Theta_H(-1/tau)", ModularScalar::tau_over_i_sqrt3().pow(3)},
        {"eta(-1/tau)^-6", ModularScalar::tau_over_i_sqrt().pow(-6)}};
    QSeries s = product_to(trunc, {{Rational(0), [](const Rational& T) { return theta_H_E6_dual(T); }},
                                   {Rational(-6, 24), [](const Rational& T) { return eta_power(Rational(1), -6, T); }}});
    return finish(std::move(f), std::move(s));
}

QSeries sector_extract(const QSeries& series, const Rational& residue) {
    const int d = series.exp_denominator() * to_int(residue.den());
    std::map<long, Quad3> t;
    for (const auto& [e, c] : series.terms())
        if ((e - residue).is_integer()) t.emplace(to_long((e * Rational(d)).num()), c);
    return QSeries::from_terms(d, std::move(t), series.truncation());
}

QSeries eisenstein_E4(const Rational& trunc) {
    const long N = std::max(0L, to_long(ceil_q(trunc)));
    std::map<long, Quad3> t;
    t.emplace(0, Quad3(1));
    for (long n = 1; n < N; ++n) {
        mpz_class s3 = 0;
        for (long dv = 1; dv <= n; ++dv)
            if (n % dv == 0) s3 += mpz_class(dv) * dv * dv;
        t.emplace(n, Quad3(Rational(mpz_class(240 * s3))));
    }
    return QSeries::from_terms(1, std::move(t), trunc);
}

namespace {

// (E4^3 + c Delta) / Delta
QSeries e4cubed_over_delta(const Rational& trunc, long c) {
    QSeries num = eisenstein_E4(trunc + Rational(1)).pow(3);
    num += Quad3(c) * eta_power(Rational(1), 24, trunc + Rational(1));
    return product_to(trunc, {{Rational(0), [&](const Rational& T) { return num.truncated(T); }},
                              {Rational(-1), [](const Rational& T) { return eta_power(Rational(1), -24, T); }}});
}

}  // namespace

QSeries j_oracle(const Rational& trunc) { return e4cubed_over_delta(trunc, 0) - QSeries(Quad3(744)); }

OrbifoldCharacter orbifold_character(LatticeCase c, const Rational& trunc) {
    OrbifoldCharacter out;
    const bool leech = c == LatticeCase::LEECH;
    const long roots = leech ? 0 : 288;  // E6^4 root system
    out.ch_v = e4cubed_over_delta(trunc, roots - 720);
    QSeries th = leech ? QSeries(Quad3(1)) : theta_H_E6(trunc + Rational(2));
    out.twisted = leech ? twisted_trace(0, 12, th, trunc) : twisted_trace(6, 9, th, trunc);
    out.ch_w0 = Quad3(Rational(1, 3)) * (out.ch_v + Quad3(2) * out.twisted);
    out.transformed = s_transform_twisted(c, trunc).series;
    out.w3 = sector_extract(out.transformed, Rational(0));
    out.total = out.ch_w0 + Quad3(2) * out.w3;
    return out;
}

Complex numeric_eval(const QSeries& s, Complex tau) {
    if (!(tau.imag() > 0)) throw std::domain_error("numeric_eval: tau must lie in the upper half plane");
    Complex sum = 0;
    const Complex two_pi_i_tau = Complex(0, 2 * M_PI) * tau;
    for (const auto& [e, c] : s.terms()) sum += numeric_embed(c) * std::exp(two_pi_i_tau * e.to_double());
    return sum;
}

nlohmann::ordered_json to_json(const QSeries& s) {
    nlohmann::ordered_json j;
    j["exp_denominator"] = s.exp_denominator();
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back({e.num().get_str(), e.den().get_str(), c.r.str(), c.s.str()});
    j["terms"] = terms;
    j["truncation"] = s.truncation() ? nlohmann::ordered_json(s.truncation()->str()) : nlohmann::ordered_json(nullptr);
    return j;
}

}  // namespace z3orb
