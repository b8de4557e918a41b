#include "z3orb/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace z3orb {

OscMonomial::OscMonomial(std::vector<int> a, std::vector<int> b) : a_modes(std::move(a)), b_modes(std::move(b)) {
    for (int i : a_modes)
        if (i < 1) throw std::invalid_argument("OscMonomial: mode index must be >= 1");
    for (int j : b_modes)
        if (j < 1) throw std::invalid_argument("OscMonomial: mode index must be >= 1");
    std::sort(a_modes.begin(), a_modes.end(), std::greater<>());
    std::sort(b_modes.begin(), b_modes.end(), std::greater<>());
}

int OscMonomial::weight() const {
    int w = 0;
    for (int i : a_modes) w += i;
    for (int j : b_modes) w += j;
    return w;
}

int OscMonomial::sigma_charge() const { return ((u1_charge() % 3) + 3) % 3; }

std::string OscMonomial::str() const {
    if (is_vacuum()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::vector<int>& v, const char* name) {
        for (std::size_t k = 0; k < v.size();) {
            std::size_t e = k;
            while (e < v.size() && v[e] == v[k]) ++e;
            if (!first) os << " ";
            first = false;
            os << name << "(-" << v[k] << ")";
            if (e - k > 1) os << "^" << (e - k);
            k = e;
        }
    };
    emit(a_modes, "a");
    emit(b_modes, "a'");
    return os.str();
}

OscMonomial mono(std::vector<int> a, std::vector<int> b) { return {std::move(a), std::move(b)}; }
FockElement elem(std::vector<int> a, std::vector<int> b) { return FockElement(mono(std::move(a), std::move(b))); }

FockElement::FockElement(const OscMonomial& m, Rational c) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

Rational FockElement::coeff(const OscMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FockElement::add_term(const OscMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> FockElement::weight() const {
    if (terms_.empty()) return std::nullopt;
    int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return std::nullopt;
    return w;
}

std::optional<int> FockElement::sigma_charge() const {
    if (terms_.empty()) return std::nullopt;
    int q = terms_.begin()->first.sigma_charge();
    for (const auto& [m, c] : terms_)
        if (m.sigma_charge() != q) return std::nullopt;
    return q;
}

std::string FockElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1) || m.is_vacuum()) os << a << (m.is_vacuum() ? "" : " ");
        if (!m.is_vacuum()) os << m.str();
    }
    return os.str();
}

FockElement FockElement::operator-() const {
    FockElement out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

FockElement& FockElement::operator+=(const FockElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

FockElement& FockElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

namespace {

// x(-m) applied to a monomial, m >= 1.
OscMonomial create(Gen gen, int m, const OscMonomial& w) {
    OscMonomial out = w;
    auto& v = gen == Gen::A ? out.a_modes : out.b_modes;
    v.insert(std::upper_bound(v.begin(), v.end(), m, std::greater<>()), m);
    return out;
}

// x(i) applied to a monomial, i >= 1: contracts with the partner mode of index i.
bool annihilate(Gen gen, int i, const OscMonomial& w, OscMonomial& out, long& mult) {
    const auto& partner = gen == Gen::A ? w.b_modes : w.a_modes;
    auto cnt = std::count(partner.begin(), partner.end(), i);
    if (cnt == 0) return false;
    out = w;
    auto& p = gen == Gen::A ? out.b_modes : out.a_modes;
    p.erase(std::find(p.begin(), p.end(), i));
    mult = static_cast<long>(i) * cnt;
    return true;
}

int max_partner(Gen gen, const OscMonomial& w) {
    const auto& partner = gen == Gen::A ? w.b_modes : w.a_modes;
    return partner.empty() ? 0 : partner.front();
}

std::string cache_key(const OscMonomial& u, int n, const OscMonomial& w) {
    std::string k;
    k.reserve(2 * (u.a_modes.size() + u.b_modes.size() + w.a_modes.size() + w.b_modes.size()) + 8);
    auto put = [&k](int x) {
        k.push_back(static_cast<char>(x & 0xff));
        k.push_back(static_cast<char>((x >> 8) & 0xff));
    };
    for (int x : u.a_modes) put(x);
    put(0);
    for (int x : u.b_modes) put(x);
    put(0);
    put(n);
    for (int x : w.a_modes) put(x);
    put(0);
    for (int x : w.b_modes) put(x);
    return k;
}

thread_local std::unordered_map<std::string, FockElement> np_cache;

const FockElement& np_mono(const OscMonomial& u, int n, const OscMonomial& w);

FockElement compute_np(const OscMonomial& u, int n, const OscMonomial& w) {
    if (u.is_vacuum()) return n == -1 ? FockElement(w) : FockElement();
    // peel the largest creation mode; ties go to a
    OscMonomial rest = u;
    Gen gen;
    int m;
    if (!rest.a_modes.empty() && (rest.b_modes.empty() || rest.a_modes.front() >= rest.b_modes.front())) {
        gen = Gen::A;
        m = rest.a_modes.front();
        rest.a_modes.erase(rest.a_modes.begin());
    } else {
        gen = Gen::Aprime;
        m = rest.b_modes.front();
        rest.b_modes.erase(rest.b_modes.begin());
    }
    const int wr = rest.weight();
    const int ww = w.weight();
    const int first_max = wr + ww - n - 1;  // rest_{n+i} w vanishes beyond this i
    const int second_max = max_partner(gen, w);
    const int imax = std::max(first_max, second_max);
    const bool m_odd = (m % 2) != 0;

    FockElement out;
    for (int i = 0; i <= imax; ++i) {
        // (-1)^i C(-m, i) = C(m+i-1, i)
        Rational c(binomial(m + i - 1, i));
        if (i <= first_max) {
            for (const auto& [k, x] : np_mono(rest, n + i, w).terms()) out.add_term(create(gen, m + i, k), c * x);
        }
        if (i >= 1 && i <= second_max) {
            OscMonomial w2;
            long mult = 0;
            if (annihilate(gen, i, w, w2, mult)) {
                Rational c2 = c * Rational(mult);
                if (!m_odd) c2 = -c2;  // -(-1)^m
                for (const auto& [k, x] : np_mono(rest, -m + n - i, w2).terms()) out.add_term(k, c2 * x);
            }
        }
    }
    return out;
}

const FockElement& np_mono(const OscMonomial& u, int n, const OscMonomial& w) {
    static const FockElement zero;
    if (u.weight() + w.weight() - n - 1 < 0) return zero;
    std::string key = cache_key(u, n, w);
    auto it = np_cache.find(key);
    if (it != np_cache.end()) return it->second;
    FockElement r = compute_np(u, n, w);
    return np_cache.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace

void clear_normal_product_cache() { np_cache.clear(); }
std::size_t normal_product_cache_size() { return np_cache.size(); }

FockElement mode_apply(Gen gen, int n, const OscMonomial& v) {
    if (n < 0) return FockElement(create(gen, -n, v));
    if (n == 0) return {};
    OscMonomial out;
    long mult = 0;
    if (!annihilate(gen, n, v, out, mult)) return {};
    return FockElement(out, Rational(mult));
}

FockElement mode_apply(Gen gen, int n, const FockElement& v) {
    FockElement out;
    for (const auto& [m, c] : v.terms()) {
        FockElement t = mode_apply(gen, n, m);
        for (const auto& [k, x] : t.terms()) out.add_term(k, c * x);
    }
    return out;
}

FockElement normal_product(const OscMonomial& v, int n, const OscMonomial& u) { return np_mono(v, n, u); }

FockElement normal_product(const FockElement& v, int n, const FockElement& u) {
    FockElement out;
    for (const auto& [mv, cv] : v.terms())
        for (const auto& [mu, cu] : u.terms()) {
            Rational c = cv * cu;
            for (const auto& [k, x] : np_mono(mv, n, mu).terms()) out.add_term(k, c * x);
        }
    return out;
}

FockElement virasoro(int k, const FockElement& v) { return normal_product(omega(), k + 1, v); }

FockElement gamma(int n) {
    if (n < 2) throw std::invalid_argument("gamma(n) requires n >= 2");
    return elem({n - 1}, {1});
}

FockElement omega() { return gamma(2); }

FockElement product(const std::vector<FockElement>& factors) {
    if (factors.empty()) return FockElement::vacuum();
    FockElement acc = factors.back();
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = normal_product(*it, -1, acc);
    return acc;
}

FockElement power(const FockElement& x, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    return product(std::vector<FockElement>(static_cast<std::size_t>(k), x));
}

namespace {

void partitions(int n, int maxp, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

const std::vector<std::vector<int>>& partitions_of(int n) {
    thread_local std::map<int, std::vector<std::vector<int>>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return memo.emplace(n, std::move(out)).first->second;
}

}  // namespace

std::vector<OscMonomial> basis(int weight, std::optional<int> charge_filter) {
    if (weight < 0) throw std::invalid_argument("basis: negative weight");
    std::vector<OscMonomial> out;
    for (int wa = weight; wa >= 0; --wa) {
        for (const auto& A : partitions_of(wa))
            for (const auto& B : partitions_of(weight - wa)) {
                int q = ((static_cast<int>(A.size()) - static_cast<int>(B.size())) % 3 + 3) % 3;
                if (charge_filter && q != *charge_filter) continue;
                OscMonomial m;
                m.a_modes = A;
                m.b_modes = B;
                out.push_back(std::move(m));
            }
    }
    return out;
}

}  // namespace z3orb
