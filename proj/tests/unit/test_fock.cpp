#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "z3orb/fock.hpp"

using namespace z3orb;

namespace {

// Independent oracle: v_n u = sum over mode tuples of the normally ordered product
// :d^(i_1-1)h_1(z)/(i_1-1)! ... : applied to u, with annihilators acting first.
using Term = std::map<OscMonomial, Rational>;

void act(Gen h, int m, const OscMonomial& x, const Rational& c, Term& out) {
    if (m < 0) {
        auto a = x.a_modes, b = x.b_modes;
        (h == Gen::A ? a : b).push_back(-m);
        out[OscMonomial(a, b)] += c;
        return;
    }
    if (m == 0) return;
    // a(m) contracts with a'(-m) and vice versa, pairing 1
    const auto& partner = h == Gen::A ? x.b_modes : x.a_modes;
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] != m) continue;
        auto rest = partner;
        rest.erase(rest.begin() + static_cast<long>(i));
        OscMonomial y = h == Gen::A ? OscMonomial(x.a_modes, rest) : OscMonomial(rest, x.b_modes);
        out[y] += c * Rational(m);
    }
}

FockElement oracle(const OscMonomial& v, int n, const FockElement& u) {
    std::vector<std::pair<Gen, int>> f;
    for (int i : v.a_modes) f.emplace_back(Gen::A, i);
    for (int j : v.b_modes) f.emplace_back(Gen::Aprime, j);
    const int wu = u.is_zero() ? 0 : *u.weight();
    const int target = n + 1 - v.weight();  // sum of the chosen modes
    const int lo = std::min(-1, target - wu), hi = wu;
    FockElement out;
    std::vector<int> ms(f.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int sum) {
        if (k == f.size()) {
            if (sum != target) return;
            Rational coef(1);
            for (std::size_t t = 0; t < f.size(); ++t) coef *= Rational(binomial(-ms[t] - 1, f[t].second - 1));
            if (coef.is_zero()) return;
            Term cur;
            for (const auto& [mono, c] : u.terms()) cur[mono] += c * coef;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t t = 0; t < f.size(); ++t) {
                    const bool ann = ms[t] >= 0;
                    if (ann != (pass == 0)) continue;
                    Term nxt;
                    for (const auto& [mono, c] : cur)
                        if (!c.is_zero()) act(f[t].first, ms[t], mono, c, nxt);
                    cur = std::move(nxt);
                }
            for (const auto& [mono, c] : cur) out.add_term(mono, c);
            return;
        }
        for (int m = lo; m <= hi; ++m) {
            ms[k] = m;
            rec(k + 1, sum + m);
        }
    };
    if (f.empty()) return n == -1 ? u : FockElement();
    rec(0, 0);
    return out;
}

FockElement oracle(const FockElement& v, int n, const FockElement& u) {
    FockElement out;
    for (const auto& [mono, c] : v.terms()) out += c * oracle(mono, n, u);
    return out;
}

long two_colour(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int copy = 0; copy < 2; ++copy)
        for (int part = 1; part <= n; ++part)
            for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
    return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("monomial canonical form") {
    OscMonomial m({1, 3, 2}, {1, 4});
    CHECK(m.a_modes == std::vector<int>{3, 2, 1});
    CHECK(m.b_modes == std::vector<int>{4, 1});
    CHECK(m.weight() == 11);
    CHECK(m.sigma_charge() == 1);
    CHECK(OscMonomial({1, 1}, {}).str() == "a(-1)^2");
}

TEST_CASE("mode_apply examples") {
    CHECK(mode_apply(Gen::A, 1, elem({}, {1})) == FockElement::vacuum());
    CHECK(mode_apply(Gen::A, 0, elem({2}, {3, 1})).is_zero());
    CHECK(mode_apply(Gen::A, 2, elem({}, {2, 1})) == Rational(2) * elem({}, {1}));
    CHECK(mode_apply(Gen::A, 3, elem({}, {3, 3})) == Rational(6) * elem({}, {3}));
    CHECK(mode_apply(Gen::A, 1, elem({1}, {})).is_zero());
}

TEST_CASE("commutator identity") {
    for (int w = 0; w <= 6; ++w)
        for (const auto& b : basis(w)) {
            const FockElement v(b);
            for (int n = -6; n <= 6; ++n)
                for (int m = -6; m <= 6; ++m) {
                    FockElement lhs = mode_apply(Gen::A, n, mode_apply(Gen::Aprime, m, v)) -
                                      mode_apply(Gen::Aprime, m, mode_apply(Gen::A, n, v));
                    FockElement rhs = n + m == 0 ? Rational(n) * v : FockElement();
                    REQUIRE(lhs == rhs);
                    REQUIRE((mode_apply(Gen::A, n, mode_apply(Gen::A, m, v)) ==
                             mode_apply(Gen::A, m, mode_apply(Gen::A, n, v))));
                }
        }
}

TEST_CASE("normal product examples") {
    CHECK(normal_product(gamma(3), -1, FockElement::vacuum()) == gamma(3));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            CHECK(normal_product(omega(), 0, elem({n}, {m})) ==
                  Rational(n) * elem({n + 1}, {m}) + Rational(m) * elem({n}, {m + 1}));
    CHECK(normal_product(FockElement::vacuum(), -1, gamma(4)) == gamma(4));
    CHECK(normal_product(FockElement::vacuum(), 0, gamma(4)).is_zero());
}

TEST_CASE("normal product agrees with the mode-sum oracle") {
    CHECK(normal_product(gamma(2), -1, gamma(2)) == oracle(gamma(2), -1, gamma(2)));
    for (int wv = 1; wv <= 3; ++wv)
        for (const auto& v : basis(wv))
            for (int wu = 0; wu <= 3; ++wu)
                for (const auto& u : basis(wu))
                    for (int n = -3; n <= wv + wu; ++n) {
                        const FockElement lib = normal_product(FockElement(v), n, FockElement(u));
                        const FockElement ref = oracle(v, n, FockElement(u));
                        INFO(v.str(), " _", n, " ", u.str());
                        REQUIRE(lib == ref);
                    }
    // a few heavier pairs
    CHECK(normal_product(elem({2, 1}, {1}), -2, elem({1}, {3})) == oracle(mono({2, 1}, {1}), -2, elem({1}, {3})));
    CHECK(normal_product(gamma(4), -1, gamma(3)) == oracle(gamma(4), -1, gamma(3)));
}

TEST_CASE("homogeneity and charge additivity") {
    for (int wv = 1; wv <= 3; ++wv)
        for (const auto& v : basis(wv))
            for (int wu = 1; wu <= 3; ++wu)
                for (const auto& u : basis(wu))
                    for (int n = -3; n <= 3; ++n) {
                        const FockElement r = normal_product(FockElement(v), n, FockElement(u));
                        if (r.is_zero()) continue;
                        REQUIRE(r.weight().has_value());
                        CHECK(*r.weight() == wv + wu - n - 1);
                        REQUIRE(r.sigma_charge().has_value());
                        CHECK(*r.sigma_charge() == (v.sigma_charge() + u.sigma_charge()) % 3);
                    }
}

TEST_CASE("skew symmetry via the oracle") {
    // v_n u = sum_j (-1)^(n+j+1) L(-1)^j/j! u_(n+j) v
    for (int wv = 1; wv <= 3; ++wv)
        for (const auto& v : basis(wv))
            for (int wu = 1; wu <= 3; ++wu)
                for (const auto& u : basis(wu))
                    for (int n = -2; n <= 2; ++n) {
                        FockElement rhs;
                        for (int j = 0; n + j <= wv + wu; ++j) {
                            FockElement t = oracle(u, n + j, FockElement(v));
                            for (int k = 0; k < j; ++k) t = virasoro(-1, t);
                            const Rational sign((n + j + 1) % 2 == 0 ? 1 : -1);
                            rhs += sign / Rational(factorial(j)) * t;
                        }
                        REQUIRE(normal_product(FockElement(v), n, FockElement(u)) == rhs);
                    }
}

TEST_CASE("virasoro") {
    CHECK(virasoro(0, elem({3}, {1})) == Rational(4) * elem({3}, {1}));
    CHECK(virasoro(-1, FockElement::vacuum()).is_zero());
    CHECK(virasoro(1, gamma(2)) == oracle(omega(), 2, gamma(2)));
    CHECK(virasoro(2, gamma(2)) == oracle(omega(), 3, gamma(2)));  // central term c/2 = 1
    CHECK(virasoro(2, gamma(2)) == FockElement::vacuum());
    for (int w = 0; w <= 6; ++w)
        for (const auto& b : basis(w)) CHECK(virasoro(0, FockElement(b)) == Rational(w) * FockElement(b));
}

TEST_CASE("L(-1) derivative property") {
    std::vector<FockElement> us;
    for (int w = 0; w <= 6; ++w)
        for (const auto& b : basis(w)) us.emplace_back(b);
    for (int wv = 1; wv <= 4; ++wv)
        for (const auto& b : basis(wv)) {
            const FockElement v(b);
            const FockElement dv = virasoro(-1, v);
            for (int m = -4; m <= 4; ++m)
                for (const auto& u : us)
                    REQUIRE(normal_product(dv, m, u) == Rational(-m) * normal_product(v, m - 1, u));
        }
}

TEST_CASE("gamma") {
    CHECK(gamma(2) == elem({1}, {1}));
    CHECK(gamma(2) == omega());
    CHECK(*gamma(5).weight() == 5);
    CHECK(*gamma(7).sigma_charge() == 0);
    CHECK_THROWS(gamma(1));
}

TEST_CASE("basis enumeration") {
    CHECK(basis(0) == std::vector<OscMonomial>{OscMonomial()});
    CHECK(basis(2).size() == 5);
    CHECK(basis(2, 0) == std::vector<OscMonomial>{mono({1}, {1})});
    for (int n = 0; n <= 14; ++n) CHECK(static_cast<long>(basis(n).size()) == two_colour(n));
    std::size_t total = 0;
    for (int c = 0; c < 3; ++c) total += basis(9, c).size();
    CHECK(total == basis(9).size());
    auto b = basis(8);
    CHECK(std::set<OscMonomial>(b.begin(), b.end()).size() == b.size());
}
