#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z3orb/scalar.hpp"

namespace z3orb {

enum class Gen { A, Aprime };

// a(-i_1)...a(-i_h) a'(-j_1)...a'(-j_k) 1 with both index lists non-increasing.
struct OscMonomial {
    std::vector<int> a_modes;
    std::vector<int> b_modes;

    OscMonomial() = default;
    OscMonomial(std::vector<int> a, std::vector<int> b);  // sorts into canonical form

    int weight() const;
    int sigma_charge() const;  // (#a - #a') mod 3 in {0,1,2}
    int u1_charge() const { return static_cast<int>(a_modes.size()) - static_cast<int>(b_modes.size()); }
    bool is_vacuum() const { return a_modes.empty() && b_modes.empty(); }
    std::string str() const;

    friend bool operator==(const OscMonomial& x, const OscMonomial& y) {
        return x.a_modes == y.a_modes && x.b_modes == y.b_modes;
    }
    friend bool operator<(const OscMonomial& x, const OscMonomial& y) {
        if (x.a_modes != y.a_modes) return x.a_modes < y.a_modes;
        return x.b_modes < y.b_modes;
    }
};

class FockElement {
public:
    using Terms = std::map<OscMonomial, Rational>;

    FockElement() = default;
    FockElement(const OscMonomial& m, Rational c = Rational(1));  // NOLINT(google-explicit-constructor)

    static FockElement vacuum() { return FockElement(OscMonomial{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const OscMonomial& m) const;
    void add_term(const OscMonomial& m, const Rational& c);

    // Weight of a homogeneous element; nullopt when zero or inhomogeneous.
    std::optional<int> weight() const;
    std::optional<int> sigma_charge() const;
    std::string str() const;

    FockElement operator-() const;
    FockElement& operator+=(const FockElement& o);
    FockElement& operator-=(const FockElement& o);
    FockElement& operator*=(const Rational& c);

    friend FockElement operator+(FockElement x, const FockElement& y) { return x += y; }
    friend FockElement operator-(FockElement x, const FockElement& y) { return x -= y; }
    friend FockElement operator*(const Rational& c, FockElement x) { return x *= c; }
    friend bool operator==(const FockElement& x, const FockElement& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const FockElement& x, const FockElement& y) { return !(x == y); }

private:
    Terms terms_;
};

FockElement mode_apply(Gen gen, int n, const FockElement& v);
FockElement mode_apply(Gen gen, int n, const OscMonomial& v);

// v_n u via the creation-mode recursion, memoized per thread.
FockElement normal_product(const FockElement& v, int n, const FockElement& u);
FockElement normal_product(const OscMonomial& v, int n, const OscMonomial& u);

// L(k) v = omega_{k+1} v
FockElement virasoro(int k, const FockElement& v);

FockElement gamma(int n);
FockElement omega();
// Iterated -1 products, right-nested: x1 (x2 (... xk)).
FockElement product(const std::vector<FockElement>& factors);
FockElement power(const FockElement& x, int k);

std::vector<OscMonomial> basis(int weight, std::optional<int> charge_filter = std::nullopt);

// Convenience constructors.
OscMonomial mono(std::vector<int> a, std::vector<int> b);
FockElement elem(std::vector<int> a, std::vector<int> b);

void clear_normal_product_cache();
std::size_t normal_product_cache_size();

}  // namespace z3orb
