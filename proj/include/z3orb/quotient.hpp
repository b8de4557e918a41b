#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "z3orb/fock.hpp"
#include "z3orb/linalg.hpp"

namespace z3orb {

enum class Modulus { C2_SIGMA, C1_SIGMA, OMEGA0_FULL, C2_SIGMA_PLUS_OMEGA0 };
std::string to_string(Modulus m);

enum class Status { Verified, Refuted };
std::string to_string(Status s);

// Row-reduced span inside the charge-0 block of one weight grade.
class GradedSpan {
public:
    GradedSpan(int weight, Modulus modulus);

    int weight() const { return weight_; }
    Modulus modulus() const { return modulus_; }
    std::size_t rank() const { return rref_.rank(); }
    std::size_t ambient_dim() const { return basis_.size(); }
    std::size_t generator_count() const { return generators_; }
    const std::vector<OscMonomial>& basis() const { return basis_; }

    SparseVec<Rational> to_vec(const FockElement& v) const;  // throws on foreign monomials
    FockElement from_vec(const SparseVec<Rational>& v) const;
    FockElement residual(const FockElement& v) const;

    // Adds a generator; returns true if the rank grew.
    bool add(const FockElement& g);
    const SparseRref<Rational>& rref() const { return rref_; }

private:
    friend GradedSpan build_span(int, Modulus);
    int weight_;
    Modulus modulus_;
    std::vector<OscMonomial> basis_;
    std::map<OscMonomial, int> index_;
    SparseRref<Rational> rref_;
    std::size_t generators_ = 0;
};

GradedSpan build_span(int weight, Modulus modulus);
// Enumerates generators in a caller-chosen order (used to test order independence).
GradedSpan build_span_shuffled(int weight, Modulus modulus, unsigned seed);
// Per-thread memo of build_span.
const GradedSpan& cached_span(int weight, Modulus modulus);

struct Membership {
    bool member = false;
    FockElement residual;
};

// Throws std::invalid_argument for inhomogeneous input, weight mismatch or nonzero charge.
Membership member(const FockElement& v, const GradedSpan& span);

struct Report {
    std::string identity_id;
    Modulus modulus = Modulus::C2_SIGMA;
    Status status = Status::Refuted;
    FockElement residual;
    std::size_t generator_count = 0;
    std::size_t rank = 0;
    int weight = 0;
    std::string detail;
};

Report verify_identity(const std::string& id, const FockElement& lhs_minus_rhs, Modulus modulus);

// Closed-form gamma(t) coefficient of the aaaa congruence and the binomial expression of its derivation.
Rational aaaa_coefficient(int r, int m, int n);
Rational aaaa_proof_coefficient(int r, int m, int n);
// a(-r)a(-m)a'(-n)a'(-1) - C(-m,n-1) gamma(r+1)gamma(m+n)
FockElement aaaa_base(int r, int m, int n);

struct AaaaCheck {
    int r = 0, m = 0, n = 0;
    Rational coefficient;
    Rational proof_coefficient;
    // variant name ("statement", "flipped", "proof") -> report under OMEGA0_FULL and C2_SIGMA
    std::map<std::string, Report> omega0;
    std::map<std::string, Report> c2;
    Report summary;  // verified iff some variant holds modulo OMEGA0_FULL
};

AaaaCheck prop_aaaa_check(int r, int m, int n);

enum class SpanningSet { S1, S2, O_SPAN };
std::string to_string(SpanningSet s);
std::vector<FockElement> spanning_elements(int weight, SpanningSet set);
Report spanning_check(int weight, SpanningSet set);

// Coordinates of target in the residue classes of basis_elems at one grade.
// Throws std::runtime_error when the classes are linearly dependent; nullopt when target is outside.
std::optional<std::vector<Rational>> residue_coordinates(const GradedSpan& span,
                                                         const std::vector<FockElement>& basis_elems,
                                                         const FockElement& target);

struct Gamma4Matrix {
    Eigen::Matrix<Rational, 2, 2> m;
    Rational trace;        // of 1800 m
    Rational determinant;  // of 1800 m
    // X^2 + c1 X + c0 for 1800 m
    Rational c1, c0;
    std::string charpoly() const;
};

class Gamma4Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Weight-8 row: gamma(4)gamma(4) in {gamma(2)gamma(3)^2, gamma(2)^2 gamma(4)}.
std::vector<Rational> gamma4_row_weight8();
// Weight-10 row: gamma(4)gamma(3)^2 in {gamma(2)^2 gamma(3)^2, gamma(2)^3 gamma(4)}.
std::vector<Rational> gamma4_row_weight10();
Gamma4Matrix gamma4_matrix();

}  // namespace z3orb
