#include "z3orb/quotient.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <tuple>

namespace z3orb {

std::string to_string(Modulus m) {
    switch (m) {
        case Modulus::C2_SIGMA: return "C2_SIGMA";
        case Modulus::C1_SIGMA: return "C1_SIGMA";
        case Modulus::OMEGA0_FULL: return "OMEGA0_FULL";
        case Modulus::C2_SIGMA_PLUS_OMEGA0: return "C2_SIGMA_PLUS_OMEGA0";
    }
    return "?";
}

std::string to_string(Status s) { return s == Status::Verified ? "verified" : "refuted"; }

std::string to_string(SpanningSet s) {
    switch (s) {
        case SpanningSet::S1: return "S1";
        case SpanningSet::S2: return "S2";
        case SpanningSet::O_SPAN: return "O_SPAN";
    }
    return "?";
}

GradedSpan::GradedSpan(int weight, Modulus modulus) : weight_(weight), modulus_(modulus) {
    if (weight < 0) throw std::invalid_argument("GradedSpan: negative weight");
    basis_ = z3orb::basis(weight, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
}

SparseVec<Rational> GradedSpan::to_vec(const FockElement& v) const {
    SparseVec<Rational> out;
    for (const auto& [m, c] : v.terms()) {
        auto it = index_.find(m);
        if (it == index_.end())
            throw std::invalid_argument("GradedSpan: monomial " + m.str() + " is outside the charge-0 grade " +
                                        std::to_string(weight_));
        out.emplace(it->second, c);
    }
    return out;
}

FockElement GradedSpan::from_vec(const SparseVec<Rational>& v) const {
    FockElement out;
    for (const auto& [i, c] : v) out.add_term(basis_.at(static_cast<std::size_t>(i)), c);
    return out;
}

FockElement GradedSpan::residual(const FockElement& v) const { return from_vec(rref_.reduce(to_vec(v))); }

bool GradedSpan::add(const FockElement& g) {
    ++generators_;
    return rref_.insert(to_vec(g));
}

namespace {

struct GenSpec {
    OscMonomial v;
    int n;
    OscMonomial u;
};

const OscMonomial& omega_mono() {
    static const OscMonomial w = mono({1}, {1});
    return w;
}

std::vector<GenSpec> generator_specs(int W, Modulus mod) {
    std::vector<GenSpec> out;
    auto add_products = [&](int n) {
        // v_n u with wt(v) >= 1, v and u sigma-invariant, wt(v)+wt(u)-n-1 = W
        for (int wv = 1; wv <= W; ++wv) {
            int wu = W - wv + n + 1;
            if (wu < 0) continue;
            if (n == -1 && wu < 1) continue;  // C1 needs wt(u) >= 1
            for (const auto& v : basis(wv, 0))
                for (const auto& u : basis(wu, 0)) out.push_back({v, n, u});
        }
    };
    auto add_omega0 = [&](bool full) {
        if (W < 1) return;
        for (const auto& u : full ? basis(W - 1) : basis(W - 1, 0)) out.push_back({omega_mono(), 0, u});
    };
    switch (mod) {
        case Modulus::C2_SIGMA: add_products(-2); break;
        case Modulus::C1_SIGMA:
            add_products(-1);
            add_omega0(false);  // L(-1) of the invariants
            break;
        case Modulus::OMEGA0_FULL: add_omega0(true); break;
        case Modulus::C2_SIGMA_PLUS_OMEGA0:
            add_products(-2);
            add_omega0(true);
            break;
    }
    return out;
}

void fill(GradedSpan& span, const std::vector<GenSpec>& specs) {
    for (const auto& s : specs) {
        FockElement g = normal_product(s.v, s.n, s.u);
        if (g.is_zero()) continue;
        if (g.sigma_charge() != 0) continue;  // lies in another charge block
        span.add(g);
    }
}

}  // namespace

GradedSpan build_span(int weight, Modulus modulus) {
    GradedSpan span(weight, modulus);
    fill(span, generator_specs(weight, modulus));
    return span;
}

GradedSpan build_span_shuffled(int weight, Modulus modulus, unsigned seed) {
    GradedSpan span(weight, modulus);
    auto specs = generator_specs(weight, modulus);
    std::mt19937 rng(seed);
    std::shuffle(specs.begin(), specs.end(), rng);
    fill(span, specs);
    return span;
}

const GradedSpan& cached_span(int weight, Modulus modulus) {
    thread_local std::map<std::pair<int, Modulus>, std::unique_ptr<GradedSpan>> memo;
    auto key = std::make_pair(weight, modulus);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;
    auto p = std::make_unique<GradedSpan>(build_span(weight, modulus));
    return *memo.emplace(key, std::move(p)).first->second;
}

Membership member(const FockElement& v, const GradedSpan& span) {
    if (v.is_zero()) return {true, {}};
    auto w = v.weight();
    if (!w) throw std::invalid_argument("member: inhomogeneous element");
    if (*w != span.weight())
        throw std::invalid_argument("member: weight " + std::to_string(*w) + " does not match grade " +
                                    std::to_string(span.weight()));
    if (v.sigma_charge() != 0) throw std::invalid_argument("member: element is not sigma-invariant");
    Membership out;
    out.residual = span.residual(v);
    out.member = out.residual.is_zero();
    return out;
}

Report verify_identity(const std::string& id, const FockElement& lhs_minus_rhs, Modulus modulus) {
    Report rep;
    rep.identity_id = id;
    rep.modulus = modulus;
    if (lhs_minus_rhs.is_zero()) {
        rep.status = Status::Verified;
        rep.detail = "expression is identically zero";
        return rep;
    }
    auto w = lhs_minus_rhs.weight();
    if (!w) throw std::invalid_argument("verify_identity: inhomogeneous expression for " + id);
    const GradedSpan& span = cached_span(*w, modulus);
    Membership mem = member(lhs_minus_rhs, span);
    rep.weight = *w;
    rep.status = mem.member ? Status::Verified : Status::Refuted;
    rep.residual = mem.residual;
    rep.generator_count = span.generator_count();
    rep.rank = span.rank();
    return rep;
}

Rational aaaa_coefficient(int r, int m, int n) {
    if (r < 1 || m < 1 || n < 1) throw std::invalid_argument("aaaa: parameters must be >= 1");
    mpz_class num = factorial(r + m + n - 1) * (m + n + r + 1);
    mpz_class den = factorial(r - 1) * factorial(m - 1) * factorial(n - 1) * (m + 1) * (r + n);
    if ((n - 1) % 2) num = -num;
    return {num, den};
}

Rational aaaa_proof_coefficient(int r, int m, int n) {
    if (r < 1 || m < 1 || n < 1) throw std::invalid_argument("aaaa: parameters must be >= 1");
    mpz_class a = binomial(r + m, m + 1) * m * binomial(-r - m - 1, n - 1);
    mpz_class b = binomial(r + n - 1, n) * n * binomial(m + r + n - 1, r + n);
    if (n % 2 != 0) b = -b;  // (-1)^n
    return Rational(mpz_class(a - b));
}

FockElement aaaa_base(int r, int m, int n) {
    FockElement lhs = elem({r, m}, {n, 1});
    FockElement prod = normal_product(gamma(r + 1), -1, gamma(m + n));
    return lhs - Rational(binomial(-m, n - 1)) * prod;
}

AaaaCheck prop_aaaa_check(int r, int m, int n) {
    AaaaCheck out;
    out.r = r;
    out.m = m;
    out.n = n;
    out.coefficient = aaaa_coefficient(r, m, n);
    out.proof_coefficient = aaaa_proof_coefficient(r, m, n);
    const int t = r + m + n + 1;
    FockElement base = aaaa_base(r, m, n);
    FockElement gt = gamma(t);
    // statement: lhs = C gamma gamma - c gamma(t), i.e. base + c gamma(t) = 0
    std::vector<std::pair<std::string, Rational>> variants = {
        {"statement", out.coefficient}, {"flipped", -out.coefficient}, {"proof", out.proof_coefficient}};
    std::ostringstream id;
    id << "aaaa(" << r << "," << m << "," << n << ")";
    std::vector<std::string> holds;
    for (const auto& [name, c] : variants) {
        FockElement e = base + c * gt;
        out.omega0[name] = verify_identity(id.str() + "." + name, e, Modulus::OMEGA0_FULL);
        out.c2[name] = verify_identity(id.str() + "." + name, e, Modulus::C2_SIGMA);
        if (out.omega0[name].status == Status::Verified) holds.push_back(name);
    }
    out.summary = out.omega0["statement"];
    out.summary.identity_id = id.str();
    if (!holds.empty()) {
        out.summary = out.omega0[holds.front()];
        out.summary.identity_id = id.str();
    }
    std::ostringstream d;
    d << "coefficient " << out.coefficient << " (derivation gives " << out.proof_coefficient << "); mod OMEGA0_FULL:";
    for (const auto& [name, c] : variants) d << " " << name << "=" << to_string(out.omega0[name].status);
    d << "; mod C2_SIGMA:";
    for (const auto& [name, c] : variants) d << " " << name << "=" << to_string(out.c2[name].status);
    out.summary.detail = d.str();
    return out;
}

std::vector<FockElement> spanning_elements(int W, SpanningSet set) {
    std::vector<FockElement> out;
    if (W == 0) {
        out.push_back(FockElement::vacuum());
        return out;
    }
    switch (set) {
        case SpanningSet::S2:
            for (int i = 0; i <= W; ++i) {
                int j = W - i;
                if ((i - j) % 3 == 0) out.push_back(elem(std::vector<int>(i, 1), std::vector<int>(j, 1)));
            }
            for (int i = 1; i < W; ++i) {
                int j = W - 1 - i;
                if (j < 1 || j > i) continue;
                out.push_back(elem({i, j, 1}, {}));
                out.push_back(elem({}, {i, j, 1}));
            }
            if (W - 3 >= 1) out.push_back(elem({W - 3, 1}, {1, 1}));
            if (W >= 2) out.push_back(elem({W - 1}, {1}));
            break;
        case SpanningSet::S1:
            for (int i = 1; i <= 5; ++i) {
                int j = W - 1 - i;
                if (j < 1 || j > i) continue;
                out.push_back(elem({i, j, 1}, {}));
                out.push_back(elem({}, {i, j, 1}));
            }
            if (W >= 2 && W - 1 <= 4) out.push_back(elem({W - 1}, {1}));
            break;
        case SpanningSet::O_SPAN:
            if (W % 2 == 0 && W >= 2) out.push_back(power(gamma(2), W / 2));
            if (W >= 2) out.push_back(gamma(W));
            if (W - 2 >= 2) out.push_back(normal_product(gamma(2), -1, gamma(W - 2)));
            break;
    }
    return out;
}

Report spanning_check(int W, SpanningSet set) {
    const Modulus mod = set == SpanningSet::S1 ? Modulus::C1_SIGMA : Modulus::C2_SIGMA;
    GradedSpan span = cached_span(W, mod);
    const std::size_t base_rank = span.rank();
    for (const auto& e : spanning_elements(W, set)) span.add(e);
    Report rep;
    rep.identity_id = "span." + to_string(set) + ".w" + std::to_string(W);
    rep.modulus = mod;
    rep.weight = W;
    rep.generator_count = span.generator_count();
    rep.rank = span.rank();
    std::size_t target = 0, covered = 0;
    for (const auto& b : span.basis()) {
        if (set == SpanningSet::O_SPAN && b.u1_charge() != 0) continue;
        ++target;
        FockElement r = span.residual(FockElement(b));
        if (r.is_zero()) {
            ++covered;
        } else if (rep.residual.is_zero()) {
            rep.residual = r;
        }
    }
    rep.status = covered == target ? Status::Verified : Status::Refuted;
    std::ostringstream d;
    d << "grade dim " << span.ambient_dim() << ", modulus rank " << base_rank << ", with set " << span.rank()
      << ", covered " << covered << "/" << target;
    rep.detail = d.str();
    return rep;
}

std::optional<std::vector<Rational>> residue_coordinates(const GradedSpan& span,
                                                         const std::vector<FockElement>& basis_elems,
                                                         const FockElement& target) {
    const int N = static_cast<int>(span.ambient_dim());
    const int k = static_cast<int>(basis_elems.size());
    SparseRref<Rational> aug;
    for (int i = 0; i < k; ++i) {
        SparseVec<Rational> v = span.rref().reduce(span.to_vec(basis_elems[static_cast<std::size_t>(i)]));
        if (v.empty())
            throw std::runtime_error("residue basis element " + std::to_string(i) + " vanishes modulo " +
                                     to_string(span.modulus()) + " at weight " + std::to_string(span.weight()));
        v.emplace(N + i, Rational(1));
        aug.insert(std::move(v));
    }
    for (const auto& [p, row] : aug.rows())
        if (p >= N)
            throw std::runtime_error("residue basis is linearly dependent modulo " + to_string(span.modulus()) +
                                     " at weight " + std::to_string(span.weight()));
    SparseVec<Rational> t = aug.reduce(span.rref().reduce(span.to_vec(target)));
    std::vector<Rational> out(static_cast<std::size_t>(k));
    for (const auto& [c, x] : t) {
        if (c < N) return std::nullopt;
        out[static_cast<std::size_t>(c - N)] = -x;
    }
    return out;
}

namespace {

std::vector<Rational> gamma4_row(int weight, const std::vector<FockElement>& basis_elems, const FockElement& target) {
    const GradedSpan& span = cached_span(weight, Modulus::C2_SIGMA);
    std::optional<std::vector<Rational>> c;
    try {
        c = residue_coordinates(span, basis_elems, target);
    } catch (const std::runtime_error& e) {
        throw Gamma4Error(std::string("gamma(4) matrix: ") + e.what());
    }
    if (!c) throw Gamma4Error("gamma(4) matrix: target at weight " + std::to_string(weight) +
                              " is outside the span of the residue basis");
    return *c;
}

}  // namespace

std::vector<Rational> gamma4_row_weight8() {
    auto g = [](int n) { return gamma(n); };
    return gamma4_row(8, {product({g(2), g(3), g(3)}), product({g(2), g(2), g(4)})}, product({g(4), g(4)}));
}

std::vector<Rational> gamma4_row_weight10() {
    auto g = [](int n) { return gamma(n); };
    return gamma4_row(10, {product({g(2), g(2), g(3), g(3)}), product({g(2), g(2), g(2), g(4)})},
                      product({g(4), g(3), g(3)}));
}

std::string Gamma4Matrix::charpoly() const {
    std::ostringstream os;
    auto term = [&os](const Rational& c, const char* x) {
        if (c.is_zero()) return;
        os << (c.sign() < 0 ? "-" : "+");
        Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1) || *x == '\0') os << a;
        os << x;
    };
    os << "X^2";
    term(c1, "X");
    term(c0, "");
    return os.str();
}

Gamma4Matrix gamma4_matrix() {
    std::vector<Rational> r10 = gamma4_row_weight10();
    std::vector<Rational> r8 = gamma4_row_weight8();
    Gamma4Matrix out;
    out.m(0, 0) = r10[0];
    out.m(0, 1) = r10[1];
    out.m(1, 0) = r8[0];
    out.m(1, 1) = r8[1];
    Eigen::Matrix<Rational, 2, 2> s = out.m * Rational(1800);
    out.trace = s(0, 0) + s(1, 1);
    out.determinant = s(0, 0) * s(1, 1) - s(0, 1) * s(1, 0);
    out.c1 = -out.trace;
    out.c0 = out.determinant;
    return out;
}

}  // namespace z3orb
