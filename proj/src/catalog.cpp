#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "z3orb/suite.hpp"

namespace z3orb {

namespace {

using json = nlohmann::ordered_json;

template <class T>
std::string sstr(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

ReportItem outcome(bool ok, std::string detail, json payload = json::object()) {
    ReportItem it;
    it.status = ok ? ItemStatus::Verified : ItemStatus::Discrepancy;
    it.detail = std::move(detail);
    it.payload = std::move(payload);
    return it;
}

ReportItem from_report(const Report& r) {
    ReportItem it;
    it.status = r.status == Status::Verified ? ItemStatus::Verified : ItemStatus::Refuted;
    it.detail = r.detail;
    it.payload["modulus"] = to_string(r.modulus);
    it.payload["weight"] = r.weight;
    it.payload["rank"] = r.rank;
    it.payload["generator_count"] = r.generator_count;
    it.payload["residual"] = to_json(r.residual);
    if (r.status == Status::Refuted) {
        it.detail = "residual " + r.residual.str() + (r.detail.empty() ? "" : "; " + r.detail);
    } else if (it.detail.empty()) {
        it.detail = "member; span rank " + std::to_string(r.rank) + " at weight " + std::to_string(r.weight);
    }
    return it;
}

FockElement g(int n) { return gamma(n); }
FockElement P(std::vector<FockElement> v) { return product(v); }
FockElement operator*(long c, const FockElement& x) { return Rational(c) * x; }

struct Identity {
    std::string id;
    int weight;
    Modulus modulus;
    bool binding;
    std::string statement;
    std::function<FockElement()> expr;
    Source source = Source::Paper;
};

std::vector<Identity> identities() {
    const Modulus C2 = Modulus::C2_SIGMA;
    std::vector<Identity> out = {
        {"gamma6", 6, C2, true, "2g(6) = g(3)g(3) - 2g(2)g(4)",
         [] { return 2 * g(6) - P({g(3), g(3)}) + 2 * P({g(2), g(4)}); }},
        {"gamma7", 7, C2, true, "7g(7) = g(3)g(4) - 3g(2)g(5)",
         [] { return 7 * g(7) - P({g(3), g(4)}) + 3 * P({g(2), g(5)}); }},
        {"gamma8.a", 8, C2, true, "16g(8) = g(3)g(5) - 4g(2)g(6)",
         [] { return 16 * g(8) - P({g(3), g(5)}) + 4 * P({g(2), g(6)}); }},
        {"gamma8.b", 8, C2, true, "30g(8) = g(4)g(4) - 6g(2)g(6)",
         [] { return 30 * g(8) - P({g(4), g(4)}) + 6 * P({g(2), g(6)}); }},
        {"gamma2-cubed", 6, C2, true, "g(2)^3 = alpha beta - 264 g(2)g(4) + 117 g(3)g(3)",
         [] {
             return P({g(2), g(2), g(2)}) - P({elem({1, 1, 1}, {}), elem({}, {1, 1, 1})}) + 264 * P({g(2), g(4)}) -
                    117 * P({g(3), g(3)});
         }},
        {"gamma7-lemma", 7, C2, false, "120g(7) = 8g(2)g(5) + g(2)^2 g(3)",
         [] { return 120 * g(7) - 8 * P({g(2), g(5)}) - P({g(2), g(2), g(3)}); }},
        {"gamma8-lemma", 8, C2, false, "60g(8) = 6g(2)g(3)^2 - 13g(2)^2 g(4)",
         [] { return 60 * g(8) - 6 * P({g(2), g(3), g(3)}) + 13 * P({g(2), g(2), g(4)}); }},
        {"gamma8-lemma.corrected", 8, C2, false, "66g(8) = 6g(2)g(3)^2 - 13g(2)^2 g(4)",
         [] { return 66 * g(8) - 6 * P({g(2), g(3), g(3)}) + 13 * P({g(2), g(2), g(4)}); }, Source::Derived},
        {"gamma4-gamma4.a", 8, C2, false, "2g(4)g(4) = 12g(2)g(6) + 60g(8)",
         [] { return 2 * P({g(4), g(4)}) - 12 * P({g(2), g(6)}) - 60 * g(8); }},
        {"gamma4-gamma4.b", 8, C2, false, "2g(4)g(4) = 12g(2)g(3)^2 - 25g(2)^2 g(4)",
         [] { return 2 * P({g(4), g(4)}) - 12 * P({g(2), g(3), g(3)}) + 25 * P({g(2), g(2), g(4)}); }},
        {"gamma3-gamma5.a", 8, C2, false, "15g(3)g(5) = 60g(2)g(6) + 240g(8)",
         [] { return 15 * P({g(3), g(5)}) - 60 * P({g(2), g(6)}) - 240 * g(8); }},
        {"gamma3-gamma5.b", 8, C2, false, "15g(3)g(5) = 54g(2)g(3)^2 - 112g(2)^2 g(4)",
         [] { return 15 * P({g(3), g(5)}) - 54 * P({g(2), g(3), g(3)}) + 112 * P({g(2), g(2), g(4)}); }},
        {"gamma3-gamma4.a", 7, C2, false, "120g(3)g(4) = 120(7g(7) + 3g(2)g(5))",
         [] { return 120 * P({g(3), g(4)}) - 840 * g(7) - 360 * P({g(2), g(5)}); }},
        {"gamma3-gamma4.b", 7, C2, false, "120g(3)g(4) = 7g(2)^2 g(3) + 416g(2)g(5)",
         [] { return 120 * P({g(3), g(4)}) - 7 * P({g(2), g(2), g(3)}) - 416 * P({g(2), g(5)}); }},
    };
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            const Rational c = binomial(-n, m);
            out.push_back({"lemma-gamma-quad.n" + std::to_string(n) + ".m" + std::to_string(m), n + m + 1,
                           Modulus::OMEGA0_FULL, true,
                           "a(-" + std::to_string(n) + ")a'(-" + std::to_string(m + 1) + ") = " + c.str() + " g(" +
                               std::to_string(n + m + 1) + ")",
                           [n, m, c] { return elem({n}, {m + 1}) - c * g(n + m + 1); }, Source::Paper});
        }
    return out;
}

const char* tau_label(int k) {
    static const char* labels[] = {"1.1i", "0.4+1.2i", "2i"};
    return labels[k];
}

Complex tau_value(int k) {
    static const Complex values[] = {{0.0, 1.1}, {0.4, 1.2}, {0.0, 2.0}};
    return values[k];
}

ReportItem numeric_match(Complex lhs, Complex rhs, double tol) {
    const double rel = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    json p;
    p["lhs"] = {lhs.real(), lhs.imag()};
    p["rhs"] = {rhs.real(), rhs.imag()};
    p["relative_error"] = rel;
    std::ostringstream os;
    os.precision(12);
    os << "lhs " << lhs << " rhs " << rhs << " rel.err " << std::scientific << std::setprecision(2) << rel;
    return outcome(rel < tol, os.str(), p);
}

void add_fock(std::vector<CheckEntry>& c) {
    auto add = [&c](std::string id, Source s, std::function<ReportItem(SuiteContext&)> f) {
        c.push_back({std::move(id), Suite::Fock, s, true, std::move(f)});
    };
    add("fock.np.vacuum-identity", Source::Paper, [](SuiteContext&) {
        std::size_t n = 0;
        for (int w = 0; w <= 4; ++w)
            for (const auto& b : basis(w)) {
                if (normal_product(FockElement(b), -1, FockElement::vacuum()) != FockElement(b))
                    return outcome(false, "v_{-1}1 != v for " + b.str());
                ++n;
            }
        return outcome(true, "v_{-1}1 = v on " + std::to_string(n) + " basis vectors of weight <= 4");
    });
    add("fock.np.omega0", Source::Paper, [](SuiteContext&) {
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 4; ++m) {
                FockElement want = Rational(n) * elem({n + 1}, {m}) + Rational(m) * elem({n}, {m + 1});
                if (normal_product(omega(), 0, elem({n}, {m})) != want)
                    return outcome(false, "omega_0 mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
        return outcome(true, "omega_0(a(-n)a'(-m)1) = n a(-n-1)a'(-m)1 + m a(-n)a'(-m-1)1 for 1 <= n,m <= 4");
    });
    add("fock.mode.contraction", Source::Trivial, [](SuiteContext&) {
        auto r = mode_apply(Gen::A, 1, elem({}, {1}));
        return outcome(r == FockElement::vacuum(), "a(1)a'(-1)1 = " + r.str());
    });
    add("fock.mode.a2", Source::Derived, [](SuiteContext&) {
        auto r = mode_apply(Gen::A, 2, elem({}, {2, 1}));
        return outcome(r == Rational(2) * elem({}, {1}), "a(2)a'(-2)a'(-1)1 = " + r.str());
    });
    add("fock.gamma2-is-omega", Source::Paper, [](SuiteContext&) {
        return outcome(gamma(2) == elem({1}, {1}), "g(2) = " + gamma(2).str());
    });
    add("fock.commutator", Source::Derived, [](SuiteContext&) {
        std::size_t checks = 0;
        for (int w = 0; w <= 6; ++w)
            for (const auto& b : basis(w)) {
                FockElement v(b);
                for (int n = -6; n <= 6; ++n)
                    for (int m = -6; m <= 6; ++m) {
                        FockElement lhs = mode_apply(Gen::A, n, mode_apply(Gen::Aprime, m, v)) -
                                          mode_apply(Gen::Aprime, m, mode_apply(Gen::A, n, v));
                        FockElement rhs = n + m == 0 ? Rational(n) * v : FockElement();
                        if (lhs != rhs) return outcome(false, "commutator fails on " + b.str());
                        ++checks;
                    }
            }
        return outcome(true, "[a(n),a'(m)] = n delta_{n+m,0} on " + std::to_string(checks) + " cases");
    });
    add("fock.virasoro.grading", Source::Trivial, [](SuiteContext&) {
        for (int w = 0; w <= 6; ++w)
            for (const auto& b : basis(w))
                if (virasoro(0, FockElement(b)) != Rational(w) * FockElement(b))
                    return outcome(false, "L(0) fails on " + b.str());
        return outcome(virasoro(-1, FockElement::vacuum()).is_zero(), "L(0) = weight on grades <= 6, L(-1)1 = 0");
    });
    add("fock.basis.count", Source::Derived, [](SuiteContext&) {
        // coefficients of prod (1-q^m)^-2
        const int N = 14;
        std::vector<long> p(N + 1, 0);
        p[0] = 1;
        for (int copy = 0; copy < 2; ++copy)
            for (int part = 1; part <= N; ++part)
                for (int k = part; k <= N; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
        json counts = json::array();
        for (int w = 0; w <= N; ++w) {
            const auto got = static_cast<long>(basis(w).size());
            counts.push_back(got);
            if (got != p[static_cast<std::size_t>(w)])
                return outcome(false, "basis(" + std::to_string(w) + ") has " + std::to_string(got) + " elements");
        }
        json pl;
        pl["dims"] = counts;
        return outcome(true, "|basis(n)| matches prod(1-q^m)^-2 for n <= 14", pl);
    });
}

void add_quotient(std::vector<CheckEntry>& c, int max_weight) {
    for (auto& idn : identities()) {
        if (idn.weight > max_weight) continue;
        c.push_back({"quotient." + idn.id, Suite::Quotient, idn.source, idn.binding, [idn](SuiteContext&) {
                         ReportItem it = from_report(verify_identity(idn.id, idn.expr(), idn.modulus));
                         it.detail = idn.statement + " mod " + to_string(idn.modulus) + ": " + it.detail;
                         return it;
                     }});
    }
    c.push_back({"quotient.span.C2.w2-zero", Suite::Quotient, Source::Derived, true, [](SuiteContext&) {
                     const auto& s = cached_span(2, Modulus::C2_SIGMA);
                     const auto m = member(gamma(2), s);
                     return outcome(s.rank() == 0 && !m.member,
                                    "rank " + std::to_string(s.rank()) + ", g(2) member: " + (m.member ? "yes" : "no"));
                 }});
    for (int r = 1; r <= 3; ++r)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
                if (r + m + n + 1 > max_weight) continue;
                const std::string id =
                    "quotient.aaaa.r" + std::to_string(r) + ".m" + std::to_string(m) + ".n" + std::to_string(n);
                c.push_back({id, Suite::Quotient, Source::Paper, false, [r, m, n](SuiteContext&) {
                                 AaaaCheck a = prop_aaaa_check(r, m, n);
                                 ReportItem it = from_report(a.summary);
                                 it.detail = a.summary.detail;
                                 it.payload["coefficient"] = a.coefficient.str();
                                 it.payload["proof_coefficient"] = a.proof_coefficient.str();
                                 for (const auto& [k, rep] : a.omega0)
                                     it.payload["omega0"][k] = to_string(rep.status);
                                 for (const auto& [k, rep] : a.c2) it.payload["c2"][k] = to_string(rep.status);
                                 return it;
                             }});
            }
    if (4 <= max_weight)
        c.push_back({"quotient.aaaa.coefficient.r1.m2.n1", Suite::Quotient, Source::Derived, true, [](SuiteContext&) {
                         Rational v = aaaa_coefficient(1, 2, 1);
                         return outcome(v == Rational(5), "closed form at (1,2,1) = " + v.str());
                     }});
    for (int w = 2; w <= max_weight; ++w) {
        const std::string ws = (w < 10 ? "0" : "") + std::to_string(w);
        c.push_back({"quotient.span.S2.w" + ws, Suite::Quotient, Source::Paper, true,
                     [w](SuiteContext&) { return from_report(spanning_check(w, SpanningSet::S2)); }});
        if (w <= 12) {
            c.push_back({"quotient.span.S1.w" + ws, Suite::Quotient, Source::Paper, true,
                         [w](SuiteContext&) { return from_report(spanning_check(w, SpanningSet::S1)); }});
            c.push_back({"quotient.span.O.w" + ws, Suite::Quotient, Source::Paper, true,
                         [w](SuiteContext&) { return from_report(spanning_check(w, SpanningSet::O_SPAN)); }});
        }
    }
    if (10 <= max_weight)
        c.push_back({"quotient.gamma4-matrix", Suite::Quotient, Source::Paper, true, [](SuiteContext&) {
                         ReportItem it;
                         json row8 = json::array();
                         for (const auto& x : gamma4_row_weight8()) row8.push_back(x.str());
                         it.payload["row_weight8"] = row8;
                         it.payload["expected"] = {{"22569/1800", "-46592/1800"}, {"6", "-25/2"}};
                         try {
                             Gamma4Matrix gm = gamma4_matrix();
                             const bool ok = gm.trace == Rational(69) && gm.determinant == Rational(-4608900) &&
                                             gm.m(0, 0) == Rational(22569, 1800) &&
                                             gm.m(0, 1) == Rational(-46592, 1800) && gm.m(1, 0) == Rational(6) &&
                                             gm.m(1, 1) == Rational(-25, 2);
                             it.status = ok ? ItemStatus::Verified : ItemStatus::Discrepancy;
                             it.detail = "char poly of 1800 M: " + gm.charpoly();
                             it.payload["matrix"] = {{gm.m(0, 0).str(), gm.m(0, 1).str()},
                                                     {gm.m(1, 0).str(), gm.m(1, 1).str()}};
                         } catch (const Gamma4Error& e) {
                             it.status = ItemStatus::Discrepancy;
                             it.detail = std::string("expected X^2-69X-4608900; ") + e.what() +
                                         "; weight-8 row = (" + row8[0].get<std::string>() + ", " +
                                         row8[1].get<std::string>() + ")";
                         }
                         return it;
                     }});
}

void add_characters(std::vector<CheckEntry>& c) {
    auto leech = [&c](std::string id, Source s, std::function<ReportItem(SuiteContext&)> f) {
        c.push_back({"leech." + std::move(id), Suite::CharactersLeech, s, true, std::move(f)});
    };
    auto e6 = [&c](std::string id, Source s, std::function<ReportItem(SuiteContext&)> f) {
        c.push_back({"e6." + std::move(id), Suite::CharactersE6, s, true, std::move(f)});
    };
    auto coeff_item = [](const QSeries& s, const Rational& e, const Quad3& want, const std::string& what) {
        const Quad3 got = s.coeff(e);
        json p;
        p["exponent"] = e.str();
        p["value"] = sstr(got);
        return outcome(got == want, what + " = " + sstr(got), p);
    };

    leech("twisted-trace", Source::Paper, [](SuiteContext& ctx) {
        const QSeries& tw = ctx.character(LatticeCase::LEECH).twisted;
        const Rational t = ctx.config().q_truncation + Rational(2);
        const QSeries ref = eta_power(1, 12, t) * eta_power(3, -12, t);
        const bool deep = tw.truncation() && ref.truncation() && *tw.truncation() > Rational(10) &&
                          *ref.truncation() > Rational(10);
        json p;
        p["series"] = to_json(tw.truncated(Rational(4)));
        if (!deep) return outcome(false, "truncation too low to compare through q^10", p);
        return outcome(tw.agrees_with(ref), "T(sigma) = eta^12/eta(3 tau)^12 through q^10: " + tw.str(6), p);
    });
    leech("dim-W3-weight2", Source::Paper, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::LEECH).w3, Rational(1), Quad3(65610), "dim W^3_2 (q^1)");
    });
    leech("ch.q-1", Source::Paper, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::LEECH).total, Rational(-1), Quad3(1), "coefficient of q^-1");
    });
    leech("ch.q0", Source::Paper, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::LEECH).total, Rational(0), Quad3(0), "coefficient of q^0");
    });
    leech("ch.q1", Source::Paper, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::LEECH).total, Rational(1), Quad3(196884), "coefficient of q^1");
    });
    leech("ch.j-oracle", Source::Derived, [](SuiteContext& ctx) {
        const QSeries& tot = ctx.character(LatticeCase::LEECH).total;
        const QSeries j = j_oracle(ctx.config().q_truncation);
        const bool deep = tot.truncation() && *tot.truncation() > Rational(5);
        json p;
        p["character"] = to_json(tot.truncated(Rational(6)));
        return outcome(tot.agrees_with(j) && deep, "ch = J through q^5: " + tot.str(7), p);
    });
    leech("transform-constant", Source::Derived, [](SuiteContext&) {
        Transformed t = s_transform_twisted(LatticeCase::LEECH, Rational(2));
        return outcome(t.constant.closed(), "constant " + sstr(t.constant));
    });
    e6("dim-V1", Source::Paper, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::E6_NIEMEIER).total, Rational(0), Quad3(120), "dim V_1");
    });
    e6("twisted-contribution", Source::Paper, [](SuiteContext& ctx) {
        const Quad3 w3 = ctx.character(LatticeCase::E6_NIEMEIER).w3.coeff(Rational(0));
        const Quad3 total = Quad3(2) * w3;
        json p;
        p["w3_q0"] = sstr(w3);
        return outcome(total == Quad3(18), "2 x " + sstr(w3) + " = " + sstr(total), p);
    });
    e6("W0-weight1", Source::Derived, [coeff_item](SuiteContext& ctx) {
        return coeff_item(ctx.character(LatticeCase::E6_NIEMEIER).ch_w0, Rational(0), Quad3(102), "dim W^0_1");
    });
    e6("transform-constant", Source::Derived, [](SuiteContext&) {
        Transformed t = s_transform_twisted(LatticeCase::E6_NIEMEIER, Rational(2));
        json f = json::array();
        for (const auto& [name, k] : t.factors) f.push_back({name, sstr(k)});
        json p;
        p["factors"] = f;
        const bool ok = t.constant.closed() && t.constant.tau_half_exponent == 0 &&
                        t.constant.eighth_root_exponent == 0;
        return outcome(ok, "constant " + sstr(t.constant), p);
    });
    e6("thetaH-over-eta6-leading", Source::Paper, [](SuiteContext&) {
        Transformed t = theta_H_over_eta6_transformed(Rational(1));
        const Quad3 lead = t.series.coeff(Rational(-1, 4));
        const Quad3 want = Quad3(Rational(1, 9)) * Quad3::sqrt3().inverse();
        return outcome(lead == want, "coefficient of q^-1/4 = " + sstr(lead) + " (1/(9 sqrt 3) = " + sstr(want) + ")");
    });
    for (int k = 0; k < 3; ++k) {
        e6(std::string("phi0-transform[") + tau_label(k) + "]", Source::Paper, [k](SuiteContext& ctx) {
            const Complex tau = tau_value(k);
            const Rational N = ctx.config().numeric_truncation;
            const Complex lhs = numeric_eval(phi0(Rational(1), N), -1.0 / tau);
            const Complex rhs =
                numeric_embed(ModularScalar::tau_over_i_sqrt3(), tau) * numeric_eval(phi0(Rational(1, 3), N), tau);
            return numeric_match(lhs, rhs, ctx.config().tolerance);
        });
        e6(std::string("eq5-numeric[") + tau_label(k) + "]", Source::Paper, [k](SuiteContext& ctx) {
            const Complex tau = tau_value(k);
            const Rational N = ctx.config().numeric_truncation;
            const Complex lhs = numeric_eval(twisted_trace(6, 9, theta_H_E6(N + Rational(2)), N), -1.0 / tau);
            const Complex rhs = numeric_eval(s_transform_twisted(LatticeCase::E6_NIEMEIER, N).series, tau);
            return numeric_match(lhs, rhs, ctx.config().tolerance);
        });
        leech(std::string("eq5-numeric[") + tau_label(k) + "]", Source::Paper, [k](SuiteContext& ctx) {
            const Complex tau = tau_value(k);
            const Rational N = ctx.config().numeric_truncation;
            const Complex lhs = numeric_eval(twisted_trace(0, 12, QSeries(Quad3(1)), N), -1.0 / tau);
            const Complex rhs = numeric_eval(s_transform_twisted(LatticeCase::LEECH, N).series, tau);
            return numeric_match(lhs, rhs, ctx.config().tolerance);
        });
    }
}

void add_fusion(std::vector<CheckEntry>& c) {
    auto add = [&c](std::string id, Source s, std::function<ReportItem(SuiteContext&)> f) {
        c.push_back({"fusion." + std::move(id), Suite::Fusion, s, true, std::move(f)});
    };
    add("S00", Source::Paper, [](SuiteContext& ctx) {
        const Cyclo3 x = ctx.smatrix().entries(0, 0);
        return outcome(x == Cyclo3(Rational(1, 3)), "S_00 = " + sstr(x));
    });
    add("S34", Source::Paper, [](SuiteContext& ctx) {
        const Cyclo3 x = ctx.smatrix().entries(3, 4);
        return outcome(x == Cyclo3::zeta() * Cyclo3(Rational(1, 3)), "S_34 = " + sstr(x));
    });
    add("S-symmetric", Source::Paper,
        [](SuiteContext& ctx) { return outcome(is_symmetric(ctx.smatrix()), "S = S^T"); });
    add("S2-permutation", Source::Derived, [](SuiteContext& ctx) {
        const auto& d = ctx.duality();
        bool inv = true;
        for (int i = 0; i < 9; ++i) inv = inv && d[static_cast<std::size_t>(d[static_cast<std::size_t>(i)])] == i;
        json p = json::array();
        std::string s;
        for (int x : d) {
            p.push_back(x);
            s += (s.empty() ? "" : " ") + std::to_string(x);
        }
        json pl;
        pl["duality"] = p;
        return outcome(inv && d[0] == 0 && d[1] == 2, "i -> i': " + s, pl);
    });
    add("verlinde-integral", Source::Paper, [](SuiteContext& ctx) {
        const auto& T = ctx.fusion();
        json arr = json::array();
        for (const auto& a : T) {
            json row = json::array();
            for (const auto& b : a) row.push_back(json(b));
            arr.push_back(row);
        }
        json p;
        p["N"] = arr;
        return outcome(true, "all 729 Verlinde numbers are nonnegative integers", p);
    });
    add("simple-currents", Source::Paper, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.simple_currents && f.vacuum_unit, "sum_k N_ij^k = 1 for all i,j; W^0 is the unit");
    });
    add("duals", Source::Paper, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.duals_are_inverses, "N_{i,i'}^0 = 1 for all i");
    });
    add("N_{3,3}^6", Source::Paper, [](SuiteContext& ctx) {
        const long v = ctx.fusion()[3][3][6];
        return outcome(v == 1, "N_{3,3}^6 = " + std::to_string(v));
    });
    add("N_{3,6}^0", Source::Paper, [](SuiteContext& ctx) {
        const long v = ctx.fusion()[3][6][0];
        return outcome(v == 1, "N_{3,6}^0 = " + std::to_string(v));
    });
    add("group-Z3xZ3", Source::Derived, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.z3xz3, "fusion classes form an abelian group of exponent 3 and order 9");
    });
    add("subgroup-036", Source::Paper, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.subgroup_036, "{W^0, W^3, W^6} closed under fusion");
    });
    add("subgroup-012", Source::Derived, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.subgroup_012, "{W^0, W^1, W^2} closed under fusion");
    });
    add("associativity", Source::Derived, [](SuiteContext& ctx) {
        FusionCheck f = simple_current_check(ctx.fusion(), ctx.duality());
        return outcome(f.associative && f.commutative, "N is commutative and associative");
    });
    add("parameter-scan", Source::Derived, [](SuiteContext&) {
        json arr = json::array();
        int admissible = 0;
        bool default_ok = false;
        for (const auto& e : parameter_scan()) {
            arr.push_back({{"lambda0", sstr(e.lambda0)},
                           {"lambda1", sstr(e.lambda1)},
                           {"mu1", sstr(e.mu1)},
                           {"mu2", sstr(e.mu2)},
                           {"admissible", e.admissible},
                           {"note", e.note}});
            if (e.admissible) ++admissible;
            if (e.admissible && e.lambda0 == Cyclo3(1) && e.lambda1 == Cyclo3(1) && e.mu1 == Cyclo3(1))
                default_ok = true;
        }
        json p;
        p["tuples"] = arr;
        return outcome(default_ok, std::to_string(admissible) + " of 16 tuples give an integral table", p);
    });
}

void add_glue(std::vector<CheckEntry>& c) {
    auto add = [&c](std::string id, Source s, bool binding, std::function<ReportItem(SuiteContext&)> f) {
        c.push_back({"glue." + std::move(id), Suite::Glue, s, binding, std::move(f)});
    };
    add("completed-square", Source::Paper, true, [](SuiteContext&) {
        std::mt19937_64 rng(20240601);
        std::uniform_int_distribution<long> dist(-1000, 1000);
        for (int k = 0; k < 200; ++k) {
            const long p = dist(rng), q = dist(rng);
            if (Rational(p * p + q * q - p * q + 2 * p - q) != glue_completed_square(p, q))
                return outcome(false, "fails at p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
        return outcome(true, "p^2+q^2-pq+2p-q = (q-(p+1)/2)^2 + 3/4(p+1)^2 - 1 on 200 random pairs");
    });
    add("form-orientation", Source::Derived, true, [](SuiteContext&) {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long> dist(-200, 200);
        for (int k = 0; k < 200; ++k) {
            const long p = dist(rng), q = dist(rng);
            if (glue_form1(p, q) != p * p + q * q - p * q - p + 2 * q ||
                glue_form2(p, q) != p * p + q * q - p * q + 2 * p - q)
                return outcome(false, "form mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
        return outcome(true,
                       "<s(g),-g-x-y> = p^2+q^2-pq-p+2q and <s^2(g),-g-x-y> = p^2+q^2-pq+2p-q with s(x)=y");
    });
    add("paper-form-labels", Source::Paper, false, [](SuiteContext&) {
        const long p = 2, q = 3;
        const long got = glue_form1(p, q), stated = p * p + q * q - p * q + 2 * p - q;
        json pl;
        pl["p"] = p;
        pl["q"] = q;
        pl["lattice"] = got;
        pl["stated"] = stated;
        return outcome(got == stated, "<s(g),-g-x-y> at (2,3) = " + std::to_string(got) + ", stated form gives " +
                                          std::to_string(stated),
                       pl);
    });
    add("scan.r30", Source::Derived, true, [](SuiteContext& ctx) {
        const GlueScan& s = ctx.glue(30);
        json pl;
        pl["tested"] = s.tested;
        pl["found"] = s.found;
        json fails = json::array();
        for (const auto& [m, n] : s.failures) fails.push_back({m, n});
        pl["failures"] = fails;
        return outcome(s.unexpected.empty(), std::to_string(s.found) + "/" + std::to_string(s.tested) +
                                                 " witnessed; " + std::to_string(s.unexpected.size()) +
                                                 " failures outside the exceptional set",
                       pl);
    });
    add("exceptional-set", Source::Derived, true, [](SuiteContext& ctx) {
        const GlueScan& s = ctx.glue(30);
        auto ex = glue_exceptional_set();
        bool same = ex.size() == s.failures.size();
        for (const auto& [m, n] : s.failures) same = same && in_glue_exceptional_set(m, n);
        return outcome(same, "failures coincide with the 12 sigma-images of +-x, +-2y");
    });
    add("explicit-choice", Source::Paper, false, [](SuiteContext& ctx) {
        const GlueScan& s = ctx.glue(30);
        json pl;
        pl["consistent"] = s.stated_choice_consistent;
        pl["cases"] = s.stated_choice_cases;
        return outcome(s.stated_choice_consistent == s.stated_choice_cases,
                       "p=(n-2m+2)/3, q=(-m-n+1)/3 satisfies s(g)-g-x-y = mx+ny in " +
                           std::to_string(s.stated_choice_consistent) + "/" + std::to_string(s.stated_choice_cases) +
                           " cases (m,n <= 0, m+n = 1 mod 3)",
                       pl);
    });
    add("witness.m-2.n0", Source::Derived, false, [](SuiteContext&) {
        GlueSearchResult r = glue_vector_search(-2, 0);
        json pl;
        pl["attempts"] = r.attempts;
        std::string d = r.found ? "witness p=" + std::to_string(r.p) + " q=" + std::to_string(r.q)
                                : "no witness; (-2,0) lies in the exceptional set";
        return outcome(r.found, d, pl);
    });
}

}  // namespace

std::vector<CheckEntry> default_catalog(int max_weight) {
    std::vector<CheckEntry> c;
    add_fock(c);
    add_quotient(c, max_weight);
    add_characters(c);
    add_fusion(c);
    add_glue(c);
    return c;
}

}  // namespace z3orb
