#include "z3orb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace z3orb {

std::string to_string(Suite s) {
    switch (s) {
        case Suite::Fock: return "fock";
        case Suite::Quotient: return "quotient";
        case Suite::CharactersLeech: return "characters-leech";
        case Suite::CharactersE6: return "characters-e6";
        case Suite::Fusion: return "fusion";
        case Suite::Glue: return "glue";
        case Suite::All: return "all";
    }
    return "?";
}

std::optional<Suite> parse_suite(const std::string& s) {
    for (Suite x : {Suite::Fock, Suite::Quotient, Suite::CharactersLeech, Suite::CharactersE6, Suite::Fusion,
                    Suite::Glue, Suite::All})
        if (to_string(x) == s) return x;
    return std::nullopt;
}

std::string to_string(Source s) {
    switch (s) {
        case Source::Paper: return "paper";
        case Source::Derived: return "derived";
        case Source::Trivial: return "trivial";
    }
    return "?";
}

std::string to_string(ItemStatus s) {
    switch (s) {
        case ItemStatus::Verified: return "verified";
        case ItemStatus::Refuted: return "refuted";
        case ItemStatus::Discrepancy: return "discrepancy";
    }
    return "?";
}

void SuiteConfig::validate() const {
    if (max_weight < 2) throw ConfigError("max_weight must be at least 2");
    if (q_truncation.sign() <= 0) throw ConfigError("q_truncation must be positive");
    if (numeric_truncation.sign() <= 0) throw ConfigError("numeric truncation must be positive");
    if (!(tolerance > 0)) throw ConfigError("tolerance must be positive");
}

SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig base) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    try {
        for (const auto& [key, val] : j.items()) {
            if (key == "suite") {
                auto s = parse_suite(val.get<std::string>());
                if (!s) throw ConfigError("unknown suite '" + val.get<std::string>() + "'");
                base.suite = *s;
            } else if (key == "max_weight") {
                base.max_weight = val.get<int>();
            } else if (key == "q_truncation" || key == "numeric_truncation") {
                Rational r = val.is_string() ? Rational::parse(val.get<std::string>()) : Rational(val.get<long>());
                (key == "q_truncation" ? base.q_truncation : base.numeric_truncation) = r;
            } else if (key == "tolerance") {
                base.tolerance = val.get<double>();
            } else if (key == "format") {
                const auto f = val.get<std::string>();
                if (f == "text") base.format = Format::Text;
                else if (f == "json") base.format = Format::Json;
                else throw ConfigError("unknown format '" + f + "'");
            } else if (key == "output") {
                base.output_path = val.get<std::string>();
            } else {
                throw ConfigError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad config value: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return base;
}

struct SuiteContext::Cache {
    std::map<LatticeCase, OrbifoldCharacter> chars;
    std::optional<SMatrix> s;
    std::optional<FusionTable> t;
    std::optional<std::array<int, 9>> dual;
    std::map<long, GlueScan> glue;
};

SuiteContext::SuiteContext(SuiteConfig cfg) : cfg_(std::move(cfg)), cache_(std::make_unique<Cache>()) {}
SuiteContext::~SuiteContext() = default;

const OrbifoldCharacter& SuiteContext::character(LatticeCase c) {
    auto it = cache_->chars.find(c);
    if (it == cache_->chars.end()) it = cache_->chars.emplace(c, orbifold_character(c, cfg_.q_truncation)).first;
    return it->second;
}

const SMatrix& SuiteContext::smatrix() {
    if (!cache_->s) cache_->s = default_smatrix();
    return *cache_->s;
}

const std::array<int, 9>& SuiteContext::duality() {
    if (!cache_->dual) cache_->dual = s_square_permutation(smatrix());
    return *cache_->dual;
}

const FusionTable& SuiteContext::fusion() {
    if (!cache_->t) cache_->t = verlinde(smatrix());
    return *cache_->t;
}

const GlueScan& SuiteContext::glue(long range) {
    auto it = cache_->glue.find(range);
    if (it == cache_->glue.end()) it = cache_->glue.emplace(range, glue_scan(range)).first;
    return it->second;
}

nlohmann::ordered_json to_json(const FockElement& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : v.terms()) {
        nlohmann::ordered_json t;
        t["monomial"] = m.str();
        t["a"] = m.a_modes;
        t["a_prime"] = m.b_modes;
        t["coefficient"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

RunReport run_suite(const SuiteConfig& config) {
    if (config.max_weight < 2) return run_suite(config, {});
    return run_suite(config, default_catalog(config.max_weight));
}

RunReport run_suite(const SuiteConfig& config, const std::vector<CheckEntry>& catalog) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.suite = to_string(config.suite);
    try {
        config.validate();
    } catch (const ConfigError& e) {
        rep.exit_code = 2;
        ReportItem it;
        it.id = "config";
        it.detail = e.what();
        rep.items.push_back(std::move(it));
        return rep;
    }
    SuiteContext ctx(config);
    bool internal_error = false;
    for (const auto& entry : catalog) {
        if (config.suite != Suite::All && entry.suite != config.suite) continue;
        ReportItem item;
        try {
            item = entry.run(ctx);
        } catch (const Gamma4Error& e) {
            item.status = ItemStatus::Discrepancy;
            item.detail = e.what();
        } catch (const VerlindeError& e) {
            item.status = ItemStatus::Discrepancy;
            item.detail = e.what();
        } catch (const std::exception& e) {
            internal_error = true;
            item.status = ItemStatus::Discrepancy;
            item.detail = std::string("internal error: ") + e.what();
        }
        item.id = entry.id;
        item.source = entry.source;
        item.binding = entry.binding;
        rep.items.push_back(std::move(item));
    }
    std::sort(rep.items.begin(), rep.items.end(),
              [](const ReportItem& a, const ReportItem& b) { return a.id < b.id; });
    const bool all_ok = std::all_of(rep.items.begin(), rep.items.end(),
                                    [](const ReportItem& i) { return i.status == ItemStatus::Verified; });
    rep.exit_code = internal_error ? 2 : (all_ok ? 0 : 1);
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::ordered_json report_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    auto items = nlohmann::ordered_json::array();
    for (const auto& it : report.items) {
        nlohmann::ordered_json o;
        o["id"] = it.id;
        o["status"] = to_string(it.status);
        o["expected_source"] = to_string(it.source);
        o["binding"] = it.binding;
        o["detail"] = it.detail;
        o["payload"] = it.payload;
        items.push_back(std::move(o));
    }
    j["items"] = std::move(items);
    j["exit_code"] = report.exit_code;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string emit_report(const RunReport& report, Format format) {
    if (format == Format::Json) return report_json(report).dump(2) + "\n";
    std::size_t w = 2;
    for (const auto& it : report.items) w = std::max(w, it.id.size());
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t n) { return s + std::string(n > s.size() ? n - s.size() : 0, ' '); };
    os << "suite " << report.suite << "\n";
    os << pad("id", w) << "  " << pad("status", 11) << "  " << pad("source", 7) << "  " << pad("kind", 6) << "  detail\n";
    os << std::string(w + 36, '-') << "\n";
    std::size_t ok = 0;
    for (const auto& it : report.items) {
        if (it.status == ItemStatus::Verified) ++ok;
        os << pad(it.id, w) << "  " << pad(to_string(it.status), 11) << "  " << pad(to_string(it.source), 7) << "  "
           << pad(it.binding ? "bind" : "report", 6) << "  " << it.detail << "\n";
    }
    os << std::string(w + 36, '-') << "\n";
    os << ok << "/" << report.items.size() << " verified, exit " << report.exit_code << ", " << report.elapsed_ms
       << " ms\n";
    return os.str();
}

}  // namespace z3orb
