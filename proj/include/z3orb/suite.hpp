#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "z3orb/fock.hpp"
#include "z3orb/orbifold.hpp"
#include "z3orb/qseries.hpp"
#include "z3orb/quotient.hpp"
#include "z3orb/scalar.hpp"

namespace z3orb {

enum class Suite { Fock, Quotient, CharactersLeech, CharactersE6, Fusion, Glue, All };
std::string to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& s);

enum class Format { Text, Json };

enum class Source { Paper, Derived, Trivial };
std::string to_string(Source s);

// discrepancy: a non-congruence check whose computed value disagrees, or a computation that failed loudly
enum class ItemStatus { Verified, Refuted, Discrepancy };
std::string to_string(ItemStatus s);

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
    Suite suite = Suite::All;
    int max_weight = 14;
    Rational q_truncation{12};        // exact character suites
    Rational numeric_truncation{60};  // numeric transform checks
    double tolerance = 1e-8;          // relative
    Format format = Format::Text;
    std::optional<std::string> output_path;

    void validate() const;  // throws ConfigError
};

// Reads suite, max_weight, q_truncation, numeric_truncation, tolerance, format, output from a JSON object.
SuiteConfig config_from_json(const nlohmann::json& j, SuiteConfig base = {});

struct ReportItem {
    std::string id;
    ItemStatus status = ItemStatus::Discrepancy;
    Source source = Source::Derived;
    bool binding = true;  // false: verify-or-report
    std::string detail;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
};

struct RunReport {
    std::string suite;
    std::vector<ReportItem> items;  // sorted by id
    long long elapsed_ms = 0;
    int exit_code = 0;
};

class SuiteContext;

struct CheckEntry {
    std::string id;
    Suite suite = Suite::All;
    Source source = Source::Derived;
    bool binding = true;
    std::function<ReportItem(SuiteContext&)> run;
};

// Shared, lazily computed inputs for one run.
class SuiteContext {
public:
    explicit SuiteContext(SuiteConfig cfg);
    ~SuiteContext();
    const SuiteConfig& config() const { return cfg_; }
    const OrbifoldCharacter& character(LatticeCase c);
    const SMatrix& smatrix();
    const FusionTable& fusion();
    const std::array<int, 9>& duality();
    const GlueScan& glue(long range);

private:
    struct Cache;
    SuiteConfig cfg_;
    std::unique_ptr<Cache> cache_;
};

nlohmann::ordered_json to_json(const FockElement& v);

// Every registered check; grade-dependent entries are generated up to max_weight.
std::vector<CheckEntry> default_catalog(int max_weight);

RunReport run_suite(const SuiteConfig& config);
RunReport run_suite(const SuiteConfig& config, const std::vector<CheckEntry>& catalog);

std::string emit_report(const RunReport& report, Format format);
nlohmann::ordered_json report_json(const RunReport& report);

}  // namespace z3orb
