#ifndef TORNHEIM_VERIFY_HPP
#define TORNHEIM_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tornheim::verify {

enum class Status { pass, fail, skipped };

const char* status_name(Status s);

/// One verified identity. status == pass iff |residual| <= tolerance;
/// check_id is a stable key naming the identity and its indices.
struct ReportEntry {
    std::string check_id;
    std::string suite;
    int criterion = 0; // acceptance criterion number, 0 for auxiliary checks
    double lhs = 0;
    double rhs = 0;
    double residual = 0;
    double tolerance = 0;
    Status status = Status::fail;
    std::string notes;
};

struct RunConfig {
    std::string suite = "all"; // specfun|bernoulli|negapoly|integrals|tornheim|all
    std::optional<double> tol_override;
    int precision_digits = 15;
};

struct Report {
    RunConfig config;
    std::vector<ReportEntry> entries;
    int passed = 0, failed = 0, skipped = 0;
    bool all_passed() const { return failed == 0; }
};

/// Run the identity checks for the selected suite. Check set and ids are
/// deterministic for a given config.
Report run_checks(const RunConfig& cfg = {});

/// Known suite names, for CLI validation.
bool is_known_suite(const std::string& s);

std::string report_to_json(const Report& r);
std::string report_summary(const Report& r);

struct CriterionResult {
    int criterion;
    int passed;
    int failed;
    std::vector<std::string> failing_ids;
    bool ok() const { return failed == 0; }
};

/// Group a full report by acceptance criterion (1..10).
std::vector<CriterionResult> by_criterion(const Report& r);

} // namespace tornheim::verify

#endif
