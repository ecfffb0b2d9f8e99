#ifndef HKML_VERIFY_HPP
#define HKML_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hkml::verify {

enum class Status { pass, fail, flagged };

struct VerifyReport {
    std::string check_id;
    std::string paper_anchor;
    Status status = Status::pass;
    double max_rel_err = 0.0;
    double runtime_ms = 0.0;
    std::string details;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::map<std::string, double> tol_overrides; // check_id -> tolerance
    int jobs = 1;
};

const char* status_name(Status s);

// Suite names: all, biorthogonality, representations, laplace, fractional,
// kernel-operator, jk.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);

// Check ids of one suite, in deterministic order.
std::vector<std::string> suite_check_ids(const std::string& suite);

// Runs a single check by id.
VerifyReport run_check(const std::string& check_id, const VerifyOptions& opt);

// Runs a suite (possibly in parallel); reports come back in registration
// order regardless of job count.
std::vector<VerifyReport> run_suite(const std::string& suite,
                                    const VerifyOptions& opt);

// Default tolerance of a check (after overrides).
double check_tolerance(const std::string& check_id, const VerifyOptions& opt);

// Numeric tables behind the CLI "table" presets.
struct TableResult {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
std::vector<std::string> table_presets();
TableResult table_preset(const std::string& name,
                         const std::map<std::string, double>& params,
                         const VerifyOptions& opt);

} // namespace hkml::verify

#endif
