#ifndef ABEL_VERIFY_HPP
#define ABEL_VERIFY_HPP

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abel/report.hpp"

namespace abel {

// Orders a check runs at; every registered check carries its own defaults
// and command-line overrides replace individual fields.
struct CheckParams {
    int qmax;
    int umax;
    int window;
};

struct CheckOverrides {
    std::optional<int> qmax;
    std::optional<int> umax;
    std::optional<int> window;
};

struct CheckDescriptor {
    std::string name;
    std::string description;  // the identity being machine-checked
    CheckParams defaults;
    std::function<VerifyReport(const CheckParams&)> runner;
};

// The named identity checks, in their canonical order.
const std::vector<CheckDescriptor>& check_registry();

// Runs one check; throws precondition_error for unknown names.
VerifyReport run_check(const std::string& name,
                       const CheckOverrides& overrides = {});

// Runs every registered check; reports come back in registry order
// regardless of the number of worker threads.
std::vector<VerifyReport> run_all(const CheckOverrides& overrides = {},
                                  int jobs = 1);

nlohmann::json report_to_json(const VerifyReport& report);
nlohmann::json reports_to_json(const std::vector<VerifyReport>& reports);

// Table generation behind the CLI: kind is one of
// hyperelliptic | genus2-quotient | genus3 | nu; format is csv | json |
// plain. Returns the full file content.
struct TableParams {
    int gmax = 8;
    int dmax = 10;
};
std::string emit_table(const std::string& kind, const TableParams& params,
                       const std::string& format);

}  // namespace abel

#endif
