#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qreg/slice_function.hpp"

namespace qreg {

struct SuiteConfig {
    std::vector<std::string> suites;  // empty means: all registered suites
    std::uint64_t seed = 0;
    int order = 8;
    SliceDomain grid;
    // "analytic" or "fd"
    std::string backend = "analytic";
    double fd_step = kDefaultFdStep;
    std::string report_path;  // empty: stdout
    std::string format = "json";
    bool parallel = false;

    static SuiteConfig from_json(const std::string& text);
    void validate() const;  // throws InvalidConfig
};

struct CheckResult {
    std::string name;
    std::string anchor;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_time_ms = 0.0;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    std::uint64_t seed = 0;
    bool overall_pass = true;
};

// json output is stable-key-ordered and timing-free so that identical
// (config, seed) runs are byte-identical; text is a human table per check.
std::string emit_report(const VerificationReport& report, const std::string& format);

}  // namespace qreg
