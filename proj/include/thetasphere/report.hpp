#pragma once

#include <functional>
#include <string>
#include <vector>

namespace thetasphere {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

struct CheckResult {
    std::string name;
    std::string status; // PASS | FAIL | INCONCLUSIVE
    std::string detail;
    long long elapsed_ms = 0;
};

class Report {
public:
    std::string suite;
    std::string spec_name;
    std::string spec_digest;
    std::string theta = "0";
    uint64_t seed = 0;
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool pass, const std::string& detail = "");
    /// runs fn, mapping exceptions: ReductionLimitError -> INCONCLUSIVE,
    /// anything else -> FAIL with the message
    void run(const std::string& name, const std::function<void()>& fn);
    void merge(const Report& other);

    bool all_pass() const;
    bool any_inconclusive() const;
    int exit_code() const; // 0 pass, 1 failure, 4 inconclusive

    /// deterministic given spec and seed: checks sorted by name, timings zeroed
    std::string to_json() const;
    std::string to_text() const;
};

} // namespace thetasphere
