#include "thetasphere/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "thetasphere/errors.hpp"

namespace thetasphere {

void Report::add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass ? "PASS" : "FAIL", detail, 0});
}

void Report::run(const std::string& name, const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r{name, "PASS", "", 0};
    try {
        fn();
    } catch (const ReductionLimitError& e) {
        r.status = "INCONCLUSIVE";
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = "FAIL";
        r.detail = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    checks.push_back(std::move(r));
}

void Report::merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == "PASS"; });
}

bool Report::any_inconclusive() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == "INCONCLUSIVE"; });
}

int Report::exit_code() const {
    bool failed = false;
    for (const auto& c : checks)
        if (c.status == "FAIL") failed = true;
    if (failed) return 1;
    if (any_inconclusive()) return 4;
    return 0;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["report_version"] = kReportVersion;
    j["tool_version"] = kToolVersion;
    j["suite"] = suite;
    j["spec"] = {{"name", spec_name}, {"hash", spec_digest}};
    j["seed"] = seed;
    j["theta"] = theta;
    auto sorted = checks;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : sorted) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = c.status;
        e["detail"] = c.detail;
        e["elapsed_ms"] = 0; // kept deterministic; wall times go to the text output
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["status"] = all_pass() ? "PASS" : (exit_code() == 4 ? "INCONCLUSIVE" : "FAIL");
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " on " << spec_name << " (hash " << spec_digest << ", seed "
       << seed << ", theta " << theta << ")\n";
    for (const auto& c : checks) {
        os << "  [" << c.status << "] " << c.name;
        if (c.elapsed_ms > 0) os << " (" << c.elapsed_ms << " ms)";
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

} // namespace thetasphere
