#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace confjord {

using Json = nlohmann::ordered_json;

struct CheckFailure {
    std::string check_id;
    Json inputs;  // re-runnable payload
    std::string expected;
    std::string actual;
};

/// Structured pass/fail result of a verification suite. `checks_run` counts
/// individual asserted equalities/memberships; status is pass exactly when no
/// failure and no error was recorded. Merging is associative and failures are
/// sorted by check id on serialization, so parallel suites stay deterministic.
struct VerificationReport {
    std::string command;
    Json parameters = Json::object();
    long checks_run = 0;
    std::vector<CheckFailure> failures;
    bool errored = false;
    std::string error_message;
    Json notes = Json::object();  // informational payload (measured scalars, dims, ...)
    double elapsed_ms = 0.0;

    void count(long n = 1) { checks_run += n; }

    void fail(std::string check_id, Json inputs, std::string expected, std::string actual) {
        failures.push_back(
            {std::move(check_id), std::move(inputs), std::move(expected), std::move(actual)});
    }

    void merge(const VerificationReport& o) {
        checks_run += o.checks_run;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        errored = errored || o.errored;
        if (error_message.empty())
            error_message = o.error_message;
        for (const auto& [k, v] : o.notes.items())
            notes[k] = v;
    }

    bool passed() const { return !errored && failures.empty(); }
    std::string status() const { return errored ? "error" : (failures.empty() ? "pass" : "fail"); }

    Json to_json() const;
    std::string text() const;
};

}  // namespace confjord
