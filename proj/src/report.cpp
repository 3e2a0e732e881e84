#include "confjord/report.hpp"

#include <algorithm>
#include <sstream>

namespace confjord {

Json VerificationReport::to_json() const {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["parameters"] = parameters;
    j["status"] = status();
    j["checks_run"] = checks_run;
    auto sorted = failures;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckFailure& a, const CheckFailure& b) {
                         return a.check_id < b.check_id;
                     });
    Json fj = Json::array();
    for (const auto& f : sorted) {
        Json e;
        e["check"] = f.check_id;
        e["inputs"] = f.inputs;
        e["expected"] = f.expected;
        e["actual"] = f.actual;
        fj.push_back(e);
    }
    j["failures"] = fj;
    if (errored)
        j["error"] = error_message;
    if (!notes.empty())
        j["notes"] = notes;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    os << command << ": " << status() << " (" << checks_run << " checks";
    if (!failures.empty())
        os << ", " << failures.size() << " failures";
    os << ")\n";
    auto sorted = failures;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const CheckFailure& a, const CheckFailure& b) {
                         return a.check_id < b.check_id;
                     });
    std::size_t shown = 0;
    for (const auto& f : sorted) {
        if (shown++ == 20) {
            os << "  ... (" << sorted.size() - 20 << " more)\n";
            break;
        }
        os << "  FAIL " << f.check_id << "\n    inputs:   " << f.inputs.dump()
           << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
    }
    if (errored)
        os << "  error: " << error_message << "\n";
    if (!notes.empty())
        os << "  notes: " << notes.dump() << "\n";
    return os.str();
}

}  // namespace confjord
