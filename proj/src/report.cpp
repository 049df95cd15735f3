#include "hecke/report.hpp"

#include <sstream>

namespace hecke {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void SuiteReport::add(std::string id, std::string anchor, bool pass, Json payload) {
    checks.push_back({std::move(id), std::move(anchor), pass, std::move(payload)});
}

Json SuiteReport::to_json(bool with_duration) const {
    Json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["params"] = params;
    j["checks"] = Json::array();
    for (const auto& c : checks) {
        Json cj;
        cj["id"] = c.id;
        cj["anchor"] = c.anchor;
        cj["status"] = c.pass ? "pass" : "fail";
        cj["payload"] = c.payload;
        j["checks"].push_back(cj);
    }
    if (with_duration) j["duration_ms"] = duration_ms;
    return j;
}

std::string SuiteReport::to_csv() const {
    std::ostringstream os;
    os << "suite,id,anchor,status,payload\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        return out + "\"";
    };
    for (const auto& c : checks) {
        os << quote(suite) << "," << quote(c.id) << "," << quote(c.anchor) << ","
           << (c.pass ? "pass" : "fail") << "," << quote(c.payload.dump()) << "\n";
    }
    return os.str();
}

}  // namespace hecke
