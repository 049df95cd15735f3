#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hecke {

using Json = nlohmann::ordered_json;

struct CheckRecord {
    std::string id;
    std::string anchor;  // statement label the check answers to
    bool pass = false;
    Json payload;
};

struct SuiteReport {
    std::string suite;
    Json params;
    std::vector<CheckRecord> checks;
    std::int64_t duration_ms = 0;

    bool all_pass() const;
    void add(std::string id, std::string anchor, bool pass, Json payload = Json::object());
    Json to_json(bool with_duration = true) const;
    std::string to_csv() const;
};

}  // namespace hecke
