#pragma once

// Identity records, elimination traces, and audit reports, plus their
// JSON / CSV / text renderings. JSON output is deterministic: fixed key
// order, no timestamps, assignment order fixed by the enumeration.

#include "buchi/numbers.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace buchi {

using Json = nlohmann::ordered_json;

inline std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

struct IdentityRecord {
    std::string name;
    bool pass = false;
    std::optional<Rational> scalar;  // recorded proportionality constant
    std::string note;                // unit factors, display deviations
    std::string computed;            // canonical text of the computed side
    std::string claimed;             // canonical text of the claimed side

    Json to_json() const {
        Json j;
        j["name"] = name;
        j["status"] = pass ? "pass" : "fail";
        if (scalar)
            j["scalar"] = rational_str(*scalar);
        else
            j["scalar"] = nullptr;
        if (!note.empty()) j["note"] = note;
        if (!pass || !computed.empty()) {
            if (!computed.empty()) j["computed"] = computed;
            if (!claimed.empty()) j["claimed"] = claimed;
        }
        return j;
    }
};

struct TraceStep {
    std::string kind;  // "identity" | "substitution" | "assumption" | "case" | "conclusion"
    std::string text;

    Json to_json() const { return Json{{"kind", kind}, {"text", text}}; }
};

}  // namespace buchi
