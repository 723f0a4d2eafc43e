#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semimod/core.hpp"

namespace semimod {

// A labelled tuple that lets a failure (or success) be replayed by hand:
// each item is a (role, value) pair, e.g. ("scalar", "a"), ("unreached", "1").
struct Witness {
    std::string label;
    std::vector<std::pair<std::string, std::string>> items;
};

// Structured verdict shared by all decision procedures. `flags` holds the
// classification set when the verdict is more than a single boolean (e.g.
// exactness grades), `claim` is a self-contained statement of what was
// checked.
struct Report {
    std::string procedure;
    std::vector<std::string> inputs;
    bool verdict = false;
    std::map<std::string, bool> flags;
    std::vector<Witness> witnesses;
    std::map<std::string, std::uint64_t> statistics;
    std::string claim;

    nlohmann::json to_json() const {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& wit : witnesses) {
            nlohmann::json items = nlohmann::json::array();
            for (const auto& [k, v] : wit.items) items.push_back({k, v});
            w.push_back({{"label", wit.label}, {"items", items}});
        }
        return nlohmann::json{{"procedure", procedure}, {"inputs", inputs},
                              {"verdict", verdict},     {"flags", flags},
                              {"witnesses", w},         {"statistics", statistics},
                              {"claim", claim}};
    }

    std::string to_text() const {
        std::string out = procedure + "(";
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (i) out += ", ";
            out += inputs[i];
        }
        out += ") -> ";
        out += verdict ? "true" : "false";
        for (const auto& [k, v] : flags) out += "\n  " + k + ": " + (v ? "true" : "false");
        for (const auto& [k, v] : statistics) out += "\n  " + k + " = " + std::to_string(v);
        for (const auto& wit : witnesses) {
            out += "\n  witness " + wit.label + ":";
            for (const auto& [k, v] : wit.items) out += " " + k + "=" + v;
        }
        if (!claim.empty()) out += "\n  claim: " + claim;
        return out;
    }
};

}  // namespace semimod
