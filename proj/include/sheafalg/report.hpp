#pragma once

// Check reports: hypotheses, both sides of the asserted statement, a status,
// and witnesses. Serialized with ordered keys so output is byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

namespace sheafalg {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, hypothesis_skip };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::hypothesis_skip: return "hypothesis-skip";
    }
    return "fail";
}

struct Hypothesis {
    std::string name;
    std::optional<bool> holds;  // nullopt: could not be decided
    bool checked = true;        // false: assumed or automatic, not machine-checked
};

struct Report {
    std::string check;
    std::vector<Hypothesis> hypotheses;
    Json lhs = Json::object();
    Json rhs = Json::object();
    Status status = Status::fail;
    Json witnesses = Json::object();
    bool caps_hit = false;
    std::vector<std::string> notes;

    bool passed() const { return status == Status::pass; }

    Report& hypothesis(std::string name, std::optional<bool> holds, bool checked = true) {
        hypotheses.push_back({std::move(name), holds, checked});
        return *this;
    }

    /// Skip if any checked hypothesis fails or is undecided.
    bool hypotheses_hold() const {
        for (const auto& h : hypotheses)
            if (!h.holds.value_or(false)) return false;
        return true;
    }

    /// Sets status from a boolean unless the hypotheses do not hold.
    Report& conclude(bool ok) {
        status = hypotheses_hold() ? (ok ? Status::pass : Status::fail) : Status::hypothesis_skip;
        return *this;
    }
};

inline Json to_json(const Report& r) {
    Json hyp = Json::object();
    for (const auto& h : r.hypotheses) {
        Json v = Json::object();
        v["holds"] = h.holds ? Json(*h.holds) : Json(nullptr);
        v["checked"] = h.checked;
        hyp[h.name] = v;
    }
    Json j = Json::object();
    j["check"] = r.check;
    j["hypotheses"] = hyp;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["pass"] = r.passed();
    j["status"] = to_string(r.status);
    j["witnesses"] = r.witnesses;
    j["caps_hit"] = r.caps_hit;
    j["notes"] = r.notes;
    return j;
}

/// One line per report: "<status> <check> lhs=... rhs=...".
inline std::string to_text(const Report& r) {
    std::string s = to_string(r.status) + " " + r.check + " lhs=" + r.lhs.dump() + " rhs=" + r.rhs.dump();
    for (const auto& h : r.hypotheses)
        s += "\n  hypothesis " + h.name + " = " + (h.holds ? (*h.holds ? "true" : "false") : "undecided") +
             (h.checked ? "" : " (not machine-checked)");
    if (!r.witnesses.empty()) s += "\n  witnesses " + r.witnesses.dump();
    for (const auto& n : r.notes) s += "\n  note: " + n;
    return s;
}

}  // namespace sheafalg
