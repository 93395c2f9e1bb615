#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <protex/core/category.hpp>
#include <protex/errors.hpp>
#include <protex/version.hpp>

namespace protex {

enum class Verdict { pass, fail, skipped };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

inline Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "skipped") return Verdict::skipped;
    throw parse_error("unknown verdict '" + s + "'");
}

// A fail always carries a witness: the offending diagram as named morphisms.
struct AuditItem {
    std::string axiom;
    Verdict verdict = Verdict::skipped;
    bool sampled = false;
    std::size_t count = 0;     // diagrams examined
    json witness;              // null unless verdict == fail
    std::string note;
};

struct AuditReport {
    std::string label;
    json bounds = json::object();
    std::string tool_version = version;
    std::vector<AuditItem> items;

    const AuditItem* find(const std::string& axiom) const {
        auto it = std::find_if(items.begin(), items.end(), [&](auto& i) { return i.axiom == axiom; });
        return it == items.end()? nullptr: &*it;
    }

    const AuditItem& at(const std::string& axiom) const {
        if (auto p = find(axiom)) return *p;
        throw std::out_of_range("audit report has no item '" + axiom + "'");
    }

    bool all_pass() const {
        return std::all_of(items.begin(), items.end(), [](auto& i) { return i.verdict == Verdict::pass; });
    }

    void append(const AuditReport& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }
};

inline json to_json(const AuditItem& i) {
    json j{{"axiom", i.axiom}, {"verdict", to_string(i.verdict)}, {"sampled", i.sampled}, {"count", i.count}, {"witness", i.witness}};
    if (!i.note.empty()) j["note"] = i.note;
    return j;
}

inline json to_json(const AuditReport& r) {
    json items = json::array();
    for (auto& i: r.items) items.push_back(to_json(i));
    return {{"label", r.label}, {"bounds", r.bounds}, {"version", r.tool_version}, {"items", items}};
}

inline AuditReport audit_report_from_json(const json& j) {
    AuditReport r;
    r.label = j.at("label").get<std::string>();
    r.bounds = j.at("bounds");
    r.tool_version = j.at("version").get<std::string>();
    for (auto& ji: j.at("items")) {
        AuditItem i;
        i.axiom = ji.at("axiom").get<std::string>();
        i.verdict = verdict_from_string(ji.at("verdict").get<std::string>());
        i.sampled = ji.at("sampled").get<bool>();
        i.count = ji.at("count").get<std::size_t>();
        i.witness = ji.at("witness");
        if (ji.contains("note")) i.note = ji.at("note").get<std::string>();
        if (i.verdict == Verdict::fail && i.witness.is_null()) throw parse_error("item '" + i.axiom + "' fails without a witness");
        r.items.push_back(std::move(i));
    }
    return r;
}

} // namespace protex
