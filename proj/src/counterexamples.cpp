#include <protex/finite/counterexamples.hpp>

#include <protex/core/audit.hpp>
#include <protex/core/strictness.hpp>

namespace protex {

json pullback_not_strict_fixture() {
    return {
        {"name", "pullback_not_strict"},
        {"instance", {{"instance", "pointed_sets"}}},
        {"kind", "pullback"},
        {"objects", {{"X", {{"size", 2}}}, {"Y", {{"size", 0}}}, {"Z", {{"size", 1}}}}},
        {"maps", {
            {"f", {{"domain", 2}, {"codomain", 0}, {"images", {0, 0, 0}}}},
            {"g", {{"domain", 1}, {"codomain", 0}, {"images", {0, 0}}}},
        }},
        {"expect", {
            {"f", {{"strict_epi", true}}},
            {"g", {{"strict_epi", true}}},
            {"pulled_back", {{"epi", true}, {"strict_epi", false}}},
        }},
    };
}

json right_obscure_fixture() {
    return {
        {"name", "right_obscure"},
        {"instance", {{"instance", "pointed_sets"}}},
        {"kind", "composite"},
        {"objects", {{"X", {{"size", 1}}}, {"Y", {{"size", 2}}}}},
        {"maps", {
            {"f", {{"domain", 1}, {"codomain", 2}, {"images", {0, 1}}}},
            {"g", {{"domain", 2}, {"codomain", 1}, {"images", {0, 1, 1}}}},
        }},
        {"expect", {
            {"f", {{"strict_mono", true}}},
            {"composite", {{"identity", true}, {"strict_epi", true}}},
            {"g", {{"epi", true}, {"strict_epi", false}}},
        }},
    };
}

namespace {

// Observed properties of a map. Strictness is computed from kernels and
// cokernels and must agree with the closed form.
json observe(const FinPointedSets& c, const PointedMap& f, std::vector<std::string>& deviations, const std::string& where) {
    auto generic = classify_strictness(c, f);
    StrictFlags closed{c.native_strict_mono(f), c.native_strict_epi(f)};
    if (!(generic == closed)) deviations.push_back(where + ": kernel-cokernel strictness disagrees with the closed form");
    return {
        {"epi", is_surjective(f)},
        {"mono", is_injective(f)},
        {"strict_epi", generic.strict_epi},
        {"strict_mono", generic.strict_mono},
        {"identity", c.equal(f, c.identity(c.domain(f)))},
    };
}

AuditItem replay_one(const json& fx, std::vector<std::string>& deviations) {
    const FinPointedSets c(0);
    auto name = fx.at("name").get<std::string>();
    auto kind = fx.at("kind").get<std::string>();
    const auto& maps = fx.at("maps");
    auto f = c.parse_morphism(maps.at("f"));
    auto g = c.parse_morphism(maps.at("g"));

    AuditItem item;
    json observed = json::object();
    observed["f"] = observe(c, f, deviations, name + "/f");
    observed["g"] = observe(c, g, deviations, name + "/g");
    json witness{{"f", c.morphism_json(f)}, {"g", c.morphism_json(g)}};
    bool refuted = false;

    if (kind == "pullback") {
        // f' : X x_Y Z -> Z, the pullback of f along g.
        auto sq = c.pullback(f, g);
        observed["pulled_back"] = observe(c, sq.second, deviations, name + "/pulled_back");
        witness["pulled_back"] = c.morphism_json(sq.second);
        item.axiom = "epi_pullback_along_all";
        refuted = observed["f"]["strict_epi"].get<bool>() && !observed["pulled_back"]["strict_epi"].get<bool>();
    }
    else if (kind == "composite") {
        auto h = c.compose(g, f);
        observed["composite"] = observe(c, h, deviations, name + "/composite");
        witness["composite"] = c.morphism_json(h);
        item.axiom = "right";
        refuted = observed["composite"]["strict_epi"].get<bool>() && !observed["g"]["strict_epi"].get<bool>();
    }
    else {
        throw parse_error(name + "/kind: unknown fixture kind '" + kind + "'");
    }

    for (auto& [map, props]: fx.at("expect").items()) {
        if (!observed.contains(map)) {
            deviations.push_back(name + ": expectation names unknown map '" + map + "'");
            continue;
        }
        for (auto& [prop, want]: props.items()) {
            if (!observed[map].contains(prop)) deviations.push_back(name + "/" + map + ": unknown property '" + prop + "'");
            else if (observed[map][prop] != want) {
                deviations.push_back(name + "/" + map + "/" + prop + ": expected " + want.dump() + ", observed " + observed[map][prop].dump());
            }
        }
    }

    item.verdict = refuted? Verdict::fail: Verdict::pass;
    item.count = 1;
    if (refuted) witness["observed"] = observed;
    item.witness = refuted? witness: json();
    item.note = "fixture " + name;
    return item;
}

} // namespace

CounterexampleResult replay_fixtures(std::span<const json> fixtures) {
    CounterexampleResult out;
    out.report.label = "pointed-set counterexamples";
    for (auto& fx: fixtures) out.report.items.push_back(replay_one(fx, out.deviations));
    return out;
}

CounterexampleResult counterexample_suite(int max_elements) {
    std::vector<json> fx{pullback_not_strict_fixture(), right_obscure_fixture()};
    auto out = replay_fixtures(fx);
    FinPointedSets c(max_elements);
    auto obscure = audit_obscure(c);
    out.report.bounds = c.bounds_json();
    auto left = obscure.at("left");
    auto right = obscure.at("right");
    left.axiom = "left_exhaustive";
    right.axiom = "right_exhaustive";
    if (left.verdict != Verdict::pass) out.deviations.push_back("left obscure axiom fails on " + c.label());
    if (right.verdict != Verdict::fail) out.deviations.push_back("right obscure axiom holds on " + c.label());
    out.report.items.push_back(left);
    out.report.items.push_back(right);
    return out;
}

} // namespace protex
