#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <protex/core/lifting.hpp>
#include <protex/core/report.hpp>
#include <protex/errors.hpp>

namespace protex {

// One pushout of a generator a_k: A -> B along u: A -> E, attached to close
// the square r o u == v o a_k.
template <typename C>
struct FactorStep {
    using Morphism = typename C::Morphism;
    std::size_t generator;
    Morphism u;                 // A -> E (current stage)
    Morphism v;                 // B -> Y
    typename C::Object pushout; // next stage
    Morphism from_generator;    // B -> next stage
    Morphism from_stage;        // E -> next stage
};

// f == right o left, left the composite of the from_stage legs. When
// complete, right has the lifting property against every generator.
template <typename C>
struct FactorizationCertificate {
    using Morphism = typename C::Morphism;
    json instance;
    Morphism map;
    std::vector<Morphism> generators;
    std::size_t fuel = 0;
    std::vector<FactorStep<C>> steps;
    Morphism left;
    Morphism right;
    bool complete = false;
};

template <typename C>
struct fuel_exhausted_with: fuel_exhausted {
    fuel_exhausted_with(const std::string& what, FactorizationCertificate<C> cert): fuel_exhausted(what), partial(std::move(cert)) {}
    FactorizationCertificate<C> partial;
};

// Small object argument with at most `fuel` steps. Each step closes the first
// unfilled lifting problem of the current right leg (generator order, then
// enumeration order of the square) by pushing out that generator.
template <EnumerableCategory C>
FactorizationCertificate<C> factor_map(const C& c, const typename C::Morphism& f, std::span<const typename C::Morphism> generators,
                                       std::size_t fuel, std::size_t budget = 100'000'000) {
    FactorizationCertificate<C> cert{c.bounds_json(), f, {generators.begin(), generators.end()}, fuel, {}, c.identity(c.domain(f)), f, false};
    for (;;) {
        auto rlp = has_rlp(c, cert.right, generators, budget);
        if (rlp.holds) {
            cert.complete = true;
            return cert;
        }
        if (cert.steps.size() >= fuel) {
            throw fuel_exhausted_with<C>("factorization needs more than " + std::to_string(fuel) + " steps", std::move(cert));
        }
        auto& prob = *rlp.unfilled;
        const auto& a = generators[prob.generator];
        auto sq = c.pushout(a, prob.u);
        auto r = c.pushout_mediator(sq, prob.v, cert.right);
        if (!r) throw invariant_violation("factor_map: lifting square does not commute");
        cert.left = c.compose(sq.second, cert.left);
        cert.right = *r;
        cert.steps.push_back({prob.generator, prob.u, prob.v, sq.object, sq.first, sq.second});
    }
}

// Admissible mono X -> B with B -> 0 lifting against the generators.
template <EnumerableCategory C>
FactorizationCertificate<C> special_preenvelope(const C& c, const typename C::Object& x, std::span<const typename C::Morphism> generators,
                                                std::size_t fuel) {
    return factor_map(c, c.zero_map(x, c.zero_object()), generators, fuel);
}

// A -> X built from generator cokernels, lifting against the generators.
template <EnumerableCategory C>
FactorizationCertificate<C> precover(const C& c, const typename C::Object& x, std::span<const typename C::Morphism> generators,
                                     std::size_t fuel) {
    return factor_map(c, c.zero_map(c.zero_object(), x), generators, fuel);
}

// Recomputes every step from the recorded squares and compares bit-exactly.
// Returns an empty string on success, otherwise the first discrepancy.
template <EnumerableCategory C>
std::string replay_certificate(const C& c, const FactorizationCertificate<C>& cert, bool recheck_lifting = true) {
    auto left = c.identity(c.domain(cert.map));
    auto right = cert.map;
    for (std::size_t s = 0; s < cert.steps.size(); ++s) {
        const auto& st = cert.steps[s];
        auto at = "step " + std::to_string(s) + ": ";
        if (st.generator >= cert.generators.size()) return at + "generator index out of range";
        const auto& a = cert.generators[st.generator];
        if (!c.same_object(c.domain(st.u), c.domain(a)) || !c.same_object(c.codomain(st.u), c.domain(right))) return at + "u has the wrong shape";
        if (!c.same_object(c.domain(st.v), c.codomain(a)) || !c.same_object(c.codomain(st.v), c.codomain(right))) return at + "v has the wrong shape";
        if (!c.equal(c.compose(right, st.u), c.compose(st.v, a))) return at + "square does not commute";
        auto sq = c.pushout(a, st.u);
        if (!c.same_object(sq.object, st.pushout)) return at + "pushout object differs";
        if (!c.equal(sq.first, st.from_generator) || !c.equal(sq.second, st.from_stage)) return at + "pushout legs differ";
        auto r = c.pushout_mediator(sq, st.v, right);
        if (!r) return at + "no induced map out of the pushout";
        left = c.compose(sq.second, left);
        right = *r;
    }
    if (!c.equal(left, cert.left)) return "recomposed left leg differs from the recorded one";
    if (!c.equal(right, cert.right)) return "recomposed right leg differs from the recorded one";
    if (!c.equal(c.compose(right, left), cert.map)) return "right o left is not the factored map";
    if (cert.complete && recheck_lifting) {
        auto rlp = has_rlp(c, right, std::span<const typename C::Morphism>(cert.generators));
        if (!rlp.holds) return "right leg fails the lifting property against generator " + std::to_string(rlp.unfilled->generator);
    }
    return {};
}

template <PointedCategory C>
json certificate_json(const C& c, const FactorizationCertificate<C>& cert) {
    json gens = json::array();
    for (auto& g: cert.generators) gens.push_back(c.morphism_json(g));
    json steps = json::array();
    for (auto& s: cert.steps) {
        steps.push_back({
            {"generator", s.generator},
            {"u", c.morphism_json(s.u)},
            {"v", c.morphism_json(s.v)},
            {"pushout", c.object_json(s.pushout)},
            {"from_generator", c.morphism_json(s.from_generator)},
            {"from_stage", c.morphism_json(s.from_stage)},
        });
    }
    return {
        {"version", version},
        {"instance", cert.instance},
        {"map", c.morphism_json(cert.map)},
        {"generators", gens},
        {"fuel", cert.fuel},
        {"complete", cert.complete},
        {"steps", steps},
        {"left", c.morphism_json(cert.left)},
        {"right", c.morphism_json(cert.right)},
    };
}

template <PointedCategory C>
FactorizationCertificate<C> certificate_from_json(const C& c, const json& j) {
    try {
        FactorizationCertificate<C> cert{
            j.at("instance"), c.parse_morphism(j.at("map")), {}, j.at("fuel").get<std::size_t>(), {},
            c.parse_morphism(j.at("left")), c.parse_morphism(j.at("right")), j.at("complete").get<bool>()};
        for (auto& g: j.at("generators")) cert.generators.push_back(c.parse_morphism(g));
        for (auto& s: j.at("steps")) {
            cert.steps.push_back({s.at("generator").get<std::size_t>(), c.parse_morphism(s.at("u")), c.parse_morphism(s.at("v")),
                                  c.parse_object(s.at("pushout")), c.parse_morphism(s.at("from_generator")), c.parse_morphism(s.at("from_stage"))});
        }
        return cert;
    }
    catch (const json::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what());
    }
}

} // namespace protex
