#include <doctest.h>

#include <protex/core/audit.hpp>
#include <protex/core/lifting.hpp>
#include <protex/core/ses.hpp>
#include <protex/finite/pointed_set.hpp>
#include <protex/finite/weighted_category.hpp>

#include "../support/convert.hpp"
#include "../support/oracles.hpp"

using namespace protex;

namespace {

using F2 = Fp<2>;

Magnitude g(Exponent q) { return Magnitude::power(q); }

// Pointed sets with the solver methods hidden.
struct KernelsOnly {
    using Object = PointedSet;
    using Morphism = PointedMap;
    FinPointedSets c{3};

    Object zero_object() const { return c.zero_object(); }
    Morphism identity(const Object& x) const { return c.identity(x); }
    Morphism zero_map(const Object& x, const Object& y) const { return c.zero_map(x, y); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return c.compose(g, f); }
    Object domain(const Morphism& f) const { return c.domain(f); }
    Object codomain(const Morphism& f) const { return c.codomain(f); }
    bool same_object(const Object& a, const Object& b) const { return a == b; }
    bool equal(const Morphism& f, const Morphism& h) const { return f == h; }
    Universal<Object, Morphism> kernel(const Morphism& f) const { return c.kernel(f); }
    Universal<Object, Morphism> cokernel(const Morphism& f) const { return c.cokernel(f); }
    bool is_iso(const Morphism& f) const { return c.is_iso(f); }
    Square<Object, Morphism> pullback(const Morphism& f, const Morphism& h) const { return c.pullback(f, h); }
    Square<Object, Morphism> pushout(const Morphism& f, const Morphism& h) const { return c.pushout(f, h); }
    std::string label() const { return "kernels-only"; }
    json object_json(const Object& x) const { return c.object_json(x); }
    json morphism_json(const Morphism& f) const { return c.morphism_json(f); }
    Object parse_object(const json& j) const { return c.parse_object(j); }
    Morphism parse_morphism(const json& j) const { return c.parse_morphism(j); }
};

static_assert(PointedCategory<KernelsOnly>);
static_assert(!SolverCategory<KernelsOnly>);
static_assert(EnumerableCategory<FinPointedSets>);
static_assert(EnumerableCategory<FinWeightedVec<2>>);
static_assert(NativeStrictness<FinPointedSets>);

} // namespace

TEST_SUITE("protoexact_core") {

TEST_CASE("classify_strictness on pointed sets") {
    FinPointedSets c(3);
    CHECK(classify_strictness(c, c.identity({2})).kind() == Strictness::both);
    CHECK(classify_strictness(c, c.zero_map({0}, {0})).kind() == Strictness::both);
    CHECK(classify_strictness(c, PointedMap(1, 2, {0, 1})).kind() == Strictness::strict_mono);
    CHECK(classify_strictness(c, PointedMap(2, 1, {0, 1, 0})).kind() == Strictness::strict_epi);
    CHECK(classify_strictness(c, PointedMap(2, 1, {0, 1, 1})).kind() == Strictness::neither);
    CHECK(to_string(Strictness::strict_epi) == "strict_epi");
}

TEST_CASE("classify_strictness on weighted spaces") {
    WeightedModules<Rational> c(ValuedField<Rational>::padic(2));
    WeightedSpace<Rational> x(c.field(), {g(0), g(1)});
    auto down = BoundedMap<Rational>(x, rescale(x, g(-1)), Mat<Rational>::Identity(2, 2));
    CHECK(classify_strictness(c, BoundedMap<Rational>::identity(x)).kind() == Strictness::both);
    CHECK(classify_strictness(c, down).kind() == Strictness::neither);
    CHECK(strictness(c, down) == classify_strictness(c, down));
}

TEST_CASE("classify_strictness needs a solver") {
    KernelsOnly k;
    CHECK_THROWS_AS(classify_strictness(k, k.identity({1})), solver_unavailable);
    CHECK_THROWS_AS(strictness(k, k.identity({1})), solver_unavailable);
}

TEST_CASE("definitions of strictness agree on pointed sets") {
    FinPointedSets c(3);
    for (auto& x: c.objects()) {
        for (auto& y: c.objects()) {
            for (auto& f: c.morphisms(x, y)) {
                auto fl = classify_strictness(c, f);
                CAPTURE(c.morphism_json(f).dump());
                REQUIRE(fl.strict_epi == strict_epi_by_pair(c, f));
                REQUIRE(fl.strict_epi == strict_epi_by_some_cokernel(c, f));
                REQUIRE(fl.strict_mono == strict_mono_by_pair(c, f));
                REQUIRE(fl.strict_mono == strict_mono_by_some_kernel(c, f));
                REQUIRE(fl.strict_epi == oracle::pointed_strict_epi(f.images(), f.cod()));
                REQUIRE(fl.strict_mono == oracle::pointed_injective(f.images()));
            }
        }
    }
}

TEST_CASE("definitions of strictness agree on F2 weighted spaces") {
    FinWeightedVec<2> c({g(0), g(1)}, 2);
    for (auto& x: c.objects()) {
        for (auto& y: c.objects()) {
            for (auto& f: c.morphisms(x, y)) {
                auto fl = classify_strictness(c, f);
                REQUIRE(fl.strict_epi == strict_epi_by_pair(c, f));
                REQUIRE(fl.strict_mono == strict_mono_by_pair(c, f));
            }
        }
    }
}

TEST_CASE("every pointed epimorphism splits") {
    FinPointedSets c(3);
    for (auto& x: c.objects()) {
        for (auto& y: c.objects()) {
            for (auto& f: c.morphisms(x, y)) {
                if (!is_surjective(f)) continue;
                bool split = false;
                for (auto& s: c.morphisms(y, x)) split = split || c.equal(c.compose(f, s), c.identity(y));
                REQUIRE(split);
            }
        }
    }
}

TEST_CASE("validate_ses") {
    FinPointedSets c(3);
    PointedMap incl(1, 2, {0, 1});
    CHECK(validate_ses(c, incl, PointedMap(2, 1, {0, 0, 1})).pass());
    CHECK(validate_ses(c, incl, PointedMap(2, 1, {0, 1, 1})).failing_clause == "compose_nonzero");
    CHECK(validate_ses(c, c.zero_map({1}, {2}), PointedMap(2, 1, {0, 0, 1})).failing_clause == "not_kernel");
    CHECK(validate_ses(c, incl, PointedMap(2, 2, {0, 0, 1})).failing_clause == "not_cokernel");
    CHECK_THROWS_AS(validate_ses(c, incl, c.identity({1})), not_composable);

    WeightedModules<Rational> w(ValuedField<Rational>::padic(3));
    WeightedSpace<Rational> a(w.field(), {g(0)}), b(w.field(), {g(0), g(1)});
    Mat<Rational> i(2, 1), p(1, 2);
    i << 1, 0;
    p << 0, 1;
    WeightedSpace<Rational> q(w.field(), {g(1)});
    CHECK(validate_ses(w, BoundedMap<Rational>(a, b, i), BoundedMap<Rational>(b, q, p)).pass());
    WeightedSpace<Rational> small(w.field(), {g(0)});
    CHECK(validate_ses(w, BoundedMap<Rational>(a, b, i), BoundedMap<Rational>(b, small, p)).failing_clause == "not_cokernel");
}

TEST_CASE("audits of pointed sets") {
    FinPointedSets c(3);
    auto ax = audit_axioms(c);
    CHECK(ax.label == c.label());
    for (auto name: {"identity_admissible", "mono_composition", "epi_composition", "epi_pullback_along_mono", "mono_pushout_along_epi", "mono_pushout_along_all"}) {
        CAPTURE(name);
        CHECK(ax.at(name).verdict == Verdict::pass);
        CHECK(ax.at(name).witness.is_null());
        CHECK(ax.at(name).count > 0);
        CHECK_FALSE(ax.at(name).sampled);
    }
    auto& pb = ax.at("epi_pullback_along_all");
    REQUIRE(pb.verdict == Verdict::fail);
    REQUIRE(pb.witness.is_object());
    auto ob = audit_obscure(c);
    CHECK(ob.at("left").verdict == Verdict::pass);
    CHECK(ob.at("strong_left").verdict == Verdict::pass);
    CHECK(ob.at("right").verdict == Verdict::fail);
    CHECK(ob.at("strong_right").verdict == Verdict::fail);
    CHECK(ob.at("split_mono_admissible").verdict == Verdict::pass);
    CHECK(ob.at("split_epi_admissible").verdict == Verdict::fail);
    CHECK(ob.find("missing") == nullptr);
    CHECK_THROWS_AS(ob.at("missing"), std::out_of_range);
}

TEST_CASE("audits of the zero category pass") {
    FinPointedSets zero(0);
    CHECK(zero.objects().size() == 1);
    auto r = audit_axioms(zero);
    r.append(audit_obscure(zero));
    CHECK(r.items.size() == 13);
    CHECK(r.all_pass());
}

TEST_CASE("audit budget") {
    FinPointedSets c(3);
    CHECK_THROWS_AS(audit_axioms(c, AuditOptions{10, 1}), budget_exceeded);
    FinPointedSets tight(4, 100);
    CHECK_THROWS_AS(tight.morphisms({4}, {4}), budget_exceeded);
    CHECK(tight.morphisms({2}, {4}).size() == 25);
}

TEST_CASE("parallel audits match serial ones") {
    FinWeightedVec<2> c({g(0), g(1)}, 2);
    auto one = audit_axioms(c, AuditOptions{100'000'000, 1});
    auto four = audit_axioms(c, AuditOptions{100'000'000, 4});
    CHECK(to_json(one) == to_json(four));
}

TEST_CASE("weighted F2 audit passes") {
    FinWeightedVec<2> c({g(0), g(1)}, 2);
    auto r = audit_axioms(c);
    r.append(audit_obscure(c));
    for (auto& i: r.items) {
        CAPTURE(i.axiom);
        CHECK(i.verdict == Verdict::pass);
    }
}

TEST_CASE("sampled audit of p-adic modules") {
    WeightedModules<Rational> c(ValuedField<Rational>::padic(2));
    WeightedSampler s(2, 5);
    auto r = audit_sampled(c, s, 50);
    CHECK(r.bounds["samples"] == 50);
    for (auto& i: r.items) {
        CAPTURE(i.axiom);
        if (i.axiom.rfind("split", 0) == 0) {
            CHECK(i.verdict == Verdict::skipped);
            continue;
        }
        CHECK(i.verdict == Verdict::pass);
        CHECK(i.sampled);
        CHECK(i.count == 50);
    }
}

TEST_CASE("report JSON round trip") {
    FinPointedSets c(2);
    auto r = audit_axioms(c);
    r.append(audit_obscure(c));
    auto j = to_json(r);
    auto back = audit_report_from_json(json::parse(j.dump()));
    CHECK(to_json(back) == j);
    auto bad = j;
    for (auto& i: bad["items"]) {
        if (i["verdict"] == "fail") i["witness"] = nullptr;
    }
    CHECK_THROWS_AS(audit_report_from_json(bad), parse_error);
    auto unknown = j;
    unknown["items"][0]["verdict"] = "maybe";
    CHECK_THROWS_AS(audit_report_from_json(unknown), parse_error);
}

TEST_CASE("right lifting property") {
    FinPointedSets c(2);
    auto z = c.zero_object();
    // 0 -> {0,x} against 0 -> {0,x}: the identity on {0,x} has no preimage
    auto a = c.zero_map(z, {1});
    std::vector<PointedMap> gens{a};
    auto v = has_rlp(c, a, std::span<const PointedMap>(gens));
    CHECK_FALSE(v.holds);
    REQUIRE(v.unfilled);
    CHECK(v.unfilled->generator == 0);
    CHECK(c.equal(v.unfilled->v, c.identity({1})));
    CHECK(has_rlp(c, c.identity({2}), std::span<const PointedMap>(gens)).holds);
    CHECK(has_rlp(c, c.zero_map({1}, z), std::span<const PointedMap>(gens)).holds);
    CHECK(has_rlp(c, a, std::span<const PointedMap>()).squares == 0);
    CHECK_THROWS_AS(has_rlp(c, c.zero_map({2}, z), std::span<const PointedMap>(gens), 0), budget_exceeded);
    // with a mono generator: filler found by enumeration
    PointedMap m(1, 2, {0, 1});
    auto d = find_filler(c, c.zero_map({2}, z), m, PointedMap(1, 2, {0, 2}), c.zero_map({2}, z));
    REQUIRE(d);
    CHECK(c.compose(*d, m) == PointedMap(1, 2, {0, 2}));
}

TEST_CASE("every pointed set is injective relative to strict monos") {
    FinPointedSets c(3);
    auto monos = admissible_monos(c);
    for (auto& f: monos) CHECK(is_injective(f));
    for (auto& x: c.objects()) CHECK(is_injective_object(c, x, std::span<const PointedMap>(monos)).holds);
}

TEST_CASE("injective weighted objects within bounds") {
    // With max_dim 1 the strict monos are 0 -> R and isomorphisms of rank-one spaces.
    FinWeightedVec<2> c({g(0), g(1)}, 1);
    auto monos = admissible_monos(c);
    for (auto& m: monos) CHECK(oracle::strict_mono<2>(m.dom().weights(), m.cod().weights(), oracle::ints<2>(m.matrix())));
    for (auto& x: c.objects()) CHECK(is_injective_object(c, x, std::span<const BoundedMap<F2>>(monos)).holds);
    CHECK(is_injective_object(c, c.zero_object()).holds);
}

}
