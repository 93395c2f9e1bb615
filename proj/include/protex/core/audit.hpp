#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include <protex/core/report.hpp>
#include <protex/core/strictness.hpp>

namespace protex {

struct AuditOptions {
    std::size_t budget = 100'000'000;   // diagrams per audit before budget_exceeded
    unsigned jobs = 1;
};

// All hom-sets among the enumerated objects with their strict flags.
template <EnumerableCategory C>
class HomTable {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    HomTable(const C& c, unsigned jobs = 1): objects_(c.objects()) {
        const auto n = objects_.size();
        homs_.resize(n * n);
        flags_.resize(n * n);
        auto fill = [&](std::size_t p) {
            homs_[p] = c.morphisms(objects_[p / n], objects_[p % n]);
            for (auto& f: homs_[p]) flags_[p].push_back(strictness(c, f));
        };
        parallel_for(n * n, jobs, fill);
    }

    std::size_t size() const { return objects_.size(); }
    const Object& object(std::size_t i) const { return objects_[i]; }
    const std::vector<Morphism>& hom(std::size_t i, std::size_t j) const { return homs_[i * size() + j]; }
    const std::vector<StrictFlags>& flags(std::size_t i, std::size_t j) const { return flags_[i * size() + j]; }

    std::size_t morphism_count() const {
        std::size_t t = 0;
        for (auto& h: homs_) t += h.size();
        return t;
    }

    // Runs body(i) for i < n on up to `jobs` threads. Exceptions propagate.
    static void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body) {
        if (jobs <= 1 || n < 2) {
            for (std::size_t i = 0; i < n; ++i) body(i);
            return;
        }
        std::vector<std::future<void>> fs;
        for (unsigned t = 0; t < jobs; ++t) {
            fs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t i = t; i < n; i += jobs) body(i);
            }));
        }
        for (auto& f: fs) f.get();
    }

private:
    std::vector<Object> objects_;
    std::vector<std::vector<Morphism>> homs_;
    std::vector<std::vector<StrictFlags>> flags_;
};

// Exhaustive audits over a HomTable. Results are independent of `jobs`: work
// is split by the outermost object index and the reported witness is the one
// with the lowest index.
template <EnumerableCategory C>
class Auditor {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;

    Auditor(const C& c, AuditOptions opt = {}): c_(c), opt_(opt), table_(c, opt.jobs) {}

    const HomTable<C>& table() const { return table_; }

    AuditReport axioms() {
        AuditReport r = header();
        const auto n = table_.size();
        r.items.push_back(run("identity_admissible", [&](std::size_t i, Partial& p) {
            auto id = c_.identity(table_.object(i));
            tick(p);
            auto fl = strictness(c_, id);
            if (!fl.strict_mono || !fl.strict_epi) p.witness = {{"identity", c_.morphism_json(id)}};
        }));
        r.items.push_back(run("mono_composition", [&](std::size_t i, Partial& p) { composition(i, p, true); }));
        r.items.push_back(run("epi_composition", [&](std::size_t i, Partial& p) { composition(i, p, false); }));
        r.items.push_back(run("epi_pullback_along_mono", [&](std::size_t k, Partial& p) { pullbacks(k, p, true); }));
        r.items.push_back(run("mono_pushout_along_epi", [&](std::size_t k, Partial& p) { pushouts(k, p, true); }));
        r.items.push_back(run("epi_pullback_along_all", [&](std::size_t k, Partial& p) { pullbacks(k, p, false); }));
        r.items.push_back(run("mono_pushout_along_all", [&](std::size_t k, Partial& p) { pushouts(k, p, false); }));
        (void)n;
        return r;
    }

    // Every instance here has all kernels and cokernels, so the plain
    // obscure axioms have the same hypotheses as the strong ones.
    AuditReport obscure() {
        AuditReport r = header();
        auto left = run("left", [&](std::size_t a, Partial& p) { cancellation(a, p, true); });
        auto right = run("right", [&](std::size_t a, Partial& p) { cancellation(a, p, false); });
        auto strong_left = left;
        strong_left.axiom = "strong_left";
        auto strong_right = right;
        strong_right.axiom = "strong_right";
        left.note = right.note = "every morphism has a kernel and a cokernel; hypotheses coincide with the strong form";
        r.items.push_back(left);
        r.items.push_back(right);
        r.items.push_back(strong_left);
        r.items.push_back(strong_right);
        r.items.push_back(run("split_mono_admissible", [&](std::size_t a, Partial& p) { splits(a, p, true); }));
        r.items.push_back(run("split_epi_admissible", [&](std::size_t a, Partial& p) { splits(a, p, false); }));
        return r;
    }

private:
    struct Partial {
        std::size_t count = 0;
        json witness;
    };

    AuditReport header() const {
        AuditReport r;
        r.label = c_.label();
        r.bounds = c_.bounds_json();
        r.bounds["budget"] = opt_.budget;
        r.bounds["objects"] = table_.size();
        r.bounds["morphisms"] = table_.morphism_count();
        return r;
    }

    void tick(Partial& p) {
        ++p.count;
        if (++total_ > opt_.budget) throw budget_exceeded("audit of " + c_.label() + " exceeded the budget of " + std::to_string(opt_.budget) + " diagrams");
    }

    template <typename Body>
    AuditItem run(std::string axiom, Body body) {
        std::vector<Partial> parts(table_.size());
        HomTable<C>::parallel_for(parts.size(), opt_.jobs, [&](std::size_t i) { body(i, parts[i]); });
        AuditItem item;
        item.axiom = std::move(axiom);
        for (auto& p: parts) {
            item.count += p.count;
            if (item.witness.is_null() && !p.witness.is_null()) item.witness = p.witness;
        }
        item.verdict = item.witness.is_null()? Verdict::pass: Verdict::fail;
        return item;
    }

    json diagram(std::initializer_list<std::pair<const char*, const Morphism*>> maps) const {
        json j = json::object();
        for (auto& [name, f]: maps) j[name] = c_.morphism_json(*f);
        return j;
    }

    // Composites g o f of strict monos (epis) out of object i.
    void composition(std::size_t i, Partial& p, bool mono) {
        const auto n = table_.size();
        for (std::size_t j = 0; j < n; ++j) {
            const auto& fs = table_.hom(i, j);
            const auto& ff = table_.flags(i, j);
            for (std::size_t a = 0; a < fs.size(); ++a) {
                if (!(mono? ff[a].strict_mono: ff[a].strict_epi)) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& gs = table_.hom(j, k);
                    const auto& gf = table_.flags(j, k);
                    for (std::size_t b = 0; b < gs.size(); ++b) {
                        if (!(mono? gf[b].strict_mono: gf[b].strict_epi)) continue;
                        tick(p);
                        auto h = c_.compose(gs[b], fs[a]);
                        auto fl = strictness(c_, h);
                        if (!(mono? fl.strict_mono: fl.strict_epi)) {
                            p.witness = diagram({{"f", &fs[a]}, {"g", &gs[b]}, {"composite", &h}});
                            return;
                        }
                    }
                }
            }
        }
    }

    // Strict epis e: X -> Z pulled back along m: Y -> Z, with m a strict mono
    // or arbitrary. The leg P -> Y must be a strict epi.
    void pullbacks(std::size_t z, Partial& p, bool along_monos) {
        const auto n = table_.size();
        for (std::size_t x = 0; x < n; ++x) {
            const auto& es = table_.hom(x, z);
            const auto& ef = table_.flags(x, z);
            for (std::size_t a = 0; a < es.size(); ++a) {
                if (!ef[a].strict_epi) continue;
                for (std::size_t y = 0; y < n; ++y) {
                    const auto& ms = table_.hom(y, z);
                    const auto& mf = table_.flags(y, z);
                    for (std::size_t b = 0; b < ms.size(); ++b) {
                        if (along_monos && !mf[b].strict_mono) continue;
                        tick(p);
                        auto sq = c_.pullback(es[a], ms[b]);
                        if (!strictness(c_, sq.second).strict_epi) {
                            p.witness = diagram({{"epi", &es[a]}, {"along", &ms[b]}, {"pulled_back", &sq.second}});
                            return;
                        }
                    }
                }
            }
        }
    }

    // Strict monos m: K -> M pushed out along e: K -> L, with e a strict epi
    // or arbitrary. The leg L -> P must be a strict mono.
    void pushouts(std::size_t k, Partial& p, bool along_epis) {
        const auto n = table_.size();
        for (std::size_t m = 0; m < n; ++m) {
            const auto& is = table_.hom(k, m);
            const auto& iflags = table_.flags(k, m);
            for (std::size_t a = 0; a < is.size(); ++a) {
                if (!iflags[a].strict_mono) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& es = table_.hom(k, l);
                    const auto& ef = table_.flags(k, l);
                    for (std::size_t b = 0; b < es.size(); ++b) {
                        if (along_epis && !ef[b].strict_epi) continue;
                        tick(p);
                        auto sq = c_.pushout(is[a], es[b]);
                        if (!strictness(c_, sq.second).strict_mono) {
                            p.witness = diagram({{"mono", &is[a]}, {"along", &es[b]}, {"pushed_out", &sq.second}});
                            return;
                        }
                    }
                }
            }
        }
    }

    // Left: j o i strict mono forces i strict mono, for i: A -> B, j: B -> C.
    // Right: e o j strict epi forces e strict epi, for j: A -> B, e: B -> C.
    void cancellation(std::size_t a, Partial& p, bool left) {
        const auto n = table_.size();
        for (std::size_t b = 0; b < n; ++b) {
            const auto& first = table_.hom(a, b);
            const auto& first_flags = table_.flags(a, b);
            for (std::size_t c = 0; c < n; ++c) {
                const auto& second = table_.hom(b, c);
                const auto& second_flags = table_.flags(b, c);
                for (std::size_t u = 0; u < first.size(); ++u) {
                    for (std::size_t v = 0; v < second.size(); ++v) {
                        tick(p);
                        // The conclusion already holds; no need to look at the composite.
                        if (left? first_flags[u].strict_mono: second_flags[v].strict_epi) continue;
                        auto h = c_.compose(second[v], first[u]);
                        auto fl = strictness(c_, h);
                        if (left && fl.strict_mono) {
                            p.witness = diagram({{"i", &first[u]}, {"j", &second[v]}, {"composite", &h}});
                            return;
                        }
                        if (!left && fl.strict_epi) {
                            p.witness = diagram({{"j", &first[u]}, {"e", &second[v]}, {"composite", &h}});
                            return;
                        }
                    }
                }
            }
        }
    }

    // Split monos f: A -> B (some r with r o f == id) must be strict monos;
    // split epis f: A -> B (some s with f o s == id) strict epis.
    void splits(std::size_t a, Partial& p, bool mono) {
        const auto n = table_.size();
        for (std::size_t b = 0; b < n; ++b) {
            const auto& fs = table_.hom(a, b);
            const auto& ff = table_.flags(a, b);
            const auto& back = table_.hom(b, a);
            const auto id = c_.identity(mono? table_.object(a): table_.object(b));
            for (std::size_t u = 0; u < fs.size(); ++u) {
                tick(p);
                if (mono? ff[u].strict_mono: ff[u].strict_epi) continue;
                for (const auto& r: back) {
                    if (c_.equal(mono? c_.compose(r, fs[u]): c_.compose(fs[u], r), id)) {
                        p.witness = mono? diagram({{"split_mono", &fs[u]}, {"retraction", &r}}): diagram({{"split_epi", &fs[u]}, {"section", &r}});
                        return;
                    }
                }
            }
        }
    }

    const C& c_;
    AuditOptions opt_;
    HomTable<C> table_;
    std::atomic<std::size_t> total_{0};
};

template <EnumerableCategory C>
AuditReport audit_axioms(const C& c, AuditOptions opt = {}) {
    return Auditor<C>(c, opt).axioms();
}

template <EnumerableCategory C>
AuditReport audit_obscure(const C& c, AuditOptions opt = {}) {
    return Auditor<C>(c, opt).obscure();
}

// Seeded random diagrams, `samples` per axiom. A pass here is evidence, not
// proof, and is marked sampled. Split admissibility needs hom-set search and
// is reported as skipped.
template <SolverCategory C, typename R>
    requires DiagramSampler<R, C>
AuditReport audit_sampled(const C& c, R& sampler, std::size_t samples, json bounds = json::object()) {
    using M = typename C::Morphism;
    AuditReport r;
    r.label = c.label();
    r.bounds = std::move(bounds);
    r.bounds["samples"] = samples;
    auto item = [&](std::string axiom, auto&& one) {
        AuditItem it;
        it.axiom = std::move(axiom);
        it.sampled = true;
        it.note = "pass (sampled)";
        for (std::size_t s = 0; s < samples && it.witness.is_null(); ++s) {
            ++it.count;
            it.witness = one();
        }
        if (it.witness.is_null()) it.verdict = Verdict::pass;
        else {
            it.verdict = Verdict::fail;
            it.note.clear();
        }
        r.items.push_back(std::move(it));
    };
    auto js = [&](std::initializer_list<std::pair<const char*, const M*>> maps) {
        json j = json::object();
        for (auto& [name, f]: maps) j[name] = c.morphism_json(*f);
        return j;
    };
    item("identity_admissible", [&]() -> json {
        auto id = c.identity(sampler.object());
        auto fl = strictness(c, id);
        return fl.strict_mono && fl.strict_epi? json(): js({{"identity", &id}});
    });
    item("mono_composition", [&]() -> json {
        auto g = sampler.strict_mono_into(sampler.object());
        auto f = sampler.strict_mono_into(c.domain(g));
        auto h = c.compose(g, f);
        return strictness(c, h).strict_mono? json(): js({{"f", &f}, {"g", &g}, {"composite", &h}});
    });
    item("epi_composition", [&]() -> json {
        auto f = sampler.strict_epi_from(sampler.object());
        auto g = sampler.strict_epi_from(c.codomain(f));
        auto h = c.compose(g, f);
        return strictness(c, h).strict_epi? json(): js({{"f", &f}, {"g", &g}, {"composite", &h}});
    });
    auto pull = [&](bool monos) {
        return [&, monos]() -> json {
            auto e = sampler.strict_epi_from(sampler.object());
            auto m = monos? sampler.strict_mono_into(c.codomain(e)): sampler.morphism_into(c.codomain(e));
            auto sq = c.pullback(e, m);
            return strictness(c, sq.second).strict_epi? json(): js({{"epi", &e}, {"along", &m}, {"pulled_back", &sq.second}});
        };
    };
    auto push = [&](bool epis) {
        return [&, epis]() -> json {
            auto i = sampler.strict_mono_into(sampler.object());
            auto e = epis? sampler.strict_epi_from(c.domain(i)): sampler.morphism_from(c.domain(i));
            auto sq = c.pushout(i, e);
            return strictness(c, sq.second).strict_mono? json(): js({{"mono", &i}, {"along", &e}, {"pushed_out", &sq.second}});
        };
    };
    item("epi_pullback_along_mono", pull(true));
    item("mono_pushout_along_epi", push(true));
    item("epi_pullback_along_all", pull(false));
    item("mono_pushout_along_all", push(false));
    auto left = [&]() -> json {
        auto [i, j] = sampler.mono_factorization();
        auto h = c.compose(j, i);
        if (!strictness(c, h).strict_mono) return json();   // hypothesis not met; counted, vacuous
        return strictness(c, i).strict_mono? json(): js({{"i", &i}, {"j", &j}, {"composite", &h}});
    };
    auto right = [&]() -> json {
        auto [j, e] = sampler.epi_factorization();
        auto h = c.compose(e, j);
        if (!strictness(c, h).strict_epi) return json();
        return strictness(c, e).strict_epi? json(): js({{"j", &j}, {"e", &e}, {"composite", &h}});
    };
    item("left", left);
    item("right", right);
    item("strong_left", left);
    item("strong_right", right);
    for (auto name: {"split_mono_admissible", "split_epi_admissible"}) {
        AuditItem it;
        it.axiom = name;
        it.note = "needs hom-set enumeration";
        r.items.push_back(std::move(it));
    }
    return r;
}

} // namespace protex
