#include <protex/cli/app.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <protex/core/audit.hpp>
#include <protex/factor/factorization.hpp>
#include <protex/finite/counterexamples.hpp>
#include <protex/finite/oracle_check.hpp>
#include <protex/finite/pointed_set.hpp>
#include <protex/finite/weighted_category.hpp>
#include <protex/io/json_io.hpp>

#ifndef PROTEX_FIXTURE_DIR
#define PROTEX_FIXTURE_DIR "fixtures"
#endif

namespace protex::cli {

namespace {

struct Options {
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = default_seed;
    unsigned jobs = 1;
    std::size_t budget = 100'000'000;

    std::string op;
    std::vector<std::string> maps;
    std::string input;

    std::string instance = "weighted";
    std::string field = "F2";
    std::string weights = "g^0,g^1,g^2";
    std::optional<int> max_dim;
    int max_elements = 4;
    unsigned prime = 2;
    std::vector<unsigned> primes{2, 3};
    std::size_t samples = 1000;

    std::string object;
    std::string mode = "preenvelope";
    std::string generators = "monos";
    std::size_t fuel = 100;

    std::vector<std::string> fixtures;
    std::string cert;
};

template <typename S> struct Tag { using type = S; };

template <typename F>
json with_scalar(const FieldSpec& spec, F&& f) {
    if (spec.scalar == "F2") return f(Tag<F2>{});
    if (spec.scalar == "F3") return f(Tag<F3>{});
    if (spec.scalar == "F5") return f(Tag<F5>{});
    return f(Tag<Rational>{});
}

template <typename F>
json with_prime_field(const std::string& name, F&& f) {
    if (name == "F2") return f(std::integral_constant<int, 2>{});
    if (name == "F3") return f(std::integral_constant<int, 3>{});
    if (name == "F5") return f(std::integral_constant<int, 5>{});
    throw parse_error("--field: expected F2, F3 or F5, got '" + name + "'");
}

std::vector<Magnitude> parse_weight_list(const std::string& text) {
    std::vector<Magnitude> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Magnitude::parse(item));
        }
        catch (const parse_error& e) {
            throw parse_error(std::string("--weights: ") + e.what());
        }
    }
    if (out.empty()) throw parse_error("--weights: expected a comma-separated list of magnitudes");
    return out;
}

json weights_json(std::span<const Magnitude> w) {
    json a = json::array();
    for (auto& m: w) a.push_back(m.str());
    return a;
}

// The field a map or space document lives over.
FieldSpec field_of(const json& doc) {
    if (doc.is_object() && doc.contains("domain")) return parse_field_spec(member(doc["domain"], "field", "/domain"), "/domain/field");
    return parse_field_spec(member(doc, "field", ""), "/field");
}

std::string classification_text(const Classification& c) {
    std::string s;
    auto add = [&](const char* name, bool v) { s += std::string(name) + "=" + (v? "true": "false") + " "; };
    add("mono", c.mono);
    add("epi", c.epi);
    add("strict_mono", c.strict_mono);
    add("strict_epi", c.strict_epi);
    add("iso", c.iso);
    add("split_mono", c.split_mono);
    add("split_epi", c.split_epi);
    s.pop_back();
    return s;
}

json classification_json(const Classification& c) {
    return {{"mono", c.mono}, {"epi", c.epi}, {"strict_mono", c.strict_mono}, {"strict_epi", c.strict_epi},
            {"iso", c.iso}, {"split_mono", c.split_mono}, {"split_epi", c.split_epi}};
}

struct Output {
    json bounds = json::object();
    json result;
    std::string summary;
    int code = ok;
};

void emit(const Options& opt, const std::string& command, const Output& o, std::ostream& out) {
    json report{{"version", version}, {"command", command}, {"bounds", o.bounds}, {"result", o.result}};
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f) throw parse_error("--out: cannot write " + opt.out_path);
        f << report.dump(2) << "\n";
        out << o.summary << "\n";
    }
    else if (opt.format == "text") out << o.summary << "\n";
    else out << report.dump(2) << "\n";
}

// compute

template <typename S>
json chain_json(const ChainColimit<S>& col) {
    json cocone = json::array();
    for (auto& c: col.cocone) cocone.push_back(map_json(c));
    json norms = json::array();
    for (std::size_t k = 0; k < col.stages.size(); ++k) {
        for (Index i = 0; i < col.stages[k].dim(); ++i) {
            auto e = col.stages[k].basis_vector(i);
            norms.push_back({{"stage", k}, {"basis", i}, {"inf_formula", col.norm_at(k, e).str()},
                             {"last_stage", norm(col.object, col.cocone[k](e)).str()}});
        }
    }
    return {{"object", space_json(col.object)}, {"cocone", cocone}, {"norms", norms}};
}

template <typename S>
json ortho_json(const OrthoBasis<S>& b) {
    json v = json::array(), nv = json::array(), norms = json::array();
    for (auto& x: b.vectors) {
        v.push_back(vector_json(x));
        norms.push_back(norm(b.ambient, x).str());
    }
    for (auto& x: b.null_vectors) nv.push_back(vector_json(x));
    auto defect = certificate_defect(b);
    return {{"vectors", v}, {"pivots", b.pivots}, {"norms", norms}, {"null_vectors", nv}, {"null_pivots", b.null_pivots},
            {"certificate", defect.empty()? "ok": defect}};
}

std::string space_text(const json& space) {
    std::string w;
    for (auto& m: space["weights"]) w += (w.empty()? "": ", ") + m.get<std::string>();
    return "dim " + std::to_string(space["weights"].size()) + ", weights [" + w + "]";
}

Output compute(const Options& opt) {
    Output o;
    auto need_maps = [&](std::size_t n) {
        if (opt.maps.size() < n) throw parse_error("compute " + opt.op + ": needs " + std::to_string(n) + " --map file(s)");
        std::vector<json> docs;
        for (auto& p: opt.maps) docs.push_back(load_json_file(p));
        return docs;
    };
    auto need_input = [&] {
        if (opt.input.empty()) throw parse_error("compute " + opt.op + ": needs --input");
        return load_json_file(opt.input);
    };
    if (opt.op == "kernel" || opt.op == "cokernel") {
        auto docs = need_maps(1);
        o.result = with_scalar(field_of(docs[0]), [&]<typename S>(Tag<S>) -> json {
            auto f = parse_map<S>(docs[0]);
            if (opt.op == "kernel") {
                auto k = kernel(f);
                return {{"object", space_json(k.object)}, {"inclusion", map_json(k.inclusion)}};
            }
            auto q = cokernel(f);
            return {{"object", space_json(q.object)}, {"projection", map_json(q.projection)}};
        });
        o.summary = opt.op + ": " + space_text(o.result["object"]);
    }
    else if (opt.op == "pullback" || opt.op == "pushout") {
        auto docs = need_maps(2);
        o.result = with_scalar(field_of(docs[0]), [&]<typename S>(Tag<S>) -> json {
            auto f = parse_map<S>(docs[0]);
            auto g = parse_map<S>(docs[1], "/second");
            if (opt.op == "pullback") {
                auto p = pullback(f, g);
                return {{"object", space_json(p.object)}, {"first", map_json(p.to_first)}, {"second", map_json(p.to_second)}};
            }
            auto p = pushout(f, g);
            return {{"object", space_json(p.object)}, {"first", map_json(p.from_first)}, {"second", map_json(p.from_second)}};
        });
        o.summary = opt.op + ": " + space_text(o.result["object"]);
    }
    else if (opt.op == "quotient-norm" || opt.op == "orthogonalize") {
        auto doc = need_input();
        o.result = with_scalar(parse_field_spec(member(member(doc, "space", ""), "field", "/space"), "/space/field"), [&]<typename S>(Tag<S>) -> json {
            auto x = parse_space<S>(doc["space"], "/space");
            const auto& g = member(doc, "generators", "");
            if (!g.is_array()) throw parse_error("/generators: expected an array of vectors");
            std::vector<Vec<S>> gens;
            for (std::size_t k = 0; k < g.size(); ++k) gens.push_back(parse_vector<S>(g[k], x.dim(), "/generators/" + std::to_string(k)));
            auto basis = orthogonalize(x, std::span<const Vec<S>>(gens));
            if (opt.op == "orthogonalize") return ortho_json(basis);
            auto m = parse_vector<S>(member(doc, "vector", ""), x.dim(), "/vector");
            return {{"quotient_norm", quotient_norm(basis, m).str()}, {"representative", vector_json(reduce(basis, m))}};
        });
        o.summary = opt.op == "orthogonalize"? "orthogonalize: " + std::to_string(o.result["vectors"].size()) + " vectors, " +
                                                   std::to_string(o.result["null_vectors"].size()) + " null vectors, certificate " +
                                                   o.result["certificate"].get<std::string>()
                                             : "quotient norm: " + o.result["quotient_norm"].get<std::string>();
    }
    else if (opt.op == "colimit") {
        auto docs = need_maps(1);
        o.result = with_scalar(field_of(docs[0]), [&]<typename S>(Tag<S>) -> json {
            std::vector<BoundedMap<S>> links;
            for (std::size_t k = 0; k < docs.size(); ++k) links.push_back(parse_map<S>(docs[k], "/link" + std::to_string(k)));
            return chain_json(chain_colimit(links.front().dom(), std::span<const BoundedMap<S>>(links)));
        });
        std::size_t agree = 0;
        for (auto& n: o.result["norms"]) agree += n["inf_formula"] == n["last_stage"];
        o.summary = "colimit: " + space_text(o.result["object"]) + "; inf formula matches last stage on " + std::to_string(agree) + "/" +
                    std::to_string(o.result["norms"].size()) + " basis vectors";
    }
    else throw parse_error("compute: unknown operation '" + opt.op + "'");
    return o;
}

// classify

Output classify(const Options& opt) {
    if (opt.maps.size() != 1) throw parse_error("classify: needs exactly one --map");
    auto doc = load_json_file(opt.maps[0]);
    Output o;
    if (doc.is_object() && doc.contains("images")) {
        FinPointedSets c(0);
        auto f = c.parse_morphism(doc);
        auto g = classify_strictness(c, f);
        o.result = {{"classification", {{"mono", is_injective(f)}, {"epi", is_surjective(f)}, {"strict_mono", g.strict_mono},
                                        {"strict_epi", g.strict_epi}, {"iso", c.is_iso(f)}}},
                    {"closed_form", {{"strict_mono", c.native_strict_mono(f)}, {"strict_epi", c.native_strict_epi(f)}}},
                    {"strictness", std::string(to_string(g.kind()))}};
        o.summary = "pointed map: " + std::string(to_string(g.kind()));
        return o;
    }
    o.result = with_scalar(field_of(doc), [&]<typename S>(Tag<S>) -> json {
        auto f = parse_map<S>(doc);
        auto c = classify_morphism(f);
        WeightedModules<S> cat(f.dom().field());
        auto g = classify_strictness(cat, f);
        return {{"classification", classification_json(c)}, {"operator_norm", operator_norm(f).str()},
                {"strictness", std::string(to_string(g.kind()))}, {"summary", classification_text(c)}};
    });
    o.summary = o.result["summary"].get<std::string>();
    o.result.erase("summary");
    return o;
}

// audit

template <typename C>
Output enumerated_audit(const C& c, const Options& opt) {
    AuditOptions ao{opt.budget, opt.jobs};
    Auditor<C> auditor(c, ao);
    auto r = auditor.axioms();
    r.append(auditor.obscure());
    Output o;
    o.bounds = r.bounds;
    o.bounds["jobs"] = opt.jobs;
    o.result = to_json(r);
    std::string s = r.label + "\n";
    for (auto& i: r.items) s += "  " + i.axiom + ": " + to_string(i.verdict) + " (" + std::to_string(i.count) + " diagrams)\n";
    s.pop_back();
    o.summary = s;
    return o;
}

Output audit(const Options& opt) {
    if (opt.instance == "pointed") return enumerated_audit(FinPointedSets(opt.max_elements), opt);
    if (opt.instance == "weighted") {
        auto w = parse_weight_list(opt.weights);
        Output o;
        with_prime_field(opt.field, [&](auto p) -> json {
            o = enumerated_audit(FinWeightedVec<decltype(p)::value>(w, opt.max_dim.value_or(2)), opt);
            return {};
        });
        return o;
    }
    if (opt.instance == "padic") {
        WeightedModules<Rational> c(ValuedField<Rational>::padic(opt.prime));
        WeightedSampler sampler(opt.prime, opt.seed);
        auto r = audit_sampled(c, sampler, opt.samples, {{"instance", "padic"}, {"prime", opt.prime}, {"seed", opt.seed}});
        Output o;
        o.bounds = r.bounds;
        o.result = to_json(r);
        std::string s = r.label + " (sampled)\n";
        for (auto& i: r.items) s += "  " + i.axiom + ": " + to_string(i.verdict) + " (" + std::to_string(i.count) + " diagrams)\n";
        s.pop_back();
        o.summary = s;
        return o;
    }
    throw parse_error("--instance: expected pointed, weighted or padic, got '" + opt.instance + "'");
}

// counterexamples

Output counterexamples(const Options& opt) {
    auto paths = opt.fixtures;
    if (paths.empty()) {
        paths = {std::string(PROTEX_FIXTURE_DIR) + "/pullback_not_strict.json", std::string(PROTEX_FIXTURE_DIR) + "/right_obscure.json"};
    }
    std::vector<json> docs;
    for (auto& p: paths) docs.push_back(load_json_file(p));
    auto res = replay_fixtures(docs);
    auto suite = counterexample_suite(opt.max_elements);
    for (auto& i: suite.report.items) {
        if (i.axiom.ends_with("_exhaustive")) res.report.items.push_back(i);
    }
    res.deviations.insert(res.deviations.end(), suite.deviations.begin(), suite.deviations.end());
    res.report.bounds = suite.report.bounds;
    Output o;
    o.bounds = suite.report.bounds;
    o.result = to_json(res.report);
    o.result["as_expected"] = res.as_expected();
    o.result["deviations"] = res.deviations;
    std::string s;
    for (auto& i: res.report.items) s += i.axiom + ": " + to_string(i.verdict) + (i.note.empty()? "": " [" + i.note + "]") + "\n";
    s += res.as_expected()? "all expected verdicts reproduced": "DEVIATIONS: " + std::to_string(res.deviations.size());
    o.summary = s;
    return o;
}

// factor and verify-cert

template <typename C>
json factor_checks(const C& c, const FactorizationCertificate<C>& cert, const std::string& mode) {
    json checks{{"steps", cert.steps.size()}, {"replay", replay_certificate(c, cert)}};
    if (checks["replay"] == "") checks["replay"] = "ok";
    checks["left_strict_mono"] = strictness(c, cert.left).strict_mono;
    if (mode == "preenvelope") {
        auto inj = is_injective_object(c, c.codomain(cert.left));
        checks["codomain_injective_within_bounds"] = inj.holds;
    }
    return checks;
}

template <typename C>
Output run_factor(const C& c, const Options& opt, const std::vector<typename C::Morphism>& gens) {
    using M = typename C::Morphism;
    std::optional<M> f;
    if (opt.mode == "map") {
        if (opt.maps.size() != 1) throw parse_error("factor --mode map: needs exactly one --map");
        f = c.parse_morphism(load_json_file(opt.maps[0]));
    }
    else {
        if (opt.object.empty()) throw parse_error("factor --mode " + opt.mode + ": needs --object");
        auto x = c.parse_object(load_json_file(opt.object));
        if (opt.mode == "preenvelope") f = c.zero_map(x, c.zero_object());
        else if (opt.mode == "precover") f = c.zero_map(c.zero_object(), x);
        else throw parse_error("--mode: expected preenvelope, precover or map, got '" + opt.mode + "'");
    }
    Output o;
    o.bounds = c.bounds_json();
    o.bounds["fuel"] = opt.fuel;
    o.bounds["generators"] = opt.generators;
    o.bounds["generator_count"] = gens.size();
    try {
        auto cert = factor_map(c, *f, std::span<const M>(gens), opt.fuel, opt.budget);
        o.result = {{"status", "complete"}, {"certificate", certificate_json(c, cert)}, {"checks", factor_checks(c, cert, opt.mode)}};
        o.summary = "factorization complete in " + std::to_string(cert.steps.size()) + " steps";
    }
    catch (const fuel_exhausted_with<C>& e) {
        o.result = {{"status", "fuel_exhausted"}, {"certificate", certificate_json(c, e.partial)}, {"message", e.what()}};
        o.summary = std::string("fuel exhausted: ") + e.what();
        o.code = out_of_resources;
    }
    return o;
}

template <typename C>
std::vector<typename C::Morphism> monos_of(const C& c) { return admissible_monos(c); }

Output factor(const Options& opt) {
    if (opt.instance == "pointed") {
        FinPointedSets c(opt.max_elements);
        std::vector<PointedMap> gens;
        if (opt.generators == "monos") gens = monos_of(c);
        else if (opt.generators == "rank-one") gens = {c.zero_map({0}, {1})};
        else throw parse_error("--generators: expected monos or rank-one");
        return run_factor(c, opt, gens);
    }
    if (opt.instance == "weighted") {
        auto w = parse_weight_list(opt.weights);
        Output o;
        with_prime_field(opt.field, [&](auto p) -> json {
            constexpr int P = decltype(p)::value;
            FinWeightedVec<P> c(w, opt.max_dim.value_or(2));
            std::vector<BoundedMap<Fp<P>>> gens;
            if (opt.generators == "monos") gens = monos_of(c);
            else if (opt.generators == "rank-one") {
                for (auto& d: c.weight_set()) gens.push_back(BoundedMap<Fp<P>>::zero(c.zero_object(), WeightedSpace<Fp<P>>::r_delta(c.field(), d)));
            }
            else throw parse_error("--generators: expected monos or rank-one");
            o = run_factor(c, opt, gens);
            return {};
        });
        return o;
    }
    throw parse_error("--instance: factor supports pointed or weighted, got '" + opt.instance + "'");
}

template <typename C>
Output verify_with(const C& c, const json& doc) {
    auto cert = certificate_from_json(c, doc);
    auto msg = replay_certificate(c, cert);
    Output o;
    o.bounds = doc["instance"];
    o.result = {{"ok", msg.empty()}, {"message", msg.empty()? "replayed bit-exactly": msg}, {"steps", cert.steps.size()}, {"complete", cert.complete}};
    o.summary = msg.empty()? "certificate ok (" + std::to_string(cert.steps.size()) + " steps)": "certificate REJECTED: " + msg;
    return o;
}

Output verify_cert(const Options& opt) {
    if (opt.cert.empty()) throw parse_error("verify-cert: needs --cert");
    auto doc = load_json_file(opt.cert);
    if (doc.is_object() && doc.contains("result") && doc["result"].contains("certificate")) doc = doc["result"]["certificate"];
    const auto& inst = member(doc, "instance", "");
    auto kind = member(inst, "instance", "/instance").get<std::string>();
    try {
        if (kind == "pointed_sets") {
            return verify_with(FinPointedSets(inst.at("max_elements").get<int>(), inst.at("hom_budget").get<std::size_t>()), doc);
        }
        if (kind == "weighted_vec") {
            std::vector<Magnitude> w;
            for (std::size_t k = 0; k < inst.at("weights").size(); ++k) w.push_back(parse_magnitude(inst["weights"][k], "/instance/weights/" + std::to_string(k)));
            Output o;
            with_prime_field(inst.at("field").get<std::string>(), [&](auto p) -> json {
                o = verify_with(FinWeightedVec<decltype(p)::value>(w, inst.at("max_dim").get<int>(), inst.at("hom_budget").get<std::size_t>()), doc);
                return {};
            });
            return o;
        }
    }
    catch (const json::exception& e) {
        throw parse_error(std::string("/instance: ") + e.what());
    }
    throw parse_error("/instance/instance: unknown instance '" + kind + "'");
}

// oracle-check

Output oracle_check(const Options& opt) {
    auto w = parse_weight_list(opt.weights);
    int d = opt.max_dim.value_or(3);
    Output o;
    o.bounds = {{"field", opt.field}, {"weights", weights_json(w)}, {"max_dim", d}, {"samples", opt.samples}, {"seed", opt.seed}, {"primes", opt.primes}};
    json q = with_prime_field(opt.field, [&](auto p) -> json {
        return quotient_norm_oracle<decltype(p)::value>(std::span<const Magnitude>(w), d).to_json();
    });
    json rev = json::object();
    std::size_t bad = q["mismatches"].get<std::size_t>();
    for (auto p: opt.primes) {
        if (!detail::is_prime(int(p))) throw parse_error("--primes: " + std::to_string(p) + " is not prime");
        auto r = reversal_invariance(p, opt.samples, opt.seed + p).to_json();
        bad += r["mismatches"].get<std::size_t>();
        rev[std::to_string(p)] = r;
    }
    o.result = {{"quotient_norm_vs_brute_force", q}, {"generator_order_reversal", rev}, {"mismatches", bad}};
    o.summary = "quotient norm oracle: " + std::to_string(q["cosets"].get<std::size_t>()) + " cosets checked; reversal: " +
                std::to_string(opt.samples * opt.primes.size()) + " instances; mismatches: " + std::to_string(bad);
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact kernels, cokernels and axiom audits for proto-exact categories", "protex"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));
    app.add_option("--format", opt.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out_path, "write the JSON report here and a text summary to stdout");
    app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for audits")->check(CLI::Range(1u, 256u));
    app.add_option("--budget", opt.budget, "maximum diagrams examined before giving up")->capture_default_str();
    app.fallthrough();

    auto* compute_cmd = app.add_subcommand("compute", "kernel, cokernel, pullback, pushout, quotient-norm, orthogonalize or colimit");
    compute_cmd->add_option("op", opt.op)->required()->check(CLI::IsMember({"kernel", "cokernel", "pullback", "pushout", "quotient-norm", "orthogonalize", "colimit"}));
    compute_cmd->add_option("--map", opt.maps, "map file(s); a chain for colimit")->check(CLI::ExistingFile);
    compute_cmd->add_option("--input", opt.input, "{space, generators[, vector]} for orthogonalize and quotient-norm")->check(CLI::ExistingFile);

    auto* classify_cmd = app.add_subcommand("classify", "classify a map");
    classify_cmd->add_option("--map", opt.maps)->required()->check(CLI::ExistingFile);

    auto instance_options = [&](CLI::App* sub) {
        sub->add_option("--instance", opt.instance, "pointed, weighted or padic")->capture_default_str();
        sub->add_option("--field", opt.field, "F2, F3 or F5 for weighted instances")->capture_default_str();
        sub->add_option("--weights", opt.weights, "allowed weights, comma separated")->capture_default_str();
        sub->add_option("--max-dim", opt.max_dim, "largest dimension enumerated");
        sub->add_option("--max-elements", opt.max_elements, "largest pointed set enumerated")->capture_default_str()->check(CLI::Range(0, 8));
    };
    auto* audit_cmd = app.add_subcommand("audit", "proto-exact, totality and obscure audits");
    instance_options(audit_cmd);
    audit_cmd->add_option("--prime", opt.prime, "prime for the padic instance")->capture_default_str();
    audit_cmd->add_option("--samples", opt.samples, "random diagrams per axiom for the padic instance")->capture_default_str();

    auto* ce_cmd = app.add_subcommand("counterexamples", "replay the pointed-set counterexample fixtures");
    ce_cmd->add_option("--fixtures", opt.fixtures, "fixture files (default: the shipped ones)")->check(CLI::ExistingFile);
    ce_cmd->add_option("--max-elements", opt.max_elements, "bound for the exhaustive obscure audits")->capture_default_str()->check(CLI::Range(0, 8));

    auto* factor_cmd = app.add_subcommand("factor", "small object argument with finite fuel");
    instance_options(factor_cmd);
    factor_cmd->add_option("--mode", opt.mode, "preenvelope, precover or map")->capture_default_str();
    factor_cmd->add_option("--object", opt.object, "object file for preenvelope and precover")->check(CLI::ExistingFile);
    factor_cmd->add_option("--map", opt.maps, "map file for --mode map")->check(CLI::ExistingFile);
    factor_cmd->add_option("--generators", opt.generators, "monos (all admissible monos within bounds) or rank-one")->capture_default_str();
    factor_cmd->add_option("--fuel", opt.fuel, "maximum number of pushout steps")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify-cert", "replay a factorization certificate");
    verify_cmd->add_option("--cert", opt.cert)->required()->check(CLI::ExistingFile);

    auto* oracle_cmd = app.add_subcommand("oracle-check", "algorithmic quotient norms against brute force");
    oracle_cmd->add_option("--field", opt.field, "F2, F3 or F5")->capture_default_str();
    oracle_cmd->add_option("--weights", opt.weights)->capture_default_str();
    oracle_cmd->add_option("--max-dim", opt.max_dim, "largest dimension (default 3)");
    oracle_cmd->add_option("--samples", opt.samples, "random p-adic instances per prime")->capture_default_str();
    oracle_cmd->add_option("--primes", opt.primes, "primes for the reversal check, comma separated")->delimiter(',')->capture_default_str();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (const CLI::CallForVersion&) {
        out << version << "\n";
        return ok;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }

    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        Output o;
        if (sub == compute_cmd) o = compute(opt);
        else if (sub == classify_cmd) o = classify(opt);
        else if (sub == audit_cmd) o = audit(opt);
        else if (sub == ce_cmd) o = counterexamples(opt);
        else if (sub == factor_cmd) o = factor(opt);
        else if (sub == verify_cmd) o = verify_cert(opt);
        else if (sub == oracle_cmd) o = oracle_check(opt);
        emit(opt, name, o, out);
        return o.code;
    }
    catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return bad_input;
    }
    catch (const invariant_violation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return bad_input;
    }
    catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return out_of_resources;
    }
    catch (const fuel_exhausted& e) {
        err << "fuel exhausted: " << e.what() << "\n";
        return out_of_resources;
    }
    catch (const protex_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

} // namespace protex::cli
