#include "patterna/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "patterna/constructions.hpp"
#include "patterna/decide.hpp"
#include "patterna/error.hpp"
#include "patterna/hypergraph.hpp"
#include "patterna/json_io.hpp"
#include "patterna/limits.hpp"
#include "patterna/sampling.hpp"

namespace patterna::cli {

namespace {

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

// One verified property: how many instances passed out of how many tried.
struct Tally {
    std::string name;
    std::string noun;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::string first_failure;

    void record(bool ok, const std::string& why = {})
    {
        ++total;
        if (ok)
            ++passed;
        else if (first_failure.empty())
            first_failure = why.empty() ? "instance " + std::to_string(total - 1) : why;
    }

    // Runs `check`; a thrown library error counts as a failure.
    void attempt(const std::function<bool()>& check)
    {
        try {
            record(check());
        } catch (const Error& e) {
            record(false, e.what());
        }
    }

    [[nodiscard]] bool ok() const { return passed == total; }
};

struct VerifyOptions {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    std::string flavor = "both";
    bool n_given = false;
    bool k_given = false;
};

std::vector<Tally> verify_powerset_sm(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 2;
    Tally exhibited{"exhibited", "fully complete patterns exhibited"};
    Tally witnessed{"witness_verified", "powerset witnesses verified"};
    auto run_one = [&](const Pattern& p) {
        exhibited.attempt([&] { return decide_exhibitable(p).exhibitable; });
        witnessed.attempt([&] { return static_cast<bool>(check_exhibits(powerset_sm_witness(p), p)); });
    };
    if (o.exhaustive) {
        for (const auto& p : all_fully_complete(n))
            run_one(p);
    } else {
        if (n > 5)
            throw Error(ErrorCode::BoundExceeded, "powerset-sm samples need n <= 5");
        const std::size_t splits = std::size_t{1} << n;
        std::uniform_int_distribution<std::uint64_t> pick(1, splits == 64 ? ~0ULL : (1ULL << splits) - 1);
        for (std::size_t s = 0; s < o.samples; ++s) {
            const auto mask = pick(rng);
            std::vector<Condition> c, i;
            for (std::size_t x = 0; x < splits; ++x)
                (mask >> x & 1U ? c : i).push_back(complete_condition(IndexSet::from_mask(x), n));
            run_one(Pattern::make(n, std::move(c), std::move(i)));
        }
    }
    return {exhibited, witnessed};
}

std::vector<Tally> verify_atomless_pm(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 4;
    Tally exhibited{"exhibited", "reasonable positive patterns exhibited"};
    Tally witnessed{"witness_verified", "atomless witnesses verified"};
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto p = random_positive_pattern(rng, n, 6);
        exhibited.attempt([&] { return decide_exhibitable(p).exhibitable; });
        witnessed.attempt([&] { return static_cast<bool>(check_exhibits(atomless_pm_witness(p), p)); });
    }
    return {exhibited, witnessed};
}

std::vector<Tally> verify_pm_char(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 4;
    const auto k = o.k_given ? o.k : 3;
    if (k > 4)
        throw Error(ErrorCode::BoundExceeded, "pm-char checks the property for k <= 4");
    Tally property{"char_property", "canonical families with the intersection property"};
    for (std::size_t j = 0; j <= k; ++j)
        property.attempt([&] { return has_char_property(canonical_char_family(j), j); });
    Tally reduced{"reduction_verified", "reductions verified"};
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto p = random_positive_pattern(rng, n, k);
        reduced.attempt([&] {
            auto fam = pm_char_reduction(canonical_char_family(p.consistency().size()), p);
            return static_cast<bool>(check_exhibits(fam, p));
        });
    }
    return {property, reduced};
}

std::vector<Tally> verify_cm_doubling(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 3;
    Tally shape{"doubled_reasonable_positive", "doubled patterns reasonable and positive"};
    Tally truncated{"truncation_verified", "truncated witnesses verified"};
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto p = random_consistency_pattern(rng, n, 6);
        auto doubled = double_positive(p);
        auto f = classify(doubled);
        shape.record(f.reasonable && f.positive);
        truncated.attempt([&] {
            auto d = decide_exhibitable(doubled);
            return d.exhibitable && check_exhibits(cm_from_doubled_witness(*d.witness, p), p);
        });
    }
    return {shape, truncated};
}

std::vector<Tally> verify_ip_family(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 2;
    Tally exhibited{"exhibited", "reasonable consistency patterns exhibited"};
    const auto fam = ip_family(n);
    if (o.exhaustive) {
        for (const auto& p : all_consistency_patterns(n))
            exhibited.attempt([&] { return static_cast<bool>(check_exhibits(fam, p)); });
    } else {
        for (std::size_t s = 0; s < o.samples; ++s) {
            auto p = random_consistency_pattern(rng, n, 8);
            exhibited.attempt([&] { return static_cast<bool>(check_exhibits(fam, p)); });
        }
    }
    return {exhibited};
}

std::vector<Tally> verify_one1(const VerifyOptions& o, Rng&)
{
    const auto n = o.n_given ? o.n : 3;
    std::vector<Tally> out;
    auto run = [&](const char* name, One1Flavor flavor) {
        Tally t{name, "disjoint families with 1^(1)"};
        t.attempt([&] { return check_one_n(disjoint_one1_family(n, flavor), 1); });
        out.push_back(t);
    };
    if (o.flavor != "skolem")
        run("one1_atoms", One1Flavor::Atoms);
    if (o.flavor != "atoms")
        run("one1_skolem", One1Flavor::Skolem);
    return out;
}

std::vector<Tally> verify_membership(const VerifyOptions& o, Rng&)
{
    const auto n = o.n_given ? o.n : 3;
    Tally hom{"homomorphism", "membership structures with a homomorphic R"};
    Tally one{"one1", "membership column families with 1^(1)"};
    hom.attempt([&] { return check_membership(membership_structure(n)).ok(); });
    one.attempt([&] { return check_one_n(membership_columns(membership_structure(n)), 1); });
    return {hom, one};
}

std::vector<Tally> verify_blowup(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 4;
    const auto k = o.k_given ? o.k : 2;
    Tally round{"pullback_realizes", "pullbacks realizing the original hypergraph"};
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto h = random_hypergraph(rng, k, std::uniform_int_distribution<std::size_t>(0, n)(rng), 0.5);
        round.attempt([&] {
            auto b = blowup(h);
            auto d = decide_exhibitable(pattern_from_hypergraph(b.hypergraph, b.hypergraph.vertex_count()));
            return d.exhibitable && realize_check(blowup_pullback(*d.witness, h), h);
        });
    }
    return {round};
}

std::vector<Tally> verify_triangle_free(const VerifyOptions& o, Rng& rng)
{
    const auto n = o.n_given ? o.n : 4;
    Tally free{"triangle_free", "doubled graphs without triangles"};
    Tally realizes{"family_realizes", "doubled families realizing the graph"};
    auto run_one = [&](const Graph& g) {
        try {
            auto d = triangle_free_double(g);
            free.record(triangles(d.graph).empty());
            realizes.record(realize_check(d.family, g));
        } catch (const Error& e) {
            free.record(false, e.what());
            realizes.record(false, e.what());
        }
    };
    if (o.exhaustive) {
        for (std::size_t v = 0; v <= n; ++v) {
            const auto pairs = v * (v - (v > 0 ? 1 : 0)) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
                run_one(graph_from_mask(v, mask));
        }
    } else {
        for (std::size_t s = 0; s < o.samples; ++s)
            run_one(random_hypergraph(rng, 2, std::uniform_int_distribution<std::size_t>(0, n)(rng), 0.5));
    }
    return {free, realizes};
}

std::vector<Tally> verify_free_amalgam(const VerifyOptions& o, Rng& rng)
{
    Tally axioms{"axioms", "amalgams satisfying the axioms"};
    Tally commute{"commuting_embeddings", "amalgams with commuting embeddings"};
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto prob = random_amalgamation_problem(rng);
        try {
            auto am = free_amalgam(prob.a, prob.b0, prob.b1, prob.e0, prob.e1);
            axioms.record(static_cast<bool>(check_axioms(am.structure)));
            bool ok = is_embedding(prob.b0, am.structure, am.from_left) &&
                      is_embedding(prob.b1, am.structure, am.from_right);
            for (std::size_t x = 0; ok && x < prob.a.witness_count; ++x)
                ok = am.from_left.witness_map[prob.e0.witness_map[x]] == am.from_right.witness_map[prob.e1.witness_map[x]];
            for (std::size_t x = 0; ok && x < prob.a.parameter_count; ++x)
                ok = am.from_left.parameter_map[prob.e0.parameter_map[x]] ==
                     am.from_right.parameter_map[prob.e1.parameter_map[x]];
            commute.record(ok);
        } catch (const Error& e) {
            axioms.record(false, e.what());
            commute.record(false, e.what());
        }
    }
    return {axioms, commute};
}

std::vector<Tally> verify_cooper(const VerifyOptions& o, Rng&)
{
    const auto n = o.n_given ? o.n : 2;
    Tally disjoint{"pairwise_disjoint", "Cooper witnesses with disjoint singleton sets"};
    Tally unions{"unions_traced", "Cooper witnesses with traced unions"};
    Tally one{"one1", "Cooper witnesses with 1^(1)"};
    try {
        auto p = gen_divline(DivLine::Cooper, {.n = n});
        auto d = decide_exhibitable(p);
        if (!d.exhibitable)
            throw Error(ErrorCode::VerificationFailure, "Cooper pattern is not exhibitable");
        const auto& w = *d.witness;
        bool apart = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                apart = apart && !w[std::size_t{1} << i].intersects(w[std::size_t{1} << j]);
        disjoint.record(apart);
        UnionClosedFamily ufam(w);
        unions.record(ufam.unions_traced());
        one.record(check_one_n(ufam, 1));
    } catch (const Error& e) {
        for (auto* t : {&disjoint, &unions, &one})
            if (t->total == 0)
                t->record(false, e.what());
    }
    return {disjoint, unions, one};
}

const std::map<std::string, std::vector<Tally> (*)(const VerifyOptions&, Rng&)>& verifiers()
{
    static const std::map<std::string, std::vector<Tally> (*)(const VerifyOptions&, Rng&)> table = {
        {"powerset-sm", verify_powerset_sm},   {"atomless-pm", verify_atomless_pm},
        {"pm-char", verify_pm_char},           {"cm-doubling", verify_cm_doubling},
        {"ip-family", verify_ip_family},       {"one1", verify_one1},
        {"membership", verify_membership},     {"blowup-roundtrip", verify_blowup},
        {"triangle-free", verify_triangle_free}, {"free-amalgam", verify_free_amalgam},
        {"cooper-claim", verify_cooper},
    };
    return table;
}

CommandResult run_verify(const std::string& name, const VerifyOptions& o)
{
    Rng rng(o.seed);
    auto tallies = verifiers().at(name)(o, rng);
    Json checks = Json::array();
    bool all = true;
    std::string summary;
    for (const auto& t : tallies) {
        const auto detail = std::to_string(t.passed) + "/" + std::to_string(t.total) + " " + t.noun;
        Json c = {{"name", t.name}, {"passed", t.ok()}, {"detail", detail}};
        if (!t.ok())
            c["first_failure"] = t.first_failure;
        checks.push_back(c);
        all = all && t.ok();
        summary += name + ": " + detail + "\n";
    }
    Json report = {{"construction", name}, {"checks", checks}, {"passed", all}};
    return {all ? 0 : 1, dump_canonical(report), summary};
}

CommandResult run_decide(const std::string& file, bool witness, bool oracle, ValidationMode mode)
{
    auto p = pattern_from_json(read_json_file(file), mode);
    auto d = decide_exhibitable(p);
    Json j;
    std::string diag;
    if (oracle) {
        auto bf = brute_force_exhibitable(p);
        j = to_json(bf);
        const bool agree = bf.exhibitable == d.exhibitable;
        j["oracle_agrees"] = agree;
        if (!agree)
            diag = "oracle and SAT path disagree\n";
        d = std::move(bf);
    } else {
        j = to_json(d);
    }
    if (!witness)
        j.erase("witness");
    diag += d.exhibitable ? "exhibitable\n" : "not exhibitable\n";
    return {d.exhibitable ? 0 : 1, dump_canonical(j), diag};
}

CommandResult run_hypergraph(const std::string& action, const std::string& file)
{
    const auto j = read_json_file(file);
    if (action == "witness-structure") {
        if (j.is_object() && j.contains("n")) {
            auto s = build_witness_structure(pattern_from_json(j));
            return {0, dump_canonical(to_json(s)), "structure from pattern\n"};
        }
        auto s = build_witness_structure(hypergraph_from_json(j));
        return {0, dump_canonical(to_json(s)), "structure from hypergraph\n"};
    }
    const auto h = hypergraph_from_json(j);
    if (action == "pattern")
        return {0, dump_canonical(to_json(pattern_from_hypergraph(h))), ""};
    if (action == "blowup") {
        auto b = blowup(h);
        Json blocks = Json::array();
        for (const auto& block : b.blocks)
            blocks.push_back(to_json(Condition{block, {}})[0]);
        return {0, dump_canonical({{"hypergraph", to_json(b.hypergraph)}, {"blocks", blocks}}), ""};
    }
    auto d = triangle_free_double(h);
    Json cliques = Json::array();
    for (const auto& c : d.cliques)
        cliques.push_back(to_json(Condition{c, {}})[0]);
    Json out = {{"graph", to_json(d.graph)}, {"pairs", d.pairs}, {"cliques", cliques}, {"family", to_json(d.family)}};
    return {0, dump_canonical(out), std::to_string(d.graph.vertex_count()) + " vertices, triangle-free\n"};
}

CommandResult run_amalgam(const std::string& a, const std::string& b0, const std::string& b1, const std::string& maps)
{
    const auto m = read_json_file(maps);
    if (!m.is_object() || !m.contains("e0") || !m.contains("e1"))
        throw Error(ErrorCode::ParseError, maps + ": expected keys \"e0\" and \"e1\"");
    auto am = free_amalgam(witness_structure_from_json(read_json_file(a)), witness_structure_from_json(read_json_file(b0)),
                           witness_structure_from_json(read_json_file(b1)), embedding_from_json(m["e0"]),
                           embedding_from_json(m["e1"]));
    Json out = {{"structure", to_json(am.structure)},
                {"from_left", to_json(am.from_left)},
                {"from_right", to_json(am.from_right)}};
    return {0, dump_canonical(out), ""};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args)
{
    CLI::App app{"Pattern exhibitability toolkit", "patterna"};
    app.require_subcommand(1);

    std::string file;
    bool lenient = false;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a pattern");
    classify_cmd->add_option("file", file, "pattern JSON")->required();
    classify_cmd->add_flag("--lenient", lenient, "deduplicate repeated conditions");

    std::string kind;
    DivLineParams params;
    auto* generate_cmd = app.add_subcommand("generate", "Generate a dividing-line pattern");
    generate_cmd->add_option("kind", kind, "op|ip|sop|ktp|tp1|ktp2|cm|cooper|pmchar")->required();
    generate_cmd->add_option("--n", params.n, "index count");
    generate_cmd->add_option("--b", params.branching, "tree branching / row width");
    generate_cmd->add_option("--d", params.depth, "tree depth / row count");
    generate_cmd->add_option("--k", params.k, "inconsistency size");

    bool witness = false;
    bool oracle = false;
    auto* decide_cmd = app.add_subcommand("decide", "Decide exhibitability");
    decide_cmd->add_option("file", file, "pattern JSON")->required();
    decide_cmd->add_flag("--witness", witness, "include the witness family");
    decide_cmd->add_flag("--oracle", oracle, "use the brute-force path and compare with SAT");
    decide_cmd->add_flag("--lenient", lenient, "deduplicate repeated conditions");

    std::optional<std::size_t> condition;
    bool sentinel = false;
    auto* dimacs_cmd = app.add_subcommand("dimacs", "Export one condition's CNF in DIMACS form");
    dimacs_cmd->add_option("file", file, "pattern JSON")->required();
    auto* cond_opt = dimacs_cmd->add_option("--condition", condition, "position in the consistency list");
    auto* sentinel_opt = dimacs_cmd->add_flag("--sentinel", sentinel, "the formula without unit clauses");
    cond_opt->excludes(sentinel_opt);

    std::string action;
    auto* hyper_cmd = app.add_subcommand("hypergraph", "Hypergraph transforms");
    hyper_cmd->add_option("action", action, "pattern|blowup|double|witness-structure")
        ->required()
        ->check(CLI::IsMember({"pattern", "blowup", "double", "witness-structure"}));
    hyper_cmd->add_option("file", file, "hypergraph (or pattern) JSON")->required();

    std::string name;
    VerifyOptions vo;
    auto* verify_cmd = app.add_subcommand("verify", "Self-check a construction");
    std::vector<std::string> names;
    for (const auto& [key, fn] : verifiers())
        names.push_back(key);
    verify_cmd->add_option("name", name, "construction")->required()->check(CLI::IsMember(names));
    auto* n_opt = verify_cmd->add_option("--n", vo.n, "size parameter");
    auto* k_opt = verify_cmd->add_option("--k", vo.k, "arity / condition bound");
    verify_cmd->add_option("--samples", vo.samples, "random instances")->capture_default_str();
    verify_cmd->add_option("--seed", vo.seed, "random seed")->capture_default_str();
    verify_cmd->add_flag("--exhaustive", vo.exhaustive, "enumerate every instance");
    verify_cmd->add_option("--flavor", vo.flavor, "atoms|skolem|both")
        ->check(CLI::IsMember({"atoms", "skolem", "both"}));

    std::string a_file, b0_file, b1_file, maps_file;
    auto* amalgam_cmd = app.add_subcommand("amalgam", "Free amalgam of two witness structures");
    amalgam_cmd->add_option("A", a_file)->required();
    amalgam_cmd->add_option("B0", b0_file)->required();
    amalgam_cmd->add_option("B1", b1_file)->required();
    amalgam_cmd->add_option("maps", maps_file, "{\"e0\": embedding, \"e1\": embedding}")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    const auto mode = lenient ? ValidationMode::Lenient : ValidationMode::Strict;
    try {
        if (classify_cmd->parsed()) {
            auto flags = classify(pattern_from_json(read_json_file(file), mode));
            return {0, dump_canonical(to_json(flags)), ""};
        }
        if (generate_cmd->parsed()) {
            auto k = parse_divline(kind);
            if (!k)
                return {2, "", "unknown pattern kind: " + kind + "\n"};
            return {0, dump_canonical(to_json(gen_divline(*k, params))), ""};
        }
        if (decide_cmd->parsed())
            return run_decide(file, witness, oracle, mode);
        if (dimacs_cmd->parsed()) {
            auto p = pattern_from_json(read_json_file(file));
            if (sentinel)
                return {0, export_dimacs(sentinel_cnf(p)), ""};
            if (!condition)
                return {2, "", "dimacs: give --condition <index> or --sentinel\n"};
            if (*condition >= p.consistency().size())
                return {2, "", "dimacs: condition " + std::to_string(*condition) + " out of range\n"};
            return {0, export_dimacs(condition_cnf(p, p.consistency()[*condition])), ""};
        }
        if (hyper_cmd->parsed())
            return run_hypergraph(action, file);
        if (verify_cmd->parsed()) {
            vo.n_given = n_opt->count() > 0;
            vo.k_given = k_opt->count() > 0;
            return run_verify(name, vo);
        }
        return run_amalgam(a_file, b0_file, b1_file, maps_file);
    } catch (const Error& e) {
        return {2, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace patterna::cli
