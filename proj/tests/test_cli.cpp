#include "support.hpp"

#include "patterna/cli.hpp"
#include "patterna/json_io.hpp"

using namespace patterna;

namespace {

std::string data(const std::string& name)
{
    return std::string(PATTERNA_TEST_DATA) + "/" + name;
}

cli::CommandResult run(std::vector<std::string> args)
{
    return cli::run(args);
}

Json payload(const cli::CommandResult& r)
{
    return Json::parse(r.payload);
}

}  // namespace

TEST_SUITE("cli")
{
    TEST_CASE("classify prints flags")
    {
        auto r = run({"classify", data("sop3.json")});
        CHECK(r.exit_code == 0);
        auto j = payload(r);
        CHECK(j["reasonable"] == true);
        CHECK(j["positive"] == false);
        CHECK(j["k_bounded"].is_null());
    }

    TEST_CASE("strict and lenient validation")
    {
        auto strict = run({"classify", data("duplicate.json")});
        CHECK(strict.exit_code == 2);
        CHECK(strict.diagnostics.find("DuplicateCondition") != std::string::npos);
        CHECK(run({"classify", "--lenient", data("duplicate.json")}).exit_code == 0);
    }

    TEST_CASE("generate ip")
    {
        auto r = run({"generate", "ip", "--n", "2"});
        CHECK(r.exit_code == 0);
        CHECK(r.payload ==
              "{\"consistency\":[[[],[0,1]],[[0],[1]],[[0,1],[]],[[1],[0]]],\"inconsistency\":[],\"n\":2}\n");
        CHECK(run({"generate", "ktp", "--b", "2", "--d", "2", "--k", "2"}).exit_code == 0);
        CHECK(run({"generate", "nip", "--n", "2"}).exit_code == 2);
        CHECK(run({"generate", "ktp", "--b", "2", "--d", "2", "--k", "5"}).exit_code == 2);
    }

    TEST_CASE("decide exit codes and payloads")
    {
        auto no = run({"decide", data("contradiction.json")});
        CHECK(no.exit_code == 1);
        CHECK(payload(no)["exhibitable"] == false);
        CHECK(payload(no)["failing"] == "empty_universe");

        auto yes = run({"decide", data("three_var.json")});
        CHECK(yes.exit_code == 0);
        CHECK_FALSE(payload(yes).contains("witness"));

        auto with_witness = run({"decide", "--witness", data("three_var.json")});
        auto fam = set_family_from_json(payload(with_witness)["witness"]);
        CHECK(check_exhibits(fam, pattern_from_json(Json::parse(R"({"n": 3, "consistency": [[[0], []], [[1], []]],
            "inconsistency": [[[0, 1], []], [[0], [2]], [[1], [2]], [[2], [0, 1]]]})"))));

        auto oracle = run({"decide", "--oracle", data("three_var.json")});
        CHECK(oracle.exit_code == 0);
        CHECK(payload(oracle)["oracle_agrees"] == true);
        CHECK(payload(run({"decide", "--oracle", data("contradiction.json")}))["oracle_agrees"] == true);
    }

    TEST_CASE("dimacs export")
    {
        auto r = run({"dimacs", data("contradiction.json"), "--sentinel"});
        CHECK(r.exit_code == 0);
        CHECK(r.payload == "p cnf 1 2\n1 0\n-1 0\n");
        auto c = run({"dimacs", data("positive.json"), "--condition", "0"});
        CHECK(c.exit_code == 0);
        CHECK(c.payload == "p cnf 3 3\n1 0\n2 0\n-2 -3 0\n");
        CHECK(run({"dimacs", data("positive.json"), "--condition", "1"}).exit_code == 2);
        CHECK(run({"dimacs", data("positive.json")}).exit_code == 2);
    }

    TEST_CASE("hypergraph subcommands")
    {
        auto p = run({"hypergraph", "pattern", data("path.json")});
        CHECK(p.exit_code == 0);
        CHECK(payload(p)["inconsistency"] == Json::parse("[[[0,2],[]]]"));

        auto b = run({"hypergraph", "blowup", data("path.json")});
        CHECK(b.exit_code == 0);
        CHECK(payload(b)["hypergraph"]["k"] == 3);
        CHECK(payload(b)["blocks"].size() == 3);

        auto d = run({"hypergraph", "double", data("path.json")});
        CHECK(d.exit_code == 0);
        CHECK(payload(d)["graph"]["vertices"] == 6 + 5);

        auto s = run({"hypergraph", "witness-structure", data("positive.json")});
        CHECK(s.exit_code == 0);
        CHECK(payload(s)["hyperedges"] == Json::parse("[[1,2]]"));
        auto sh = run({"hypergraph", "witness-structure", data("hyper3.json")});
        CHECK(sh.exit_code == 0);
        CHECK(payload(sh)["flavor"] == "uniform");
        CHECK(payload(sh)["arity"] == 3);

        CHECK(run({"hypergraph", "explode", data("path.json")}).exit_code == 2);
    }

    TEST_CASE("verify powerset-sm exhaustively")
    {
        auto r = run({"verify", "powerset-sm", "--n", "2", "--exhaustive"});
        CHECK(r.exit_code == 0);
        auto j = payload(r);
        CHECK(j["passed"] == true);
        CHECK(j["checks"][0]["detail"] == "15/15 fully complete patterns exhibited");
    }

    TEST_CASE("every construction verifies with defaults")
    {
        for (const char* name : {"powerset-sm", "atomless-pm", "pm-char", "cm-doubling", "ip-family", "one1",
                                 "membership", "blowup-roundtrip", "triangle-free", "free-amalgam", "cooper-claim"}) {
            CAPTURE(name);
            auto r = run({"verify", name, "--samples", "20"});
            CHECK(r.exit_code == 0);
            CHECK(payload(r)["passed"] == true);
        }
        CHECK(run({"verify", "nonsense"}).exit_code == 2);
        CHECK(run({"verify", "pm-char", "--k", "5"}).exit_code == 2);
    }

    TEST_CASE("amalgam")
    {
        auto r = run({"amalgam", data("struct_a.json"), data("struct_b0.json"), data("struct_b1.json"),
                      data("maps.json")});
        CHECK(r.exit_code == 0);
        auto s = witness_structure_from_json(payload(r)["structure"]);
        CHECK(s.parameter_count == 4);
        CHECK(check_axioms(s));
        auto bad = run({"amalgam", data("struct_a.json"), data("struct_b0.json"), data("struct_b1.json"),
                        data("bad_maps.json")});
        CHECK(bad.exit_code == 2);
        CHECK(bad.diagnostics.find("NotAnEmbedding") != std::string::npos);
    }

    TEST_CASE("usage and input errors exit 2")
    {
        CHECK(run({}).exit_code == 2);
        CHECK(run({"frobnicate"}).exit_code == 2);
        CHECK(run({"decide"}).exit_code == 2);
        CHECK(run({"decide", data("missing.json")}).exit_code == 2);
        auto parse = run({"decide", data("truncated.json")});
        CHECK(parse.exit_code == 2);
        CHECK(parse.diagnostics.find("ParseError") != std::string::npos);
        CHECK(run({"--help"}).exit_code == 0);
    }

    TEST_CASE("outputs are byte-identical across runs")
    {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"decide", "--witness", data("three_var.json")},
                 {"verify", "free-amalgam", "--samples", "30"},
                 {"hypergraph", "double", data("path.json")}}) {
            auto first = run(args).payload;
            CHECK(run(args).payload == first);
        }
    }

    TEST_CASE("json round trips")
    {
        auto s = witness_structure_from_json(Json::parse(
            R"({"flavor":"uniform","arity":2,"witnesses":2,"parameters":[0,1,2],"r":[[0,0],[1,2]],"hyperedges":[[0,1]]})"));
        CHECK(s.witness_count == 2);
        CHECK(witness_structure_from_json(to_json(s)) == s);
        auto h = hypergraph_from_json(Json::parse(R"({"k":2,"vertices":3,"edges":[[1,0]]})"));
        CHECK(hypergraph_from_json(to_json(h)) == h);
        CHECK_ERROR_CODE(hypergraph_from_json(Json::parse(R"({"k":2,"vertices":3,"edges":[[1,1]]})")),
                         ErrorCode::InvalidInput);
        CHECK_ERROR_CODE(set_family_from_json(Json::parse(R"({"universe":2})")), ErrorCode::ParseError);
        CHECK_ERROR_CODE(pattern_from_json(Json::parse(R"({"n":"two","consistency":[],"inconsistency":[]})")),
                         ErrorCode::ParseError);
        CHECK_ERROR_CODE(witness_structure_from_json(Json::parse(
                             R"({"flavor":"mixed","witnesses":0,"parameters":0,"r":[],"hyperedges":[]})")),
                         ErrorCode::ParseError);
    }
}
