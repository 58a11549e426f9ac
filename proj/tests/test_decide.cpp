#include "support.hpp"

#include "patterna/decide.hpp"
#include "patterna/sampling.hpp"

using namespace patterna;
using namespace testing_support;

namespace {

const Pattern contradiction = pattern(1, {}, {cond({0}), cond({}, {0})});
const Pattern three_var = pattern(3, {cond({0}), cond({1})},
                                 {cond({0, 1}), cond({0}, {2}), cond({1}, {2}), cond({2}, {0, 1})});

}  // namespace

TEST_SUITE("decide")
{
    TEST_CASE("cnf normalization")
    {
        CnfFormula f(3, {{pos_lit(2), pos_lit(0), pos_lit(2)}, {pos_lit(1), neg_lit(1)}, {pos_lit(0), pos_lit(2)}});
        REQUIRE(f.clauses().size() == 1);
        CHECK(f.clauses()[0] == Clause{pos_lit(0), pos_lit(2)});
        CHECK_ERROR_CODE(CnfFormula(1, {{pos_lit(1)}}), ErrorCode::InvalidInput);
        CHECK(CnfFormula(1, {{}}).has_empty_clause());
    }

    TEST_CASE("sat_solve examples")
    {
        auto a = sat_solve(CnfFormula(2, {{pos_lit(0), pos_lit(1)}, {neg_lit(0)}}));
        REQUIRE(a.has_value());
        CHECK(*a == Assignment{false, true});
        CHECK_FALSE(sat_solve(CnfFormula(1, {{pos_lit(0)}, {neg_lit(0)}})).has_value());
        CHECK(sat_solve(CnfFormula(3, {})) == std::optional<Assignment>(Assignment{true, true, true}));
        CHECK_FALSE(sat_solve(CnfFormula(2, {{}})).has_value());
    }

    TEST_CASE("sat_solve agrees with truth tables")
    {
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 1000; ++t) {
            auto f = random_3cnf(rng, 8, 40);
            auto a = sat_solve(f);
            CHECK(a.has_value() == truth_table_sat(f));
            if (a)
                CHECK(satisfies(f, *a));
        }
    }

    TEST_CASE("sat_solve is deterministic")
    {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 50; ++t) {
            auto f = random_3cnf(rng, 10, 30);
            CHECK(sat_solve(f) == sat_solve(f));
        }
    }

    TEST_CASE("condition_cnf and sentinel_cnf")
    {
        auto s = sentinel_cnf(contradiction);
        CHECK(s.clauses().size() == 2);
        CHECK_FALSE(sat_solve(s).has_value());

        auto p = pattern(2, {cond({0})}, {cond({0, 1})});
        auto f = condition_cnf(p, cond({0}));
        CHECK(f == CnfFormula(2, {{pos_lit(0)}, {neg_lit(0), neg_lit(1)}}));
        CHECK(sat_solve(f) == std::optional<Assignment>(Assignment{true, false}));

        auto units = condition_cnf(pattern(2, {cond({0}, {1})}), cond({0}, {1}));
        CHECK(units.clauses().size() == 2);
        CHECK(sat_solve(units).has_value());
    }

    TEST_CASE("a condition and its negation cannot both be avoided")
    {
        auto d = decide_exhibitable(contradiction);
        CHECK_FALSE(d.exhibitable);
        CHECK_FALSE(d.witness.has_value());
        REQUIRE(d.failing.has_value());
        CHECK(std::holds_alternative<EmptyUniverse>(*d.failing));
        CHECK_FALSE(brute_force_exhibitable(contradiction).exhibitable);
    }

    TEST_CASE("three-variable mixed pattern is exhibitable")
    {
        auto d = decide_exhibitable(three_var);
        REQUIRE(d.exhibitable);
        CHECK(check_exhibits(*d.witness, three_var));
        CHECK_FALSE(d.failing.has_value());
    }

    TEST_CASE("a fully complete pattern is exhibitable")
    {
        auto p = pattern(2, {cond({}, {0, 1}), cond({0, 1})}, {cond({0}, {1}), cond({1}, {0})});
        auto d = decide_exhibitable(p);
        REQUIRE(d.exhibitable);
        CHECK(d.witness->universe_size() == 2);
        CHECK(check_exhibits(*d.witness, p));
    }

    TEST_CASE("the failing condition is the first unsatisfiable one")
    {
        auto p = pattern(2, {cond({0}), cond({1})}, {cond({1})});
        auto d = decide_exhibitable(p);
        CHECK_FALSE(d.exhibitable);
        REQUIRE(d.failing.has_value());
        CHECK(std::get<Condition>(*d.failing) == cond({1}));
        auto bf = brute_force_exhibitable(p);
        CHECK(std::get<Condition>(*bf.failing) == cond({1}));
    }

    TEST_CASE("witness universe is the deduplicated chosen types")
    {
        auto p = pattern(2, {cond({0}), cond({0}, {1})}, {cond({1})});
        auto d = decide_exhibitable(p);
        REQUIRE(d.exhibitable);
        CHECK(d.witness->universe_size() == 1);
        CHECK(d.witness->sets() == std::vector<IndexSet>{{0}, {}});
    }

    TEST_CASE("brute force examples")
    {
        auto from_cnf = pattern_from_cnf(CnfFormula(2, {{pos_lit(0), pos_lit(1)}}));
        CHECK(brute_force_exhibitable(from_cnf).exhibitable);
        CHECK(decide_exhibitable(from_cnf).exhibitable);
        auto empty = brute_force_exhibitable(pattern(2, {}));
        REQUIRE(empty.exhibitable);
        CHECK(empty.witness->universe_size() == 1);
        CHECK(empty.witness->sets() == std::vector<IndexSet>{{}, {}});
        CHECK_ERROR_CODE(brute_force_exhibitable(pattern(3, {cond({0})}), 2), ErrorCode::BoundExceeded);
    }

    TEST_CASE("decide agrees with brute force on random patterns")
    {
        Rng rng(99);
        for (int t = 0; t < 2000; ++t) {
            auto p = random_pattern(rng, 1 + rng() % 5, 8);
            auto d = decide_exhibitable(p);
            auto b = brute_force_exhibitable(p);
            CHECK(d.exhibitable == b.exhibitable);
            if (d.exhibitable)
                CHECK(exhibits_by_definition(*d.witness, p));
        }
    }

    TEST_CASE("monotonicity: dropping a condition keeps exhibitability")
    {
        Rng rng(41);
        for (int t = 0; t < 300; ++t) {
            auto p = random_pattern(rng, 1 + rng() % 4, 6);
            if (!decide_exhibitable(p).exhibitable)
                continue;
            for (std::size_t drop = 0; drop < p.consistency().size(); ++drop) {
                auto c = p.consistency();
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(drop));
                CHECK(decide_exhibitable(Pattern::make(p.n(), c, p.inconsistency())).exhibitable);
            }
            for (std::size_t drop = 0; drop < p.inconsistency().size(); ++drop) {
                auto i = p.inconsistency();
                i.erase(i.begin() + static_cast<std::ptrdiff_t>(drop));
                CHECK(decide_exhibitable(Pattern::make(p.n(), p.consistency(), i)).exhibitable);
            }
        }
    }

    TEST_CASE("CNF reduction: exhibitable iff satisfiable")
    {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 300; ++t) {
            auto f = random_3cnf(rng, 8, 40);
            CHECK(decide_exhibitable(pattern_from_cnf(f)).exhibitable == truth_table_sat(f));
        }
        CHECK_FALSE(decide_exhibitable(pattern_from_cnf(CnfFormula(1, {{}}))).exhibitable);
    }

    TEST_CASE("DIMACS export")
    {
        CnfFormula f(1, {{pos_lit(0)}, {neg_lit(0)}});
        CHECK(export_dimacs(f) == "p cnf 1 2\n1 0\n-1 0\n");
        CHECK(export_dimacs(CnfFormula(2, {})) == "p cnf 2 0\n");
    }

    TEST_CASE("DIMACS round trip")
    {
        Rng rng(8);
        for (int t = 0; t < 200; ++t) {
            auto p = random_pattern(rng, 1 + rng() % 5, 8);
            for (const auto& c : p.consistency()) {
                auto f = condition_cnf(p, c);
                CHECK(import_dimacs(export_dimacs(f)) == f);
            }
            auto s = sentinel_cnf(p);
            CHECK(import_dimacs(export_dimacs(s)) == s);
        }
    }

    TEST_CASE("DIMACS import accepts comments and multi-line clauses")
    {
        auto f = import_dimacs("c a comment\np cnf 3 2\n1 -2\n 0\n3 0\n");
        CHECK(f == CnfFormula(3, {{pos_lit(0), neg_lit(1)}, {pos_lit(2)}}));
    }

    TEST_CASE("DIMACS import errors carry line numbers")
    {
        auto message = [](const char* text) {
            try {
                (void)import_dimacs(text);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::ParseError);
                return std::string(e.what());
            }
            return std::string("no error");
        };
        CHECK(message("p cnf x 1\n1 0\n").find("line 1") != std::string::npos);
        CHECK(message("p cnf 1 1\n2 0\n").find("line 2") != std::string::npos);
        CHECK(message("1 0\n").find("line 1") != std::string::npos);
        CHECK(message("p cnf 1 1\n1\n") != "no error");
        CHECK(message("p cnf 1 2\n1 0\n") != "no error");
        CHECK(message("p cnf 1 1\n1 a 0\n").find("line 2") != std::string::npos);
    }
}
