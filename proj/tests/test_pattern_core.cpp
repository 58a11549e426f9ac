#include "support.hpp"

#include "patterna/pattern.hpp"

using namespace patterna;
using namespace testing_support;

TEST_SUITE("pattern-core")
{
    TEST_CASE("index sets keep sorted unique members")
    {
        IndexSet s{3, 1, 3, 0};
        CHECK(s.size() == 3);
        CHECK(s == IndexSet{0, 1, 3});
        CHECK(s.to_mask() == 0b1011);
        CHECK(IndexSet::from_mask(0b1011) == s);
        CHECK(s.complement(5) == IndexSet{2, 4});
        CHECK(s.shifted(2) == IndexSet{2, 3, 5});
        CHECK(s.minus({1}) == IndexSet{0, 3});
        CHECK(s.bound() == 4);
        CHECK_ERROR_CODE(IndexSet{64}.to_mask(), ErrorCode::BoundExceeded);
    }

    TEST_CASE("validation accepts a minimal pattern and normalizes order")
    {
        RawPattern raw{2, {{{1}, {}}, {{0}, {}}}, {}};
        auto p = validate_pattern(raw);
        CHECK(p.n() == 2);
        REQUIRE(p.consistency().size() == 2);
        CHECK(p.consistency()[0] == cond({0}));
        CHECK(p.consistency()[1] == cond({1}));
        CHECK(validate_pattern(RawPattern{2, {{{0}, {}}}, {}}).consistency().size() == 1);
    }

    TEST_CASE("validation errors")
    {
        CHECK_ERROR_CODE(validate_pattern(RawPattern{1, {{{}, {}}}, {}}), ErrorCode::EmptyCondition);
        CHECK_ERROR_CODE(validate_pattern(RawPattern{1, {{{1}, {}}}, {}}), ErrorCode::IndexOutOfRange);
        CHECK_ERROR_CODE(validate_pattern(RawPattern{1, {{{-1}, {}}}, {}}), ErrorCode::IndexOutOfRange);
        RawPattern dup{2, {{{0}, {}}, {{0}, {}}}, {}};
        CHECK_ERROR_CODE(validate_pattern(dup), ErrorCode::DuplicateCondition);
        CHECK(validate_pattern(dup, ValidationMode::Lenient).consistency().size() == 1);
    }

    TEST_CASE("validation is idempotent")
    {
        auto p = validate_pattern(RawPattern{3, {{{2, 1}, {0}}, {{0}, {}}}, {{{1}, {2}}}});
        CHECK(Pattern::make(p.n(), p.consistency(), p.inconsistency()) == p);
    }

    TEST_CASE("classify: SOP 3-pattern is reasonable but not positive")
    {
        auto p = pattern(3, {cond({1}, {0}), cond({2}, {1})}, {cond({0}, {1}), cond({1}, {2})});
        auto f = classify(p);
        CHECK(f.reasonable);
        CHECK_FALSE(f.positive);
        CHECK_FALSE(f.complete);
    }

    TEST_CASE("classify: inconsistency contained in a consistency condition is unreasonable")
    {
        auto f = classify(pattern(2, {cond({0, 1})}, {cond({0})}));
        CHECK_FALSE(f.reasonable);
        CHECK(f.positive);
        CHECK(f.k_bounded == std::optional<std::size_t>(1));
    }

    TEST_CASE("classify: all four complete splits in C is fully complete")
    {
        auto f = classify(pattern(2, {cond({0}, {1}), cond({1}, {0}), cond({0, 1}), cond({}, {0, 1})}));
        CHECK(f.complete);
        CHECK(f.fully_complete);
        CHECK(f.reasonable);
    }

    TEST_CASE("classify: overlapping parts are unreasonable")
    {
        CHECK_FALSE(classify(pattern(2, {cond({0}, {0})})).reasonable);
        CHECK_FALSE(classify(pattern(2, {}, {cond({1}, {1})})).reasonable);
    }

    TEST_CASE("classify: empty pattern")
    {
        auto f = classify(pattern(3, {}));
        CHECK(f.reasonable);
        CHECK(f.positive);
        CHECK_FALSE(f.complete);
        CHECK_FALSE(f.fully_complete);
        CHECK_FALSE(f.k_bounded.has_value());
        CHECK(f.bounded_by(2));
    }

    TEST_CASE("classify: k-bounded needs one common size")
    {
        auto uniform = classify(pattern(3, {cond({0})}, {cond({1, 2}), cond({0, 2})}));
        CHECK(uniform.k_bounded == std::optional<std::size_t>(2));
        CHECK(uniform.bounded_by(2));
        CHECK_FALSE(uniform.bounded_by(3));
        auto mixed = classify(pattern(3, {}, {cond({1, 2}), cond({0})}));
        CHECK_FALSE(mixed.k_bounded.has_value());
        CHECK(mixed.max_inconsistency_size == std::optional<std::size_t>(2));
        auto negative = classify(pattern(2, {}, {cond({}, {1})}));
        CHECK_FALSE(negative.k_bounded.has_value());
        CHECK_FALSE(negative.max_inconsistency_size.has_value());
    }

    TEST_CASE("classify: fully complete requires C nonempty and a partition")
    {
        auto all_in_i = pattern(1, {}, {cond({0}), cond({}, {0})});
        CHECK_FALSE(classify(all_in_i).fully_complete);
        CHECK(classify(all_in_i).complete);
        auto missing = pattern(1, {cond({0})});
        CHECK_FALSE(classify(missing).fully_complete);
        auto both = pattern(1, {cond({0}), cond({}, {0})}, {cond({0})});
        CHECK_FALSE(classify(both).fully_complete);
    }

    TEST_CASE("generator: OP")
    {
        auto p = gen_divline(DivLine::OP, {.n = 2});
        CHECK(p == pattern(2, {cond({0, 1}), cond({1}, {0})}));
        CHECK(gen_divline(DivLine::OP, {.n = 3}).consistency().size() == 3);
    }

    TEST_CASE("generator: IP and CM")
    {
        auto ip = gen_divline(DivLine::IP, {.n = 2});
        CHECK(ip.consistency().size() == 4);
        CHECK(ip.inconsistency().empty());
        CHECK(classify(ip).fully_complete);
        CHECK(gen_divline(DivLine::CM, {.n = 3}) == gen_divline(DivLine::IP, {.n = 3}));
    }

    TEST_CASE("generator: SOP")
    {
        auto p = gen_divline(DivLine::SOP, {.n = 3});
        CHECK(p == pattern(3, {cond({1}, {0}), cond({2}, {1})}, {cond({0}, {1}), cond({1}, {2})}));
    }

    TEST_CASE("generator: kTP on the binary tree of depth 2")
    {
        auto p = gen_divline(DivLine::kTP, {.branching = 2, .depth = 2, .k = 2});
        CHECK(p == pattern(7, {cond({0, 1, 3}), cond({0, 1, 4}), cond({0, 2, 5}), cond({0, 2, 6})},
                           {cond({1, 2}), cond({3, 4}), cond({5, 6})}));
        CHECK_ERROR_CODE(gen_divline(DivLine::kTP, {.branching = 2, .depth = 2, .k = 3}),
                         ErrorCode::UnsupportedParams);
        CHECK_ERROR_CODE(gen_divline(DivLine::kTP, {.branching = 2, .depth = 2, .k = 1}),
                         ErrorCode::UnsupportedParams);
    }

    TEST_CASE("generator: TP1 forbids incomparable pairs")
    {
        auto p = gen_divline(DivLine::TP1, {.branching = 2, .depth = 1});
        CHECK(p == pattern(3, {cond({0, 1}), cond({0, 2})}, {cond({1, 2})}));
        auto deeper = gen_divline(DivLine::TP1, {.branching = 2, .depth = 2});
        CHECK(deeper.consistency().size() == 4);
        // incomparable pairs among 7 nodes: {1,2}, 1 vs 5,6, 2 vs 3,4, and 4 pairs between subtrees + 2 sibling pairs
        CHECK(deeper.inconsistency().size() == 1 + 2 + 2 + 4 + 2);
    }

    TEST_CASE("generator: kTP2 rows")
    {
        auto p = gen_divline(DivLine::kTP2, {.branching = 2, .depth = 2, .k = 2});
        CHECK(p == pattern(4, {cond({0, 2}), cond({0, 3}), cond({1, 2}), cond({1, 3})}, {cond({0, 1}), cond({2, 3})}));
    }

    TEST_CASE("generator: Cooper n=1 is the fully complete upward-closure pattern")
    {
        auto p = gen_divline(DivLine::Cooper, {.n = 1});
        CHECK(p == pattern(2, {cond({1}, {0})}, {cond({}, {0, 1}), cond({0}, {1}), cond({0, 1})}));
        CHECK(classify(p).fully_complete);
        auto p2 = gen_divline(DivLine::Cooper, {.n = 2});
        CHECK(p2.n() == 4);
        // ↑{0} = {{0},{0,1}} ↦ {1,3}; ↑{1} = {{1},{0,1}} ↦ {2,3}
        CHECK(p2.consistency() == std::vector<Condition>{cond({1, 3}, {0, 2}), cond({2, 3}, {0, 1})});
        CHECK(p2.inconsistency().size() == 14);
    }

    TEST_CASE("generator: PMchar")
    {
        auto p = gen_divline(DivLine::PMchar, {.n = 1});
        CHECK(p == pattern(2, {cond({1})}, {cond({0}), cond({0, 1})}));
        auto f = classify(gen_divline(DivLine::PMchar, {.n = 2}));
        CHECK(f.reasonable);
        CHECK(f.positive);
    }

    TEST_CASE("every generated family is reasonable")
    {
        for (std::size_t n = 0; n <= 4; ++n) {
            for (auto kind : {DivLine::OP, DivLine::IP, DivLine::SOP, DivLine::CM, DivLine::PMchar}) {
                CAPTURE(n);
                CHECK(classify(gen_divline(kind, {.n = n})).reasonable);
            }
            if (n >= 1)
                CHECK(classify(gen_divline(DivLine::Cooper, {.n = n})).reasonable);
        }
        for (std::size_t b = 1; b <= 3; ++b)
            for (std::size_t d = 0; d <= 3; ++d) {
                CAPTURE(b);
                CAPTURE(d);
                auto tp1 = classify(gen_divline(DivLine::TP1, {.branching = b, .depth = d}));
                CHECK(tp1.reasonable);
                CHECK(tp1.positive);
                for (std::size_t k = 2; k <= b; ++k) {
                    auto ktp = classify(gen_divline(DivLine::kTP, {.branching = b, .depth = d, .k = k}));
                    CHECK(ktp.reasonable);
                    CHECK(ktp.positive);
                    if (d >= 1) {
                        auto ktp2 = classify(gen_divline(DivLine::kTP2, {.branching = b, .depth = d, .k = k}));
                        CHECK(ktp2.reasonable);
                        CHECK(ktp2.positive);
                    }
                }
            }
    }

    TEST_CASE("divline names round trip")
    {
        for (auto kind : {DivLine::OP, DivLine::IP, DivLine::SOP, DivLine::kTP, DivLine::TP1, DivLine::kTP2,
                          DivLine::CM, DivLine::Cooper, DivLine::PMchar})
            CHECK(parse_divline(to_string(kind)) == kind);
        CHECK_FALSE(parse_divline("nip").has_value());
    }

    TEST_CASE("pattern_from_cnf: contradictory units")
    {
        CnfFormula f(1, {{pos_lit(0)}, {neg_lit(0)}});
        auto p = pattern_from_cnf(f);
        CHECK(p == pattern(2, {cond({1})}, {cond({}, {0}), cond({0})}));
        CHECK(classify(p).reasonable);
    }

    TEST_CASE("pattern_from_cnf: a single binary clause")
    {
        auto p = pattern_from_cnf(CnfFormula(2, {{pos_lit(0), pos_lit(1)}}));
        CHECK(p == pattern(3, {cond({2})}, {cond({}, {0, 1})}));
    }

    TEST_CASE("pattern_from_cnf: no clauses and an empty clause")
    {
        CHECK(pattern_from_cnf(CnfFormula(0, {})) == pattern(1, {cond({0})}));
        auto bad = pattern_from_cnf(CnfFormula(1, {{}}));
        CHECK_FALSE(classify(bad).reasonable);
    }

    TEST_CASE("pattern_from_cnf is reasonable for random formulas")
    {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 200; ++t)
            CHECK(classify(pattern_from_cnf(random_3cnf(rng, 6, 10))).reasonable);
    }

    TEST_CASE("double_positive examples")
    {
        CHECK(double_positive(pattern(2, {cond({0}, {1})})) ==
              pattern(4, {cond({0, 3})}, {cond({0, 2}), cond({1, 3})}));
        CHECK(double_positive(pattern(1, {cond({0})})) == pattern(2, {cond({0})}, {cond({0, 1})}));
        CHECK(double_positive(pattern(2, {cond({0}, {1}), cond({1}, {0})})) ==
              pattern(4, {cond({0, 3}), cond({1, 2})}, {cond({0, 2}), cond({1, 3})}));
        CHECK_ERROR_CODE(double_positive(pattern(1, {cond({0})}, {cond({}, {0})})), ErrorCode::NotConsistencyPattern);
        CHECK_ERROR_CODE(double_positive(pattern(1, {cond({0}, {0})})), ErrorCode::NotConsistencyPattern);
    }
}
