#include "support.hpp"

#include "patterna/constructions.hpp"
#include "patterna/decide.hpp"
#include "patterna/sampling.hpp"

using namespace patterna;
using namespace testing_support;

namespace {

const Pattern three_var = pattern(3, {cond({0}), cond({1})},
                                 {cond({0, 1}), cond({0}, {2}), cond({1}, {2}), cond({2}, {0, 1})});

}  // namespace

TEST_SUITE("semantics")
{
    TEST_CASE("set family invariants")
    {
        CHECK_ERROR_CODE(family(0, {}), ErrorCode::InvalidInput);
        CHECK_ERROR_CODE(family(2, {{0, 2}}), ErrorCode::IndexOutOfRange);
        CHECK(family(1, {}).size() == 0);
    }

    TEST_CASE("condition traces")
    {
        auto fam = family(2, {{0}, {1}});
        CHECK(condition_trace(fam, cond({0}, {1})) == IndexSet{0});
        CHECK(condition_trace(fam, cond({0, 1})).empty());
        CHECK(condition_trace(family(2, {{0, 1}}), cond({}, {0})).empty());
        CHECK_ERROR_CODE(condition_trace(fam, cond({2})), ErrorCode::IndexOutOfRange);
    }

    TEST_CASE("traces compose by intersection")
    {
        Rng rng(3);
        for (int t = 0; t < 100; ++t) {
            std::vector<IndexSet> sets;
            for (int i = 0; i < 4; ++i)
                sets.push_back(IndexSet::from_mask(rng() & 0x3F));
            auto fam = family(6, sets);
            Condition a{IndexSet::from_mask(rng() & 0xF), IndexSet::from_mask(rng() & 0xF)};
            Condition b{IndexSet::from_mask(rng() & 0xF), IndexSet::from_mask(rng() & 0xF)};
            if ((a.pos.empty() && a.neg.empty()) || (b.pos.empty() && b.neg.empty()))
                continue;
            Condition joined{a.pos.united(b.pos), a.neg.united(b.neg)};
            CHECK(condition_trace(fam, joined) == condition_trace(fam, a).intersected(condition_trace(fam, b)));
        }
    }

    TEST_CASE("check_exhibits on the A2 = A0 ∪ A1 configuration")
    {
        auto fam = family(2, {{0}, {1}, {0, 1}});
        auto rep = check_exhibits(fam, three_var);
        CHECK(rep.exhibits);
        CHECK(rep.failures.empty());
        CHECK(exhibits_by_definition(fam, three_var));
    }

    TEST_CASE("check_exhibits: vacuous, failing, arity mismatch")
    {
        CHECK(check_exhibits(family(3, {{0}, {}}), pattern(2, {})).exhibits);
        auto rep = check_exhibits(family(1, {{0}}), pattern(1, {}, {cond({0})}));
        CHECK_FALSE(rep.exhibits);
        REQUIRE(rep.failures.size() == 1);
        CHECK_FALSE(rep.failures[0].in_consistency);
        CHECK(rep.failures[0].condition == cond({0}));
        CHECK_ERROR_CODE(check_exhibits(family(1, {{0}}), pattern(2, {})), ErrorCode::ArityMismatch);
    }

    TEST_CASE("check_exhibits agrees with the definition on random inputs")
    {
        Rng rng(11);
        for (int t = 0; t < 500; ++t) {
            const std::size_t n = 1 + rng() % 4;
            const std::size_t m = 1 + rng() % 5;
            std::vector<IndexSet> sets;
            for (std::size_t i = 0; i < n; ++i)
                sets.push_back(IndexSet::from_mask(rng() & ((1U << m) - 1)));
            auto fam = family(m, sets);
            auto p = random_pattern(rng, n, 6);
            CHECK(static_cast<bool>(check_exhibits(fam, p)) == exhibits_by_definition(fam, p));
        }
    }

    TEST_CASE("realized types")
    {
        CHECK(realized_types(family(2, {{0}, {0, 1}})) == std::set<IndexSet>{{0, 1}, {1}});
        CHECK(realized_types(family(1, {{}, {}})) == std::set<IndexSet>{{}});
        CHECK(realized_types(ip_family(2)).size() == 4);
    }

    TEST_CASE("fully complete extension")
    {
        auto ext = fully_complete_extension(family(2, {{0}, {0, 1}}));
        CHECK(ext == pattern(2, {cond({0, 1}), cond({1}, {0})}, {cond({}, {0, 1}), cond({0}, {1})}));
        CHECK(classify(ext).fully_complete);
        CHECK(fully_complete_extension(family(1, {{0}})) == pattern(1, {cond({0})}, {cond({}, {0})}));
        auto ip = fully_complete_extension(ip_family(2));
        CHECK(ip.consistency().size() == 4);
        CHECK(ip.inconsistency().empty());
    }

    TEST_CASE("a family exhibits its own extension")
    {
        Rng rng(5);
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng() % 4;
            const std::size_t m = 1 + rng() % 6;
            std::vector<IndexSet> sets;
            for (std::size_t i = 0; i < n; ++i)
                sets.push_back(IndexSet::from_mask(rng() & ((1U << m) - 1)));
            auto fam = family(m, sets);
            auto ext = fully_complete_extension(fam);
            CHECK(classify(ext).fully_complete);
            CHECK(check_exhibits(fam, ext));
        }
    }

    TEST_CASE("union-closed families")
    {
        auto ufam = UnionClosedFamily(family(2, {{}, {0}, {1}, {0, 1}}));
        CHECK(ufam.index_count() == 2);
        CHECK(ufam.at({0, 1}) == IndexSet{0, 1});
        CHECK(ufam.singleton(1) == IndexSet{1});
        CHECK(ufam.unions_traced());
        CHECK_ERROR_CODE(UnionClosedFamily(family(2, {{}, {0}, {1}})), ErrorCode::MalformedUnionMap);
        CHECK_ERROR_CODE(UnionClosedFamily(family(2, {{}, {0}, {1}, {1}})), ErrorCode::MalformedUnionMap);
    }

    TEST_CASE("Cooper 1^(n) checks")
    {
        auto disjoint = UnionClosedFamily(family(2, {{}, {0}, {1}, {0, 1}}));
        CHECK(check_one_n(disjoint, 1));
        CHECK_FALSE(check_one_n(disjoint, 2));
        auto shared = UnionClosedFamily(family(2, {{}, {0}, {0}, {0}}));
        CHECK_FALSE(check_one_n(shared, 1));
        CHECK(check_one_n(shared, 2));
        auto with_empty = UnionClosedFamily(family(2, {{}, {}, {1}, {1}}));
        CHECK_FALSE(check_one_n(with_empty, 1));
    }

    TEST_CASE("hypergraph encoding")
    {
        Hypergraph h(2, 3, {{0, 1}});
        CHECK(encodes_hypergraph(family(2, {{0}, {0}, {1}}), h));
        CHECK(encodes_hypergraph(family(3, {{0}, {1}, {2}}), Hypergraph(2, 3, {})));
        CHECK_FALSE(encodes_hypergraph(family(1, {{0}, {0}, {0}}), h));
        CHECK_ERROR_CODE(encodes_hypergraph(family(1, {{0}}), h), ErrorCode::ArityMismatch);
    }

    TEST_CASE("an extension refines every pattern its family exhibits")
    {
        Rng rng(17);
        int checked = 0;
        for (int t = 0; t < 400 && checked < 150; ++t) {
            auto p = random_pattern(rng, 1 + rng() % 4, 5);
            auto d = decide_exhibitable(p);
            if (!d.exhibitable)
                continue;
            ++checked;
            auto ext = fully_complete_extension(*d.witness);
            auto other = powerset_sm_witness(ext);
            CHECK(check_exhibits(other, p));
        }
        CHECK(checked > 50);
    }
}
