#include "patterna/decide.hpp"

#include <algorithm>

#include "patterna/error.hpp"
#include "patterna/limits.hpp"

namespace patterna {

namespace {

Clause inconsistency_clause(const Condition& z)
{
    Clause clause;
    for (auto i : z.pos)
        clause.push_back(neg_lit(i));
    for (auto j : z.neg)
        clause.push_back(pos_lit(j));
    return clause;
}

std::vector<Clause> inconsistency_clauses(const Pattern& p)
{
    std::vector<Clause> clauses;
    clauses.reserve(p.inconsistency().size());
    for (const auto& z : p.inconsistency())
        clauses.push_back(inconsistency_clause(z));
    return clauses;
}

bool type_extends(const IndexSet& type, const Condition& c)
{
    return c.pos.is_subset_of(type) && !c.neg.intersects(type);
}

IndexSet type_of(const Assignment& a)
{
    IndexSet t;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            t.insert(static_cast<Index>(i));
    return t;
}

SetFamily family_from_types(const std::vector<IndexSet>& types, std::size_t n)
{
    std::vector<IndexSet> sets(n);
    for (std::size_t point = 0; point < types.size(); ++point)
        for (auto i : types[point])
            sets[i].insert(static_cast<Index>(point));
    return SetFamily(types.size(), std::move(sets));
}

void add_type(std::vector<IndexSet>& types, IndexSet t)
{
    if (std::find(types.begin(), types.end(), t) == types.end())
        types.push_back(std::move(t));
}

Decision finish(const Pattern& p, const std::vector<IndexSet>& types)
{
    Decision d;
    d.exhibitable = true;
    d.witness = family_from_types(types, p.n());
    auto report = check_exhibits(*d.witness, p);
    if (!report)
        throw Error(ErrorCode::WitnessVerificationFailure,
                    "synthesized witness fails " + std::to_string(report.failures.size()) + " condition(s)");
    return d;
}

Decision refuse(FailingCondition why)
{
    Decision d;
    d.exhibitable = false;
    d.failing = std::move(why);
    return d;
}

}  // namespace

CnfFormula condition_cnf(const Pattern& p, const Condition& c)
{
    auto clauses = inconsistency_clauses(p);
    for (auto i : c.pos)
        clauses.push_back({pos_lit(i)});
    for (auto j : c.neg)
        clauses.push_back({neg_lit(j)});
    return CnfFormula(p.n(), std::move(clauses));
}

CnfFormula sentinel_cnf(const Pattern& p)
{
    return CnfFormula(p.n(), inconsistency_clauses(p));
}

Decision decide_exhibitable(const Pattern& p)
{
    std::vector<IndexSet> types;
    if (p.consistency().empty()) {
        auto model = sat_solve(sentinel_cnf(p));
        if (!model)
            return refuse(EmptyUniverse{});
        add_type(types, type_of(*model));
        return finish(p, types);
    }
    for (const auto& c : p.consistency()) {
        // a type chosen earlier already satisfies every inconsistency clause,
        // so it is a model of this condition's formula whenever it extends c
        if (std::any_of(types.begin(), types.end(), [&](const IndexSet& t) { return type_extends(t, c); }))
            continue;
        auto model = sat_solve(condition_cnf(p, c));
        if (!model)
            return refuse(c);
        add_type(types, type_of(*model));
    }
    return finish(p, types);
}

Decision brute_force_exhibitable(const Pattern& p, std::size_t max_n)
{
    const auto n = p.n();
    if (n > max_n || n >= 63)
        throw Error(ErrorCode::BoundExceeded,
                    "brute force over 2^" + std::to_string(n) + " types exceeds bound " + std::to_string(max_n));
    const std::uint64_t count = std::uint64_t{1} << n;
    auto survives = [&](const IndexSet& t) {
        return std::none_of(p.inconsistency().begin(), p.inconsistency().end(),
                            [&](const Condition& z) { return type_extends(t, z); });
    };
    auto first_type = [&](const Condition* c) -> std::optional<IndexSet> {
        for (std::uint64_t x = 0; x < count; ++x) {
            auto t = IndexSet::from_mask(x);
            if ((c == nullptr || type_extends(t, *c)) && survives(t))
                return t;
        }
        return std::nullopt;
    };

    std::vector<IndexSet> types;
    if (p.consistency().empty()) {
        auto t = first_type(nullptr);
        if (!t)
            return refuse(EmptyUniverse{});
        add_type(types, std::move(*t));
        return finish(p, types);
    }
    for (const auto& c : p.consistency()) {
        auto t = first_type(&c);
        if (!t)
            return refuse(c);
        add_type(types, std::move(*t));
    }
    return finish(p, types);
}

Decision brute_force_exhibitable(const Pattern& p)
{
    return brute_force_exhibitable(p, limits().max_n);
}

}  // namespace patterna
