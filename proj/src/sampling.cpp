#include "patterna/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "patterna/error.hpp"

namespace patterna {

namespace {

bool coin(Rng& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

std::size_t below(Rng& rng, std::size_t bound)
{
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

IndexSet random_subset(Rng& rng, std::size_t n, double p = 0.5)
{
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng, p))
            s.insert(static_cast<Index>(i));
    return s;
}

IndexSet nonempty_subset(Rng& rng, std::size_t n)
{
    for (;;)
        if (auto s = random_subset(rng, n); !s.empty())
            return s;
}

// pos/neg disjoint and not both empty; requires n ≥ 1.
Condition disjoint_condition(Rng& rng, std::size_t n)
{
    for (;;) {
        Condition c;
        for (std::size_t i = 0; i < n; ++i) {
            switch (below(rng, 3)) {
            case 0: c.pos.insert(static_cast<Index>(i)); break;
            case 1: c.neg.insert(static_cast<Index>(i)); break;
            default: break;
            }
        }
        if (!c.pos.empty() || !c.neg.empty())
            return c;
    }
}

}  // namespace

Pattern random_pattern(Rng& rng, std::size_t n, std::size_t max_conditions)
{
    std::vector<Condition> c, i;
    if (n > 0) {
        const auto total = below(rng, max_conditions + 1);
        for (std::size_t t = 0; t < total; ++t) {
            Condition cond;
            do {
                cond = {random_subset(rng, n, 0.35), random_subset(rng, n, 0.35)};
            } while (cond.pos.empty() && cond.neg.empty());
            (coin(rng) ? c : i).push_back(std::move(cond));
        }
    }
    return Pattern::make(n, std::move(c), std::move(i), ValidationMode::Lenient);
}

Pattern random_positive_pattern(Rng& rng, std::size_t n, std::size_t max_conditions)
{
    std::vector<Condition> c, i;
    if (n > 0) {
        const auto cs = below(rng, max_conditions + 1);
        for (std::size_t t = 0; t < cs; ++t)
            c.push_back({nonempty_subset(rng, n), {}});
        const auto is = below(rng, max_conditions + 1);
        for (std::size_t t = 0; t < is; ++t) {
            Condition z{nonempty_subset(rng, n), {}};
            if (std::none_of(c.begin(), c.end(), [&](const Condition& y) { return z.is_contained_in(y); }))
                i.push_back(std::move(z));
        }
    }
    return Pattern::make(n, std::move(c), std::move(i), ValidationMode::Lenient);
}

Pattern random_consistency_pattern(Rng& rng, std::size_t n, std::size_t max_conditions)
{
    std::vector<Condition> c;
    if (n > 0) {
        const auto cs = below(rng, max_conditions + 1);
        for (std::size_t t = 0; t < cs; ++t)
            c.push_back(disjoint_condition(rng, n));
    }
    return Pattern::make(n, std::move(c), {}, ValidationMode::Lenient);
}

Hypergraph random_hypergraph(Rng& rng, std::size_t k, std::size_t vertices, double density)
{
    std::set<IndexSet> edges;
    for (auto& s : k_subsets(vertices, k))
        if (coin(rng, density))
            edges.insert(std::move(s));
    return Hypergraph(k, vertices, std::move(edges));
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    std::set<IndexSet> edges;
    auto pairs = k_subsets(n, 2);
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1U)
            edges.insert(pairs[b]);
    return Graph(2, n, std::move(edges));
}

std::vector<Pattern> all_fully_complete(std::size_t n)
{
    if (n > 4)
        throw Error(ErrorCode::BoundExceeded, "fully complete patterns are enumerated for n <= 4 only");
    std::vector<Pattern> out;
    if (n == 0)
        return out;
    const std::size_t splits = std::size_t{1} << n;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << splits); ++mask) {
        std::vector<Condition> c, i;
        for (std::size_t x = 0; x < splits; ++x)
            (mask >> x & 1U ? c : i).push_back(complete_condition(IndexSet::from_mask(x), n));
        out.push_back(Pattern::make(n, std::move(c), std::move(i)));
    }
    return out;
}

std::vector<Pattern> all_consistency_patterns(std::size_t n)
{
    std::vector<Condition> pool;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;
    if (total - 1 > 16)
        throw Error(ErrorCode::BoundExceeded, "too many consistency patterns to enumerate");
    for (std::size_t code = 1; code < total; ++code) {
        Condition c;
        auto rest = code;
        for (std::size_t i = 0; i < n; ++i, rest /= 3) {
            if (rest % 3 == 1)
                c.pos.insert(static_cast<Index>(i));
            else if (rest % 3 == 2)
                c.neg.insert(static_cast<Index>(i));
        }
        pool.push_back(std::move(c));
    }
    std::vector<Pattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pool.size()); ++mask) {
        std::vector<Condition> c;
        for (std::size_t b = 0; b < pool.size(); ++b)
            if (mask >> b & 1U)
                c.push_back(pool[b]);
        out.push_back(Pattern::make(n, std::move(c), {}));
    }
    return out;
}

namespace {

bool valid(const WitnessStructure& s)
{
    return static_cast<bool>(check_axioms(s));
}

// Adds random r pairs and hyperedges touching at least one of the "fresh"
// witnesses / parameters, keeping only additions that preserve the axioms.
void grow(Rng& rng, WitnessStructure& s, const std::vector<bool>& fresh_witness,
          const std::vector<bool>& fresh_parameter)
{
    for (std::size_t w = 0; w < s.witness_count; ++w)
        for (std::size_t p = 0; p < s.parameter_count; ++p) {
            if (!fresh_witness[w] && !fresh_parameter[p])
                continue;
            if (!coin(rng))
                continue;
            s.r.insert({w, p});
            if (!valid(s))
                s.r.erase({w, p});
        }
    const auto tries = s.parameter_count;
    for (std::size_t t = 0; t < tries && s.parameter_count > 0; ++t) {
        auto e = random_subset(rng, s.parameter_count, 0.4);
        if (e.empty() || e.size() > 3)
            continue;
        if (std::none_of(e.begin(), e.end(), [&](Index p) { return fresh_parameter[p]; }))
            continue;
        auto [it, inserted] = s.hyperedges.insert(e);
        if (inserted && !valid(s))
            s.hyperedges.erase(it);
    }
}

std::vector<std::size_t> permutation(Rng& rng, std::size_t n)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

WitnessStructure relabel(const WitnessStructure& s, const std::vector<std::size_t>& wperm,
                         const std::vector<std::size_t>& pperm)
{
    WitnessStructure out = s;
    out.r.clear();
    out.hyperedges.clear();
    for (const auto& [w, p] : s.r)
        out.r.insert({wperm[w], pperm[p]});
    for (const auto& e : s.hyperedges) {
        IndexSet img;
        for (auto p : e)
            img.insert(static_cast<Index>(pperm[p]));
        out.hyperedges.insert(img);
    }
    return out;
}

}  // namespace

WitnessStructure random_structure(Rng& rng, std::size_t max_witnesses, std::size_t max_parameters)
{
    WitnessStructure s;
    s.witness_count = below(rng, max_witnesses + 1);
    s.parameter_count = below(rng, max_parameters + 1);
    grow(rng, s, std::vector<bool>(s.witness_count, true), std::vector<bool>(s.parameter_count, true));
    return s;
}

AmalgamationProblem random_amalgamation_problem(Rng& rng)
{
    AmalgamationProblem prob;
    prob.b1 = random_structure(rng, 4, 5);

    // A: induced on random subsets of B1's sorts; e1 is the inclusion.
    std::vector<std::size_t> wsel, psel;
    for (std::size_t w = 0; w < prob.b1.witness_count; ++w)
        if (coin(rng))
            wsel.push_back(w);
    for (std::size_t p = 0; p < prob.b1.parameter_count; ++p)
        if (coin(rng))
            psel.push_back(p);
    auto& a = prob.a;
    a.witness_count = wsel.size();
    a.parameter_count = psel.size();
    for (std::size_t i = 0; i < wsel.size(); ++i)
        for (std::size_t j = 0; j < psel.size(); ++j)
            if (prob.b1.related(wsel[i], psel[j]))
                a.r.insert({i, j});
    std::vector<std::optional<std::size_t>> pos_in_a(prob.b1.parameter_count);
    for (std::size_t j = 0; j < psel.size(); ++j)
        pos_in_a[psel[j]] = j;
    for (const auto& e : prob.b1.hyperedges) {
        IndexSet back;
        bool inside = true;
        for (auto p : e) {
            if (!pos_in_a[p]) {
                inside = false;
                break;
            }
            back.insert(static_cast<Index>(*pos_in_a[p]));
        }
        if (inside)
            a.hyperedges.insert(back);
    }
    prob.e1 = {wsel, psel};

    // B0: A plus fresh points, then shuffled.
    WitnessStructure grown = a;
    grown.witness_count += below(rng, 3);
    grown.parameter_count += below(rng, 3);
    std::vector<bool> fresh_w(grown.witness_count, false), fresh_p(grown.parameter_count, false);
    for (std::size_t w = a.witness_count; w < grown.witness_count; ++w)
        fresh_w[w] = true;
    for (std::size_t p = a.parameter_count; p < grown.parameter_count; ++p)
        fresh_p[p] = true;
    grow(rng, grown, fresh_w, fresh_p);

    const auto wperm = permutation(rng, grown.witness_count);
    const auto pperm = permutation(rng, grown.parameter_count);
    prob.b0 = relabel(grown, wperm, pperm);
    prob.e0.witness_map.assign(wperm.begin(), wperm.begin() + static_cast<std::ptrdiff_t>(a.witness_count));
    prob.e0.parameter_map.assign(pperm.begin(), pperm.begin() + static_cast<std::ptrdiff_t>(a.parameter_count));
    return prob;
}

}  // namespace patterna
