#include "patterna/hypergraph.hpp"

#include <algorithm>

#include "patterna/error.hpp"
#include "patterna/limits.hpp"

namespace patterna {

namespace {

IndexSet meet(const SetFamily& fam, const IndexSet& members)
{
    IndexSet out = IndexSet::range(fam.universe_size());
    for (auto v : members) {
        out = out.intersected(fam[v]);
        if (out.empty())
            break;
    }
    return out;
}

std::vector<IndexSet> non_edges(const Hypergraph& h)
{
    std::vector<IndexSet> out;
    for (auto& s : k_subsets(h.vertex_count(), h.arity()))
        if (!h.has_edge(s))
            out.push_back(std::move(s));
    return out;
}

std::size_t default_blowup_bound()
{
    return 2 * limits().max_clique_vertices;
}

}  // namespace

Pattern pattern_from_hypergraph(const Hypergraph& h, std::size_t max_vertices)
{
    std::vector<Condition> c;
    for (auto& clique : nonempty_cliques(h, max_vertices))
        c.push_back({std::move(clique), {}});
    std::vector<Condition> i;
    for (auto& s : non_edges(h))
        i.push_back({std::move(s), {}});
    return Pattern::make(h.vertex_count(), std::move(c), std::move(i));
}

Pattern pattern_from_hypergraph(const Hypergraph& h)
{
    return pattern_from_hypergraph(h, limits().max_clique_vertices);
}

bool realize_check(const SetFamily& fam, const Hypergraph& h, std::size_t max_vertices)
{
    if (fam.size() != h.vertex_count())
        throw Error(ErrorCode::ArityMismatch, "family has " + std::to_string(fam.size()) + " sets for " +
                                                  std::to_string(h.vertex_count()) + " vertices");
    for (const auto& s : non_edges(h))
        if (!meet(fam, s).empty())
            return false;
    for (const auto& clique : nonempty_cliques(h, max_vertices))
        if (meet(fam, clique).empty())
            return false;
    return true;
}

bool realize_check(const SetFamily& fam, const Hypergraph& h)
{
    return realize_check(fam, h, limits().max_clique_vertices);
}

Blowup blowup(const Hypergraph& h, std::size_t max_vertices)
{
    const auto k = h.arity();
    const auto n = h.vertex_count();
    const auto total = (k + 1) * n;
    if (total > max_vertices)
        throw Error(ErrorCode::BoundExceeded, "blowup has " + std::to_string(total) + " vertices, bound is " +
                                                  std::to_string(max_vertices));
    std::vector<IndexSet> blocks(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= k; ++j)
            blocks[i].insert(static_cast<Index>((k + 1) * i + j));
    // A (k+1)-set is an edge exactly when the blocks it meets form a clique
    // of h: every block is an edge, and the blocks of each clique together
    // form a clique.
    std::set<IndexSet> edges;
    for (auto& s : k_subsets(total, k + 1)) {
        IndexSet touched;
        for (auto v : s)
            touched.insert(static_cast<Index>(v / (k + 1)));
        if (h.is_clique(touched))
            edges.insert(std::move(s));
    }
    return {Hypergraph(k + 1, total, std::move(edges)), std::move(blocks)};
}

Blowup blowup(const Hypergraph& h)
{
    return blowup(h, default_blowup_bound());
}

SetFamily blowup_pullback(const SetFamily& fam, const Hypergraph& h)
{
    const auto b = blowup(h);
    if (fam.size() != b.hypergraph.vertex_count() || !realize_check(fam, b.hypergraph, default_blowup_bound()))
        throw Error(ErrorCode::PreconditionFailure, "family does not realize the blowup");
    std::vector<IndexSet> sets;
    sets.reserve(b.blocks.size());
    for (const auto& block : b.blocks)
        sets.push_back(meet(fam, block));
    SetFamily out(fam.universe_size(), std::move(sets));
    if (!realize_check(out, h))
        throw Error(ErrorCode::VerificationFailure, "grouped family does not realize the hypergraph");
    return out;
}

SetFamily WitnessStructure::trace_family() const
{
    std::vector<IndexSet> sets(parameter_count);
    for (const auto& [w, p] : r)
        if (p < parameter_count)
            sets[p].insert(static_cast<Index>(w));
    return SetFamily(std::max<std::size_t>(witness_count, 1), std::move(sets));
}

AxiomReport check_axioms(const WitnessStructure& s)
{
    AxiomReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    for (const auto& [w, p] : s.r)
        if (w >= s.witness_count || p >= s.parameter_count)
            fail("A3: r(" + std::to_string(w) + ", " + std::to_string(p) + ") does not go from witnesses to parameters");
    for (const auto& e : s.hyperedges) {
        const std::string name = "hyperedge of size " + std::to_string(e.size());
        if (e.empty())
            fail("A2: empty hyperedge");
        else if (e.bound() > s.parameter_count)
            fail("A2: " + name + " leaves the parameter sort");
        if (s.flavor == StructureFlavor::Uniform && e.size() != s.uniform_arity)
            fail("A2: " + name + " in a " + std::to_string(s.uniform_arity) + "-uniform structure");
    }
    for (const auto& e : s.hyperedges) {
        if (e.empty())
            continue;
        for (std::size_t w = 0; w < s.witness_count; ++w)
            if (std::all_of(e.begin(), e.end(), [&](Index p) { return s.related(w, p); })) {
                std::string members;
                for (auto p : e)
                    members += (members.empty() ? "" : ",") + std::to_string(p);
                fail("A4: witness " + std::to_string(w) + " is related to every vertex of hyperedge {" + members +
                     "}");
            }
    }
    return rep;
}

WitnessStructure build_witness_structure(const Pattern& p, StructureFlavor flavor)
{
    const auto flags = classify(p);
    if (!flags.reasonable || !flags.positive)
        throw Error(ErrorCode::NotReasonablePositive, "witness structures need a reasonable positive pattern");
    WitnessStructure s;
    s.flavor = flavor;
    if (flavor == StructureFlavor::Uniform) {
        if (!p.inconsistency().empty() && !flags.k_bounded)
            throw Error(ErrorCode::UnsupportedParams, "inconsistency conditions do not share one size");
        s.uniform_arity = flags.k_bounded.value_or(0);
    }
    s.witness_count = p.consistency().size();
    s.parameter_count = p.n();
    for (std::size_t i = 0; i < p.consistency().size(); ++i)
        for (auto j : p.consistency()[i].pos)
            s.r.insert({i, j});
    for (const auto& c : p.inconsistency())
        s.hyperedges.insert(c.pos);

    auto rep = check_axioms(s);
    if (!rep)
        throw Error(ErrorCode::AxiomViolation, rep.violations.front());
    if (!check_exhibits(s.trace_family(), p))
        throw Error(ErrorCode::VerificationFailure, "structure traces do not exhibit the pattern");
    return s;
}

WitnessStructure build_witness_structure(const Hypergraph& h)
{
    WitnessStructure s;
    s.flavor = StructureFlavor::Uniform;
    s.uniform_arity = h.arity();
    s.parameter_count = h.vertex_count();
    const auto cliques = nonempty_cliques(h, limits().max_clique_vertices);
    s.witness_count = cliques.size();
    for (std::size_t w = 0; w < cliques.size(); ++w)
        for (auto v : cliques[w])
            s.r.insert({w, v});
    for (auto& e : non_edges(h))
        s.hyperedges.insert(std::move(e));

    auto rep = check_axioms(s);
    if (!rep)
        throw Error(ErrorCode::AxiomViolation, rep.violations.front());
    if (!realize_check(s.trace_family(), h))
        throw Error(ErrorCode::VerificationFailure, "structure traces do not realize the hypergraph");
    return s;
}

namespace {

bool injective_into(const std::vector<std::size_t>& map, std::size_t target_size)
{
    std::vector<bool> seen(target_size, false);
    for (auto x : map) {
        if (x >= target_size || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

IndexSet image(const IndexSet& s, const std::vector<std::size_t>& map)
{
    IndexSet out;
    for (auto x : s)
        out.insert(static_cast<Index>(map[x]));
    return out;
}

}  // namespace

bool is_embedding(const WitnessStructure& from, const WitnessStructure& to, const Embedding& e)
{
    if (e.witness_map.size() != from.witness_count || e.parameter_map.size() != from.parameter_count)
        return false;
    if (!injective_into(e.witness_map, to.witness_count) || !injective_into(e.parameter_map, to.parameter_count))
        return false;
    for (std::size_t w = 0; w < from.witness_count; ++w)
        for (std::size_t p = 0; p < from.parameter_count; ++p)
            if (from.related(w, p) != to.related(e.witness_map[w], e.parameter_map[p]))
                return false;
    for (const auto& h : from.hyperedges)
        if (h.bound() > from.parameter_count || !to.hyperedges.contains(image(h, e.parameter_map)))
            return false;

    std::vector<std::optional<std::size_t>> preimage(to.parameter_count);
    for (std::size_t p = 0; p < from.parameter_count; ++p)
        preimage[e.parameter_map[p]] = p;
    for (const auto& h : to.hyperedges) {
        IndexSet back;
        bool inside = true;
        for (auto q : h) {
            if (q >= to.parameter_count || !preimage[q]) {
                inside = false;
                break;
            }
            back.insert(static_cast<Index>(*preimage[q]));
        }
        if (inside && !from.hyperedges.contains(back))
            return false;
    }
    return true;
}

Amalgam free_amalgam(const WitnessStructure& a, const WitnessStructure& b0, const WitnessStructure& b1,
                     const Embedding& e0, const Embedding& e1)
{
    if (!is_embedding(a, b0, e0))
        throw Error(ErrorCode::NotAnEmbedding, "e0 is not an embedding of A into B0");
    if (!is_embedding(a, b1, e1))
        throw Error(ErrorCode::NotAnEmbedding, "e1 is not an embedding of A into B1");

    Amalgam out;
    auto& c = out.structure;
    c.flavor = b1.flavor;
    c.uniform_arity = b1.uniform_arity;
    c.witness_count = b1.witness_count;
    c.parameter_count = b1.parameter_count;

    out.from_right.witness_map.resize(b1.witness_count);
    out.from_right.parameter_map.resize(b1.parameter_count);
    for (std::size_t w = 0; w < b1.witness_count; ++w)
        out.from_right.witness_map[w] = w;
    for (std::size_t p = 0; p < b1.parameter_count; ++p)
        out.from_right.parameter_map[p] = p;

    auto glue = [](const std::vector<std::size_t>& m0, const std::vector<std::size_t>& m1, std::size_t b0_count,
                   std::size_t& next) {
        std::vector<std::optional<std::size_t>> shared(b0_count);
        for (std::size_t x = 0; x < m0.size(); ++x)
            shared[m0[x]] = m1[x];
        std::vector<std::size_t> map(b0_count);
        for (std::size_t y = 0; y < b0_count; ++y)
            map[y] = shared[y] ? *shared[y] : next++;
        return map;
    };
    out.from_left.witness_map = glue(e0.witness_map, e1.witness_map, b0.witness_count, c.witness_count);
    out.from_left.parameter_map = glue(e0.parameter_map, e1.parameter_map, b0.parameter_count, c.parameter_count);

    c.r = b1.r;
    c.hyperedges = b1.hyperedges;
    for (const auto& [w, p] : b0.r)
        c.r.insert({out.from_left.witness_map[w], out.from_left.parameter_map[p]});
    for (const auto& h : b0.hyperedges)
        c.hyperedges.insert(image(h, out.from_left.parameter_map));

    auto rep = check_axioms(c);
    if (!rep)
        throw Error(ErrorCode::VerificationFailure, "amalgam violates the axioms: " + rep.violations.front());
    if (!is_embedding(b0, c, out.from_left) || !is_embedding(b1, c, out.from_right))
        throw Error(ErrorCode::VerificationFailure, "B0 or B1 does not embed into the amalgam");
    for (std::size_t x = 0; x < a.witness_count; ++x)
        if (out.from_left.witness_map[e0.witness_map[x]] != out.from_right.witness_map[e1.witness_map[x]])
            throw Error(ErrorCode::VerificationFailure, "amalgam square does not commute on witnesses");
    for (std::size_t x = 0; x < a.parameter_count; ++x)
        if (out.from_left.parameter_map[e0.parameter_map[x]] != out.from_right.parameter_map[e1.parameter_map[x]])
            throw Error(ErrorCode::VerificationFailure, "amalgam square does not commute on parameters");
    return out;
}

std::vector<IndexSet> triangles(const Graph& g)
{
    std::vector<IndexSet> out;
    const auto n = static_cast<Index>(g.vertex_count());
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) {
            if (!g.has_edge({a, b}))
                continue;
            for (Index c = b + 1; c < n; ++c)
                if (g.has_edge({a, c}) && g.has_edge({b, c}))
                    out.push_back({a, b, c});
        }
    return out;
}

TriangleFreeDouble triangle_free_double(const Graph& g)
{
    if (g.arity() != 2)
        throw Error(ErrorCode::InvalidInput, "triangle-free doubling needs a graph");
    const auto n = g.vertex_count();
    auto cliques = nonempty_cliques(g, limits().max_clique_vertices);
    const auto total = 2 * n + cliques.size();

    std::set<IndexSet> edges;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t v = 0; v < n; ++v) {
        pairs.emplace_back(2 * v, 2 * v + 1);
        for (std::size_t w = 0; w < n; ++w)
            if (v != w && !g.has_edge({static_cast<Index>(v), static_cast<Index>(w)}))
                edges.insert({static_cast<Index>(2 * v), static_cast<Index>(2 * w + 1)});
    }
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const auto x = static_cast<Index>(2 * n + i);
        for (auto v : cliques[i]) {
            edges.insert({x, 2 * v});
            edges.insert({x, 2 * v + 1});
        }
    }
    Graph doubled(2, total, std::move(edges));

    if (auto found = triangles(doubled); !found.empty())
        throw Error(ErrorCode::TriangleFound, "doubled graph contains " + std::to_string(found.size()) +
                                                  " triangle(s)");

    std::vector<IndexSet> sets(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < total; ++x) {
            const auto xi = static_cast<Index>(x);
            if (doubled.has_edge({xi, static_cast<Index>(2 * v)}) && doubled.has_edge({xi, static_cast<Index>(2 * v + 1)}))
                sets[v].insert(xi);
        }
    SetFamily fam(std::max<std::size_t>(total, 1), std::move(sets));
    if (!realize_check(fam, g))
        throw Error(ErrorCode::VerificationFailure, "doubled family does not realize the graph");
    return {std::move(doubled), std::move(pairs), std::move(cliques), std::move(fam)};
}

}  // namespace patterna
