#include "patterna/graph.hpp"

#include <functional>
#include <unordered_set>

#include "patterna/error.hpp"

namespace patterna {

Hypergraph::Hypergraph(std::size_t arity, std::size_t vertex_count, std::set<IndexSet> edges)
    : arity_(arity), vertex_count_(vertex_count), edges_(std::move(edges))
{
    if (arity_ < 2)
        throw Error(ErrorCode::InvalidInput, "hypergraph arity must be at least 2");
    for (const auto& e : edges_)
        if (e.size() != arity_ || e.bound() > vertex_count_)
            throw Error(ErrorCode::InvalidInput, "edge is not a " + std::to_string(arity_) +
                                                     "-subset of [0, " + std::to_string(vertex_count_) + ")");
}

bool Hypergraph::is_clique(const IndexSet& s) const
{
    if (s.size() < arity_)
        return true;
    for (const auto& sub : k_subsets(s, arity_))
        if (!edges_.contains(sub))
            return false;
    return true;
}

std::vector<IndexSet> k_subsets(const IndexSet& s, std::size_t k)
{
    std::vector<IndexSet> out;
    const auto items = s.items();
    if (k > items.size())
        return out;
    std::vector<Index> chosen;
    chosen.reserve(k);
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (chosen.size() == k) {
            out.emplace_back(chosen);
            return;
        }
        for (std::size_t i = start; i + (k - chosen.size()) <= items.size(); ++i) {
            chosen.push_back(items[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k)
{
    return k_subsets(IndexSet::range(n), k);
}

std::vector<IndexSet> nonempty_cliques(const Hypergraph& h, std::size_t max_vertices)
{
    if (h.vertex_count() > max_vertices || h.vertex_count() > 64)
        throw Error(ErrorCode::BoundExceeded, "clique enumeration over " + std::to_string(h.vertex_count()) +
                                                  " vertices exceeds bound " + std::to_string(max_vertices));
    const auto k = h.arity();
    std::unordered_set<std::uint64_t> edge_masks;
    for (const auto& e : h.edges())
        edge_masks.insert(e.to_mask());

    std::vector<IndexSet> out;
    std::vector<Index> current;

    // Every (k-1)-subset of `current`, joined with `v`, is an edge.
    std::function<bool(std::size_t, std::size_t, std::uint64_t)> closes =
        [&](std::size_t start, std::size_t missing, std::uint64_t mask) {
            if (missing == 0)
                return edge_masks.contains(mask);
            for (std::size_t i = start; i + missing <= current.size(); ++i)
                if (!closes(i + 1, missing - 1, mask | std::uint64_t{1} << current[i]))
                    return false;
            return true;
        };

    // depth-first, smallest extension first: emits cliques in lexicographic order
    std::function<void(Index)> extend = [&](Index from) {
        for (Index v = from; v < h.vertex_count(); ++v) {
            if (current.size() + 1 >= k && !closes(0, k - 1, std::uint64_t{1} << v))
                continue;
            current.push_back(v);
            out.emplace_back(current);
            extend(v + 1);
            current.pop_back();
        }
    };
    extend(0);
    return out;
}

}  // namespace patterna
