#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "patterna/index_set.hpp"

namespace patterna {

/// A finite k-uniform hypergraph on vertices [0, vertex_count).
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws InvalidInput when an edge is not a k-subset of the vertices
    /// or arity < 2.
    Hypergraph(std::size_t arity, std::size_t vertex_count, std::set<IndexSet> edges);

    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
    [[nodiscard]] const std::set<IndexSet>& edges() const noexcept { return edges_; }
    [[nodiscard]] bool has_edge(const IndexSet& s) const { return edges_.contains(s); }

    /// Every arity-subset of `s` is an edge (vacuous when |s| < arity).
    [[nodiscard]] bool is_clique(const IndexSet& s) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t arity_ = 2;
    std::size_t vertex_count_ = 0;
    std::set<IndexSet> edges_;
};

/// Graphs are the arity-2 case.
using Graph = Hypergraph;

/// All k-subsets of [0, n) in lexicographic order.
[[nodiscard]] std::vector<IndexSet> k_subsets(std::size_t n, std::size_t k);
/// All k-subsets of `s` in lexicographic order.
[[nodiscard]] std::vector<IndexSet> k_subsets(const IndexSet& s, std::size_t k);

/// All nonempty cliques of `h` in lexicographic order. Throws BoundExceeded
/// when the vertex count is above `max_vertices`.
[[nodiscard]] std::vector<IndexSet> nonempty_cliques(const Hypergraph& h, std::size_t max_vertices);

}  // namespace patterna
