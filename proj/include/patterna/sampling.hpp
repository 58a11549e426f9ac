#pragma once

// Deterministic generators of random and exhaustive test inputs. Shared by
// the `verify` command and the test suites; every generator takes the
// caller's engine so a fixed seed reproduces the same sequence.

#include <cstddef>
#include <random>
#include <vector>

#include "patterna/graph.hpp"
#include "patterna/hypergraph.hpp"
#include "patterna/pattern.hpp"

namespace patterna {

using Rng = std::mt19937_64;

/// Any n-pattern with at most max_conditions conditions in total; conditions
/// may overlap, so the result need not be reasonable.
[[nodiscard]] Pattern random_pattern(Rng& rng, std::size_t n, std::size_t max_conditions);

/// Reasonable positive n-pattern with up to max_conditions per side.
[[nodiscard]] Pattern random_positive_pattern(Rng& rng, std::size_t n, std::size_t max_conditions);

/// Reasonable (C, ∅) with up to max_conditions disjoint conditions.
[[nodiscard]] Pattern random_consistency_pattern(Rng& rng, std::size_t n, std::size_t max_conditions);

/// Each k-subset of [0, vertices) becomes an edge with probability `density`.
[[nodiscard]] Hypergraph random_hypergraph(Rng& rng, std::size_t k, std::size_t vertices, double density);

/// The graph on n vertices whose edges are picked by the bits of `mask`
/// over k_subsets(n, 2).
[[nodiscard]] Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Every fully complete n-pattern, ordered by the mask of splits placed in C
/// (none for n = 0, where the only split would be the excluded (∅,∅)).
[[nodiscard]] std::vector<Pattern> all_fully_complete(std::size_t n);

/// Every reasonable consistency n-pattern: all sets of disjoint conditions.
/// Throws BoundExceeded when there are more than 2^16 of them.
[[nodiscard]] std::vector<Pattern> all_consistency_patterns(std::size_t n);

/// A valid positive-flavor structure with at most the given sort sizes.
[[nodiscard]] WitnessStructure random_structure(Rng& rng, std::size_t max_witnesses, std::size_t max_parameters);

struct AmalgamationProblem {
    WitnessStructure a;
    WitnessStructure b0;
    WitnessStructure b1;
    Embedding e0;
    Embedding e1;
};

/// A is an induced substructure of a random B1, and B0 a random extension
/// of A with shuffled indices.
[[nodiscard]] AmalgamationProblem random_amalgamation_problem(Rng& rng);

}  // namespace patterna
