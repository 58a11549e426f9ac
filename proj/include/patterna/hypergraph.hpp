#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patterna/graph.hpp"
#include "patterna/pattern.hpp"
#include "patterna/semantics.hpp"

namespace patterna {

/// C = all nonempty cliques, I = all non-edge arity-subsets. Throws
/// BoundExceeded above `max_vertices` (default: limits().max_clique_vertices).
[[nodiscard]] Pattern pattern_from_hypergraph(const Hypergraph& h, std::size_t max_vertices);
[[nodiscard]] Pattern pattern_from_hypergraph(const Hypergraph& h);

/// fam realizes h: non-edges have empty intersection, cliques nonempty.
/// Same answer as check_exhibits(fam, pattern_from_hypergraph(h)).
[[nodiscard]] bool realize_check(const SetFamily& fam, const Hypergraph& h, std::size_t max_vertices);
[[nodiscard]] bool realize_check(const SetFamily& fam, const Hypergraph& h);

struct Blowup {
    Hypergraph hypergraph;
    /// blocks[i] = K_i, the k+1 vertices replacing vertex i.
    std::vector<IndexSet> blocks;
};

/// Replaces every vertex i of a k-hypergraph by a block K_i of k+1 vertices
/// (K_i = {(k+1)i, ..., (k+1)i + k}). A (k+1)-set of the new vertices is an
/// edge iff the blocks it meets form a clique of h, so each block is an edge
/// and the union of the blocks of any clique (in particular of any k-edge)
/// is a (k+1)-clique. No other edges.
/// Throws BoundExceeded when the result has more than `max_vertices`
/// vertices (default 2 * max_clique_vertices).
[[nodiscard]] Blowup blowup(const Hypergraph& h, std::size_t max_vertices);
[[nodiscard]] Blowup blowup(const Hypergraph& h);

/// C_i = ⋂_{v∈K_i} fam[v]. Throws PreconditionFailure unless fam realizes
/// the blown-up hypergraph, VerificationFailure if the result does not
/// realize `h`.
[[nodiscard]] SetFamily blowup_pullback(const SetFamily& fam, const Hypergraph& h);

enum class StructureFlavor { Positive, Uniform };

/// Finite two-sorted structure: witness points [0, witness_count) carry the
/// x variable, parameter points [0, parameter_count) the y variable. r
/// relates witnesses to parameters; hyperedges live on the parameter sort.
/// The positive flavor allows hyperedges of any arity, the uniform flavor
/// only `uniform_arity`.
struct WitnessStructure {
    StructureFlavor flavor = StructureFlavor::Positive;
    std::size_t uniform_arity = 0;
    std::size_t witness_count = 0;
    std::size_t parameter_count = 0;
    std::set<std::pair<std::size_t, std::size_t>> r;
    std::set<IndexSet> hyperedges;

    [[nodiscard]] bool related(std::size_t w, std::size_t p) const { return r.contains({w, p}); }
    /// {w : r(w, p)} per parameter p; an isolated extra point keeps the
    /// universe nonempty when there are no witnesses.
    [[nodiscard]] SetFamily trace_family() const;

    friend bool operator==(const WitnessStructure&, const WitnessStructure&) = default;
};

struct AxiomReport {
    bool ok = true;
    std::vector<std::string> violations;

    explicit operator bool() const noexcept { return ok; }
};

/// Sort discipline (A1, A3), hyperedges on parameters only and irreflexive
/// with allowed arity (A2), and no witness related to all vertices of a
/// hyperedge (A4), by full enumeration.
[[nodiscard]] AxiomReport check_axioms(const WitnessStructure& s);

/// The structure A_P of a reasonable positive pattern: one witness a_i per
/// consistency condition Y_i with r(a_i, b_j) iff j ∈ Y_i, and one hyperedge
/// Z per inconsistency condition (Z, ∅). Throws NotReasonablePositive;
/// throws AxiomViolation / VerificationFailure if the result fails its
/// checks.
[[nodiscard]] WitnessStructure build_witness_structure(const Pattern& p,
                                                       StructureFlavor flavor = StructureFlavor::Positive);
/// Uniform-flavor structure for a k-hypergraph: parameters are vertices,
/// hyperedges are the non-edges of h, one witness per nonempty clique.
[[nodiscard]] WitnessStructure build_witness_structure(const Hypergraph& h);

/// An embedding as explicit index maps for both sorts.
struct Embedding {
    std::vector<std::size_t> witness_map;
    std::vector<std::size_t> parameter_map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Injective, sort-preserving, and r and hyperedges hold in `from` exactly
/// when they hold between the images in `to`.
[[nodiscard]] bool is_embedding(const WitnessStructure& from, const WitnessStructure& to, const Embedding& e);

struct Amalgam {
    WitnessStructure structure;
    Embedding from_left;   // B0 -> C
    Embedding from_right;  // B1 -> C
};

/// Free amalgam of B0 and B1 over A: B1 keeps its indices, the points of B0
/// outside the image of A are appended, relations are the induced ones and
/// nothing holds across the two sides. Throws NotAnEmbedding;
/// VerificationFailure if the result fails the axioms or the square does
/// not commute.
[[nodiscard]] Amalgam free_amalgam(const WitnessStructure& a, const WitnessStructure& b0,
                                   const WitnessStructure& b1, const Embedding& e0, const Embedding& e1);

struct TriangleFreeDouble {
    /// Vertices b_v = 2v, c_v = 2v+1, then one witness per nonempty clique.
    Graph graph;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// cliques[w] is the clique of G served by witness vertex 2n + w.
    std::vector<IndexSet> cliques;
    /// B_v = {x : x adjacent to b_v and c_v} over the final vertex set.
    SetFamily family;
};

/// Doubles every vertex v into b_v, c_v (non-adjacent), joins b_v and c_w
/// whenever v ≠ w are non-adjacent in G, and adds a witness vertex for each
/// nonempty clique S adjacent to exactly {b_v, c_v : v ∈ S}. Throws
/// BoundExceeded; TriangleFound if the result is not triangle-free;
/// VerificationFailure if the family does not realize G.
[[nodiscard]] TriangleFreeDouble triangle_free_double(const Graph& g);

/// Triples {a,b,c} with all three edges present.
[[nodiscard]] std::vector<IndexSet> triangles(const Graph& g);

}  // namespace patterna
