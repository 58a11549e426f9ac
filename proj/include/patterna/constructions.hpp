#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "patterna/pattern.hpp"
#include "patterna/semantics.hpp"

namespace patterna {

// Finite witness constructions. Each one checks its own output (with
// check_exhibits or check_one_n) and throws VerificationFailure instead of
// returning a family that fails its contract.

/// Witness for a fully complete pattern over a finite atomic Boolean
/// algebra. With C = {(A_j, n∖A_j) : j < k} in canonical order the universe
/// is atoms a_0..a_{k-1} (points 0..k-1), one further atom (point k) and one
/// non-atom (point k+1).
///
/// If (∅, n) ∉ I, sets[i] = {a_j : i ∈ A_j}. Otherwise the marker
/// parameters switch the formula to its negation for i ∈ A_0, where b_i is
/// the join of {a_j : i ∉ A_j} and the trace is everything not an atom
/// below b_i. Throws NotFullyComplete.
[[nodiscard]] SetFamily powerset_sm_witness(const Pattern& p);

/// Witness for a reasonable positive pattern from pairwise disjoint nonzero
/// elements a_j, one per consistency condition Y_j: sets[i] = {j : i ∈ Y_j}.
/// When C = ∅ every set is empty over a one-point universe. Throws
/// NotReasonablePositive.
[[nodiscard]] SetFamily atomless_pm_witness(const Pattern& p);

/// b_X = X over the universe [0, k) (one point when k = 0): the canonical
/// family with ⋂ of traces nonempty iff ⋂ of the index sets is nonempty.
[[nodiscard]] SetFamily canonical_char_family(std::size_t k);

/// For a family with 2^k sets: every nonempty Z ⊆ P(k) has ⋂_{Y∈Z} b_Y ≠ ∅
/// iff ⋂Z ≠ ∅. Enumerates 2^(2^k) families; throws BoundExceeded for k > 4.
[[nodiscard]] bool has_char_property(const SetFamily& char_fam, std::size_t k);

/// sets[i] = char_fam[{j : i ∈ Y_j}] for C = {(Y_j, ∅) : j < k}.
/// Throws CharacterizationPropertyViolated (checked by enumeration for
/// k ≤ 4), NotReasonablePositive, ArityMismatch when char_fam does not have
/// 2^k sets.
[[nodiscard]] SetFamily pm_char_reduction(const SetFamily& char_fam, const Pattern& p);

/// First n sets of a witness for double_positive(p). Throws
/// PreconditionFailure unless `w` exhibits the doubled pattern.
[[nodiscard]] SetFamily cm_from_doubled_witness(const SetFamily& w, const Pattern& p);

/// Universe = all subsets X of [0,n) (encoded as masks), sets[i] = {X : i ∈ X}.
/// Throws BoundExceeded when n > max_n.
[[nodiscard]] SetFamily ip_family(std::size_t n, std::size_t max_n);
[[nodiscard]] SetFamily ip_family(std::size_t n);

enum class One1Flavor { Atoms, Skolem };

/// B_{i} = {i} over [0,n) with unions B_X = X. Atoms label points a0, a1, ...;
/// Skolem labels them with the first n primes and B_X with ∏_{i∈X} p_i.
/// Throws UnsupportedParams for n = 0 and BoundExceeded above max_n.
[[nodiscard]] UnionClosedFamily disjoint_one1_family(std::size_t n, One1Flavor flavor);

/// Finite two-sorted structure: sort S = [0, s_size), sort B = a list of
/// subsets of S, and R ⊆ S × B given by pairs (point, element position).
struct MembershipStructure {
    std::size_t s_size = 0;
    std::vector<IndexSet> algebra_elements;
    std::set<std::pair<std::size_t, std::size_t>> relation;

    [[nodiscard]] bool related(std::size_t point, std::size_t element) const
    {
        return relation.contains({point, element});
    }
    /// h(b) = R(S, b)
    [[nodiscard]] IndexSet column(std::size_t element) const;
};

/// S = [0,n), B = P(n) in mask order, R = membership. Self-checked.
/// Throws BoundExceeded for n outside [1, max_n].
[[nodiscard]] MembershipStructure membership_structure(std::size_t n);

struct MembershipReport {
    bool algebra_closed = true;
    bool relation_is_membership = true;
    bool homomorphism = true;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept
    {
        return algebra_closed && relation_is_membership && homomorphism;
    }
};

/// Checks that B contains S and is closed under ∩ and complement, that R is
/// membership, and that h: b ↦ R(S,b) preserves ∩, complement and the top
/// element (the finite form of the A_4 axiom scheme).
[[nodiscard]] MembershipReport check_membership(const MembershipStructure& ms);

/// The R-columns of the singleton elements and their unions, as a
/// union-closed family over S. Requires B = P(S) in mask order.
[[nodiscard]] UnionClosedFamily membership_columns(const MembershipStructure& ms);

}  // namespace patterna
