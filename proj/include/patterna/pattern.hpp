#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "patterna/cnf.hpp"
#include "patterna/index_set.hpp"

namespace patterna {

/// A pair (positive part, negative part) of index sets, never both empty.
struct Condition {
    IndexSet pos;
    IndexSet neg;

    /// Coordinatewise inclusion: pos ⊆ other.pos and neg ⊆ other.neg.
    [[nodiscard]] bool is_contained_in(const Condition& other) const noexcept
    {
        return pos.is_subset_of(other.pos) && neg.is_subset_of(other.neg);
    }
    /// pos ∩ neg = ∅
    [[nodiscard]] bool is_disjoint() const noexcept { return !pos.intersects(neg); }
    /// A complete split (X, n∖X).
    [[nodiscard]] bool is_complete(std::size_t n) const;

    friend bool operator==(const Condition&, const Condition&) = default;
    friend auto operator<=>(const Condition&, const Condition&) = default;
};

/// The complete condition (X, n∖X).
[[nodiscard]] Condition complete_condition(const IndexSet& x, std::size_t n);

enum class ValidationMode { Strict, Lenient };

/// Unvalidated pattern data, as read from a file or assembled by hand.
struct RawCondition {
    std::vector<std::int64_t> pos;
    std::vector<std::int64_t> neg;
};

struct RawPattern {
    std::int64_t n = 0;
    std::vector<RawCondition> consistency;
    std::vector<RawCondition> inconsistency;
};

/// An n-pattern: a consistency set C and an inconsistency set I of
/// conditions over indices [0, n).
///
/// Instances only exist in canonical form: each set sorted by (pos, neg)
/// with no duplicates, every index below n, no (∅,∅) condition.
class Pattern {
public:
    Pattern() = default;

    /// Checks and normalizes. Throws IndexOutOfRange, EmptyCondition, or (in
    /// strict mode) DuplicateCondition.
    static Pattern make(std::size_t n, std::vector<Condition> consistency,
                        std::vector<Condition> inconsistency,
                        ValidationMode mode = ValidationMode::Strict);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<Condition>& consistency() const noexcept { return consistency_; }
    [[nodiscard]] const std::vector<Condition>& inconsistency() const noexcept { return inconsistency_; }
    [[nodiscard]] bool empty() const noexcept { return consistency_.empty() && inconsistency_.empty(); }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Condition> consistency_;
    std::vector<Condition> inconsistency_;
};

[[nodiscard]] Pattern validate_pattern(const RawPattern& raw,
                                       ValidationMode mode = ValidationMode::Strict);

struct PatternFlags {
    bool reasonable = false;
    bool positive = false;
    bool complete = false;
    bool fully_complete = false;
    /// Set iff I is nonempty, positive, and all its conditions have the same
    /// size k; that k.
    std::optional<std::size_t> k_bounded;
    /// Largest |Z⁺| over I when I is positive (0 for I = ∅).
    std::optional<std::size_t> max_inconsistency_size;

    /// The pattern is admissible for PM^(k): I positive and every
    /// inconsistency condition of size exactly k (vacuous for I = ∅).
    [[nodiscard]] bool bounded_by(std::size_t k) const noexcept
    {
        return max_inconsistency_size.has_value() &&
               (*max_inconsistency_size == 0 || k_bounded == k);
    }

    friend bool operator==(const PatternFlags&, const PatternFlags&) = default;
};

[[nodiscard]] PatternFlags classify(const Pattern& p);

enum class DivLine { OP, IP, SOP, kTP, TP1, kTP2, CM, Cooper, PMchar };

[[nodiscard]] std::optional<DivLine> parse_divline(std::string_view name);
[[nodiscard]] std::string_view to_string(DivLine kind);

/// Size parameters. OP/IP/SOP/CM/Cooper/PMchar read `n`. Tree families read
/// `branching` and `depth` (nodes are sequences of length 0..depth, indexed
/// in level order with the root at 0); kTP2 reads `branching` as the row
/// width and `depth` as the number of rows (row-major indices). kTP and
/// kTP2 also read `k`.
struct DivLineParams {
    std::size_t n = 0;
    std::size_t branching = 0;
    std::size_t depth = 0;
    std::size_t k = 0;
};

/// The pattern family characterizing a dividing line. Subset-indexed
/// families (Cooper, PMchar) index X ⊆ [0,n) by Σ_{i∈X} 2^i.
/// Throws UnsupportedParams for parameters outside the family's domain or
/// above the enumeration bounds.
[[nodiscard]] Pattern gen_divline(DivLine kind, const DivLineParams& params);

/// The (m+1)-pattern with C = {({m},∅)} and one inconsistency condition per
/// clause c: ({j : ¬v_j ∈ c}, {i : v_i ∈ c}). Exhibitable iff f is
/// satisfiable. An empty clause yields ({m},∅) ∈ I, which makes the result
/// unreasonable and not exhibitable.
[[nodiscard]] Pattern pattern_from_cnf(const CnfFormula& f);

/// For a reasonable pattern (C, ∅) on n indices: the positive 2n-pattern
/// C' = {(A⁺ ∪ (n+A⁻), ∅)}, I' = {({i, n+i}, ∅) : i < n}.
/// Throws NotConsistencyPattern if I ≠ ∅ or p is not reasonable.
[[nodiscard]] Pattern double_positive(const Pattern& p);

}  // namespace patterna
