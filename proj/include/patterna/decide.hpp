#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "patterna/cnf.hpp"
#include "patterna/pattern.hpp"
#include "patterna/semantics.hpp"

namespace patterna {

/// Marks a pattern with C = ∅ whose inconsistency conditions alone exclude
/// every complete type, so no nonempty universe can exhibit it.
struct EmptyUniverse {
    friend bool operator==(const EmptyUniverse&, const EmptyUniverse&) = default;
};

using FailingCondition = std::variant<Condition, EmptyUniverse>;

struct Decision {
    bool exhibitable = false;
    std::optional<SetFamily> witness;         // present iff exhibitable
    std::optional<FailingCondition> failing;  // present iff not exhibitable
};

/// The CNF whose models are the complete types X ⊆ [0,n) that extend `c`
/// and extend no inconsistency condition of `p`: unit x_i for i ∈ c.pos,
/// unit ¬x_j for j ∈ c.neg, and one clause ⋁_{i∈Z⁺} ¬x_i ∨ ⋁_{j∈Z⁻} x_j per
/// (Z⁺,Z⁻) ∈ I.
[[nodiscard]] CnfFormula condition_cnf(const Pattern& p, const Condition& c);
/// The same formula without unit clauses; satisfiable iff some complete
/// type survives I.
[[nodiscard]] CnfFormula sentinel_cnf(const Pattern& p);

/// Decides exhibitability by SAT: every consistency condition must have a
/// surviving complete type (and, when C = ∅, some type must survive at
/// all). The witness's universe is the list of chosen types, deduplicated,
/// with sets[i] = {points whose type contains i}. The witness is checked
/// with check_exhibits before it is returned; a failed check throws
/// WitnessVerificationFailure.
[[nodiscard]] Decision decide_exhibitable(const Pattern& p);

/// Same contract, by scanning all 2^n complete types in increasing
/// mask order. Throws BoundExceeded when n > max_n.
[[nodiscard]] Decision brute_force_exhibitable(const Pattern& p, std::size_t max_n);
[[nodiscard]] Decision brute_force_exhibitable(const Pattern& p);

}  // namespace patterna
