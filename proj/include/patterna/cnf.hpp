#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace patterna {

struct Literal {
    std::size_t variable = 0;
    bool negated = false;

    [[nodiscard]] Literal operator~() const noexcept { return {variable, !negated}; }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal pos_lit(std::size_t v) { return {v, false}; }
inline Literal neg_lit(std::size_t v) { return {v, true}; }

using Clause = std::vector<Literal>;

/// A CNF formula in normal form: every clause sorted with no repeated
/// literal, tautological clauses dropped, clause list sorted and deduplicated.
class CnfFormula {
public:
    CnfFormula() = default;
    /// Normalizes `clauses`; throws InvalidInput on a literal whose variable
    /// is not below `variable_count`.
    CnfFormula(std::size_t variable_count, std::vector<Clause> clauses);

    [[nodiscard]] std::size_t variable_count() const noexcept { return variable_count_; }
    [[nodiscard]] const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    [[nodiscard]] bool has_empty_clause() const noexcept;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

private:
    std::size_t variable_count_ = 0;
    std::vector<Clause> clauses_;
};

using Assignment = std::vector<bool>;

[[nodiscard]] bool satisfies(const CnfFormula& f, const Assignment& a);

/// DPLL with unit propagation and pure-literal elimination. Branches on the
/// lowest-index unassigned variable, trying true first; variables left
/// unassigned once every clause is satisfied are set to true. Returns a total
/// satisfying assignment, or nullopt when `f` is unsatisfiable.
[[nodiscard]] std::optional<Assignment> sat_solve(const CnfFormula& f);

/// DIMACS CNF text: "p cnf V C" header, 1-based variables, each clause on
/// its own line terminated by 0.
[[nodiscard]] std::string export_dimacs(const CnfFormula& f);
/// Parses DIMACS CNF. Comment lines ("c ...") are skipped; clauses may span
/// lines. Throws ParseError naming the offending line.
[[nodiscard]] CnfFormula import_dimacs(std::string_view text);

}  // namespace patterna
