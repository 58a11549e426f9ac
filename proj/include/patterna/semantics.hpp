#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "patterna/graph.hpp"
#include "patterna/index_set.hpp"
#include "patterna/pattern.hpp"

namespace patterna {

/// A finite nonempty universe [0, m) and n subsets of it: the traces
/// φ(U, b_i) of a formula over parameters b_0..b_{n-1}.
class SetFamily {
public:
    SetFamily() = default;
    /// Throws InvalidInput if universe_size is 0 and IndexOutOfRange if a
    /// set leaves the universe.
    SetFamily(std::size_t universe_size, std::vector<IndexSet> sets);

    [[nodiscard]] std::size_t universe_size() const noexcept { return universe_size_; }
    [[nodiscard]] std::size_t size() const noexcept { return sets_.size(); }
    [[nodiscard]] const std::vector<IndexSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] const IndexSet& operator[](std::size_t i) const { return sets_.at(i); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    std::size_t universe_size_ = 1;
    std::vector<IndexSet> sets_;
};

/// A family indexed by every X ⊆ [0, m) (X encoded as Σ 2^i) whose sets are
/// unions of the singleton sets: B_X = ⋃_{i∈X} B_{i}.
class UnionClosedFamily {
public:
    /// Throws MalformedUnionMap when the set count is not a power of two or
    /// some B_X differs from the union of its singletons.
    explicit UnionClosedFamily(SetFamily base, std::vector<std::string> point_labels = {},
                               std::vector<std::string> parameter_labels = {});

    [[nodiscard]] const SetFamily& base() const noexcept { return base_; }
    /// m: the number of singleton indices.
    [[nodiscard]] std::size_t index_count() const noexcept { return index_count_; }
    [[nodiscard]] const IndexSet& at(const IndexSet& x) const;
    [[nodiscard]] const IndexSet& singleton(std::size_t i) const;
    /// Presentation metadata (atom names, primes); equal traces are all
    /// that matter semantically.
    [[nodiscard]] const std::vector<std::string>& point_labels() const noexcept { return point_labels_; }
    [[nodiscard]] const std::vector<std::string>& parameter_labels() const noexcept { return parameter_labels_; }

    /// Re-checks B_X = ⋃_{i∈X} B_{i} for every X.
    [[nodiscard]] bool unions_traced() const;

private:
    SetFamily base_;
    std::size_t index_count_ = 0;
    std::vector<std::string> point_labels_;
    std::vector<std::string> parameter_labels_;
};

/// ⋂_{i∈pos} sets[i] ∩ ⋂_{j∈neg} (U ∖ sets[j]); the universe when both parts
/// are empty. Throws IndexOutOfRange.
[[nodiscard]] IndexSet condition_trace(const SetFamily& fam, const Condition& c);

struct ConditionFailure {
    bool in_consistency = false;
    std::size_t position = 0;  // index into the pattern's C or I
    Condition condition;
};

struct ExhibitionReport {
    bool exhibits = true;
    std::vector<ConditionFailure> failures;

    explicit operator bool() const noexcept { return exhibits; }
};

/// Every C-trace nonempty, every I-trace empty. Throws ArityMismatch when
/// the family does not have exactly p.n() sets.
[[nodiscard]] ExhibitionReport check_exhibits(const SetFamily& fam, const Pattern& p);

/// {{i : x ∈ sets[i]} : x in the universe}: the complete types realized.
[[nodiscard]] std::set<IndexSet> realized_types(const SetFamily& fam);

/// The fully complete pattern whose C collects the realized complete types
/// and whose I collects all other complete splits.
[[nodiscard]] Pattern fully_complete_extension(const SetFamily& fam);

/// Cooper's 1^(n): unions traced, and for nonempty Y of singleton indices,
/// ⋂_{i∈Y} B_{i} = ∅ iff |Y| > n.
[[nodiscard]] bool check_one_n(const UnionClosedFamily& ufam, std::size_t n);

/// For every arity-subset S of the vertices: ⋂_{v∈S} sets[v] ≠ ∅ iff S is an
/// edge. Throws ArityMismatch when set and vertex counts differ.
[[nodiscard]] bool encodes_hypergraph(const SetFamily& fam, const Hypergraph& h);

}  // namespace patterna
