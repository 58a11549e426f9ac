#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace patterna {

using Index = std::uint32_t;

/// A finite set of nonnegative integers, stored sorted and without repeats.
///
/// Used for the positive/negative parts of conditions, for the sets of a
/// family (subsets of the universe), for hyperedges and cliques.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<Index> items);
    explicit IndexSet(std::vector<Index> items);

    /// {i : bit i of mask is set}
    static IndexSet from_mask(std::uint64_t mask);
    /// [0, n)
    static IndexSet range(std::size_t n);

    [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
    [[nodiscard]] bool contains(Index i) const noexcept;
    [[nodiscard]] bool is_subset_of(const IndexSet& other) const noexcept;
    [[nodiscard]] bool intersects(const IndexSet& other) const noexcept;
    [[nodiscard]] std::uint64_t to_mask() const;
    /// Largest element plus one, 0 for the empty set.
    [[nodiscard]] std::size_t bound() const noexcept { return items_.empty() ? 0 : items_.back() + 1; }

    [[nodiscard]] IndexSet united(const IndexSet& other) const;
    [[nodiscard]] IndexSet intersected(const IndexSet& other) const;
    [[nodiscard]] IndexSet minus(const IndexSet& other) const;
    /// [0, n) minus this set.
    [[nodiscard]] IndexSet complement(std::size_t n) const;
    /// {i + offset : i in this set}
    [[nodiscard]] IndexSet shifted(Index offset) const;

    void insert(Index i);

    [[nodiscard]] std::span<const Index> items() const noexcept { return items_; }
    [[nodiscard]] auto begin() const noexcept { return items_.begin(); }
    [[nodiscard]] auto end() const noexcept { return items_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b)
    {
        return a.items_ <=> b.items_;
    }

private:
    std::vector<Index> items_;
};

}  // namespace patterna
