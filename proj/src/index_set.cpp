#include "patterna/index_set.hpp"

#include <algorithm>
#include <iterator>

#include "patterna/error.hpp"

namespace patterna {

IndexSet::IndexSet(std::initializer_list<Index> items) : IndexSet(std::vector<Index>(items)) {}

IndexSet::IndexSet(std::vector<Index> items) : items_(std::move(items))
{
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

IndexSet IndexSet::from_mask(std::uint64_t mask)
{
    IndexSet s;
    for (Index i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1U)
            s.items_.push_back(i);
    return s;
}

IndexSet IndexSet::range(std::size_t n)
{
    IndexSet s;
    s.items_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.items_[i] = static_cast<Index>(i);
    return s;
}

bool IndexSet::contains(Index i) const noexcept
{
    return std::binary_search(items_.begin(), items_.end(), i);
}

bool IndexSet::is_subset_of(const IndexSet& other) const noexcept
{
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

bool IndexSet::intersects(const IndexSet& other) const noexcept
{
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
        if (*a == *b)
            return true;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return false;
}

std::uint64_t IndexSet::to_mask() const
{
    std::uint64_t m = 0;
    for (Index i : items_) {
        if (i >= 64)
            throw Error(ErrorCode::BoundExceeded, "index " + std::to_string(i) + " does not fit a 64-bit mask");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

IndexSet IndexSet::united(const IndexSet& other) const
{
    IndexSet out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out.items_));
    return out;
}

IndexSet IndexSet::intersected(const IndexSet& other) const
{
    IndexSet out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out.items_));
    return out;
}

IndexSet IndexSet::minus(const IndexSet& other) const
{
    IndexSet out;
    std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
    return out;
}

IndexSet IndexSet::complement(std::size_t n) const
{
    return range(n).minus(*this);
}

IndexSet IndexSet::shifted(Index offset) const
{
    IndexSet out = *this;
    for (auto& i : out.items_)
        i += offset;
    return out;
}

void IndexSet::insert(Index i)
{
    auto it = std::lower_bound(items_.begin(), items_.end(), i);
    if (it == items_.end() || *it != i)
        items_.insert(it, i);
}

}  // namespace patterna
