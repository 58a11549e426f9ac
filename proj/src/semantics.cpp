#include "patterna/semantics.hpp"

#include <bit>

#include "patterna/error.hpp"

namespace patterna {

SetFamily::SetFamily(std::size_t universe_size, std::vector<IndexSet> sets)
    : universe_size_(universe_size), sets_(std::move(sets))
{
    if (universe_size_ == 0)
        throw Error(ErrorCode::InvalidInput, "set family universe must be nonempty");
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (sets_[i].bound() > universe_size_)
            throw Error(ErrorCode::IndexOutOfRange, "set " + std::to_string(i) + " leaves the universe [0, " +
                                                        std::to_string(universe_size_) + ")");
}

UnionClosedFamily::UnionClosedFamily(SetFamily base, std::vector<std::string> point_labels,
                                     std::vector<std::string> parameter_labels)
    : base_(std::move(base)), point_labels_(std::move(point_labels)), parameter_labels_(std::move(parameter_labels))
{
    const auto count = base_.size();
    if (count == 0 || !std::has_single_bit(count) || count > (std::size_t{1} << 20))
        throw Error(ErrorCode::MalformedUnionMap,
                    "expected 2^m sets indexed by subsets, got " + std::to_string(count));
    index_count_ = static_cast<std::size_t>(std::countr_zero(count));
    if (!unions_traced())
        throw Error(ErrorCode::MalformedUnionMap, "some B_X is not the union of its singletons");
}

const IndexSet& UnionClosedFamily::at(const IndexSet& x) const
{
    return base_[x.to_mask()];
}

const IndexSet& UnionClosedFamily::singleton(std::size_t i) const
{
    return base_[std::size_t{1} << i];
}

bool UnionClosedFamily::unions_traced() const
{
    for (std::size_t x = 0; x < base_.size(); ++x) {
        IndexSet u;
        for (std::size_t i = 0; i < index_count_; ++i)
            if (x >> i & 1U)
                u = u.united(singleton(i));
        if (u != base_[x])
            return false;
    }
    return true;
}

IndexSet condition_trace(const SetFamily& fam, const Condition& c)
{
    if (c.pos.bound() > fam.size() || c.neg.bound() > fam.size())
        throw Error(ErrorCode::IndexOutOfRange, "condition refers to a set the family does not have");
    IndexSet t = IndexSet::range(fam.universe_size());
    for (auto i : c.pos) {
        t = t.intersected(fam[i]);
        if (t.empty())
            return t;
    }
    for (auto j : c.neg) {
        t = t.minus(fam[j]);
        if (t.empty())
            return t;
    }
    return t;
}

ExhibitionReport check_exhibits(const SetFamily& fam, const Pattern& p)
{
    if (fam.size() != p.n())
        throw Error(ErrorCode::ArityMismatch, "family has " + std::to_string(fam.size()) + " sets, pattern has n = " +
                                                  std::to_string(p.n()));
    ExhibitionReport report;
    const auto& cs = p.consistency();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (condition_trace(fam, cs[k]).empty())
            report.failures.push_back({true, k, cs[k]});
    const auto& is = p.inconsistency();
    for (std::size_t k = 0; k < is.size(); ++k)
        if (!condition_trace(fam, is[k]).empty())
            report.failures.push_back({false, k, is[k]});
    report.exhibits = report.failures.empty();
    return report;
}

std::set<IndexSet> realized_types(const SetFamily& fam)
{
    std::vector<IndexSet> types(fam.universe_size());
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (auto x : fam[i])
            types[x].insert(static_cast<Index>(i));
    return {types.begin(), types.end()};
}

Pattern fully_complete_extension(const SetFamily& fam)
{
    const auto n = fam.size();
    if (n >= 31)
        throw Error(ErrorCode::BoundExceeded, "fully complete extension enumerates 2^n splits");
    auto realized = realized_types(fam);
    std::vector<Condition> cons;
    std::vector<Condition> inc;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        auto type = IndexSet::from_mask(x);
        auto c = complete_condition(type, n);
        if (n == 0)
            break;  // the only split is (∅,∅), which is not a condition
        (realized.contains(type) ? cons : inc).push_back(std::move(c));
    }
    return Pattern::make(n, std::move(cons), std::move(inc));
}

bool check_one_n(const UnionClosedFamily& ufam, std::size_t n)
{
    if (!ufam.unions_traced())
        return false;
    const auto m = ufam.index_count();
    for (std::uint64_t y = 1; y < (std::uint64_t{1} << m); ++y) {
        IndexSet meet = IndexSet::range(ufam.base().universe_size());
        for (std::size_t i = 0; i < m; ++i)
            if (y >> i & 1U)
                meet = meet.intersected(ufam.singleton(i));
        const bool empty_expected = static_cast<std::size_t>(std::popcount(y)) > n;
        if (meet.empty() != empty_expected)
            return false;
    }
    return true;
}

bool encodes_hypergraph(const SetFamily& fam, const Hypergraph& h)
{
    if (fam.size() != h.vertex_count())
        throw Error(ErrorCode::ArityMismatch, "family has " + std::to_string(fam.size()) + " sets, hypergraph has " +
                                                  std::to_string(h.vertex_count()) + " vertices");
    for (const auto& s : k_subsets(h.vertex_count(), h.arity())) {
        IndexSet meet = IndexSet::range(fam.universe_size());
        for (auto v : s)
            meet = meet.intersected(fam[v]);
        if (meet.empty() == h.has_edge(s))
            return false;
    }
    return true;
}

}  // namespace patterna
