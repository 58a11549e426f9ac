#include "patterna/constructions.hpp"

#include <algorithm>
#include <map>

#include "patterna/error.hpp"
#include "patterna/limits.hpp"

namespace patterna {

namespace {

void verify_exhibits(const SetFamily& fam, const Pattern& p, const char* who)
{
    auto report = check_exhibits(fam, p);
    if (!report)
        throw Error(ErrorCode::VerificationFailure, std::string(who) + " produced a family failing " +
                                                        std::to_string(report.failures.size()) + " condition(s)");
}

void require_reasonable_positive(const Pattern& p)
{
    auto f = classify(p);
    if (!f.reasonable || !f.positive)
        throw Error(ErrorCode::NotReasonablePositive, "pattern must be reasonable and positive");
}

// The memberships i ∈ Y_j, transposed: sets[i] = {j : i ∈ Y_j}.
std::vector<IndexSet> transpose_consistency(const Pattern& p)
{
    std::vector<IndexSet> sets(p.n());
    const auto& cs = p.consistency();
    for (std::size_t j = 0; j < cs.size(); ++j)
        for (auto i : cs[j].pos)
            sets[i].insert(static_cast<Index>(j));
    return sets;
}

// Elements of the finite atomic algebra that the fully-complete proof uses:
// atoms carry an id, the one non-atom does not.
struct AlgebraPoint {
    bool atom = false;
    std::size_t atom_id = 0;
};

// Parameter (b, w0, w1) of φ(x; y w0 w1) = (ψ ∧ w0 = w1) ∨ (¬ψ ∧ w0 ≠ w1)
// with ψ(x; y) = At(x) ∧ x ≤ y. `below` lists the atoms under b.
struct MarkedParameter {
    IndexSet below;
    bool markers_equal = true;
};

bool phi(const AlgebraPoint& x, const MarkedParameter& b)
{
    const bool psi = x.atom && b.below.contains(static_cast<Index>(x.atom_id));
    return psi == b.markers_equal;
}

}  // namespace

SetFamily powerset_sm_witness(const Pattern& p)
{
    if (!classify(p).fully_complete)
        throw Error(ErrorCode::NotFullyComplete, "pattern is not fully complete");
    const auto n = p.n();
    const auto& cs = p.consistency();
    const auto k = cs.size();

    // points 0..k-1 are the atoms a_j, k is a further atom, k+1 a non-atom
    std::vector<AlgebraPoint> points;
    for (std::size_t j = 0; j <= k; ++j)
        points.push_back({true, j});
    points.push_back({false, 0});

    const auto empty_split = complete_condition({}, n);
    const bool empty_type_excluded =
        std::binary_search(p.inconsistency().begin(), p.inconsistency().end(), empty_split);

    std::vector<MarkedParameter> params(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = static_cast<Index>(i);
        const bool flip = empty_type_excluded && cs[0].pos.contains(idx);
        for (std::size_t j = 0; j < k; ++j)
            if (cs[j].pos.contains(idx) != flip)
                params[i].below.insert(static_cast<Index>(j));
        params[i].markers_equal = !flip;
    }

    std::vector<IndexSet> sets(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < points.size(); ++x)
            if (phi(points[x], params[i]))
                sets[i].insert(static_cast<Index>(x));
    SetFamily fam(points.size(), std::move(sets));
    verify_exhibits(fam, p, "powerset_sm_witness");
    return fam;
}

SetFamily atomless_pm_witness(const Pattern& p)
{
    require_reasonable_positive(p);
    if (p.consistency().empty()) {
        SetFamily fam(1, std::vector<IndexSet>(p.n()));
        verify_exhibits(fam, p, "atomless_pm_witness");
        return fam;
    }
    SetFamily fam(p.consistency().size(), transpose_consistency(p));
    verify_exhibits(fam, p, "atomless_pm_witness");
    return fam;
}

SetFamily canonical_char_family(std::size_t k)
{
    if (k > 20)
        throw Error(ErrorCode::BoundExceeded, "characterization family has 2^k sets");
    std::vector<IndexSet> sets;
    sets.reserve(std::size_t{1} << k);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x)
        sets.push_back(IndexSet::from_mask(x));
    return SetFamily(std::max<std::size_t>(k, 1), std::move(sets));
}

bool has_char_property(const SetFamily& char_fam, std::size_t k)
{
    if (k > 4)
        throw Error(ErrorCode::BoundExceeded, "characterization check enumerates 2^(2^k) families");
    const std::size_t width = std::size_t{1} << k;
    if (char_fam.size() != width)
        throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(width) + " sets");
    const std::uint64_t full = width - 1;
    for (std::uint64_t z = 1; z < (std::uint64_t{1} << width); ++z) {
        std::uint64_t meet = full;
        IndexSet traces = IndexSet::range(char_fam.universe_size());
        for (std::size_t x = 0; x < width; ++x)
            if (z >> x & 1U) {
                meet &= x;
                traces = traces.intersected(char_fam[x]);
            }
        if ((meet != 0) == traces.empty())
            return false;
    }
    return true;
}

SetFamily pm_char_reduction(const SetFamily& char_fam, const Pattern& p)
{
    require_reasonable_positive(p);
    const auto k = p.consistency().size();
    if (k > 20)
        throw Error(ErrorCode::BoundExceeded, "too many consistency conditions");
    if (char_fam.size() != (std::size_t{1} << k))
        throw Error(ErrorCode::ArityMismatch, "characterization family needs 2^" + std::to_string(k) + " sets");
    if (k <= 4 && !has_char_property(char_fam, k))
        throw Error(ErrorCode::CharacterizationPropertyViolated,
                    "traces do not intersect exactly when the index families do");
    auto memberships = transpose_consistency(p);
    std::vector<IndexSet> sets;
    sets.reserve(p.n());
    for (const auto& m : memberships)
        sets.push_back(char_fam[m.to_mask()]);
    SetFamily fam(char_fam.universe_size(), std::move(sets));
    verify_exhibits(fam, p, "pm_char_reduction");
    return fam;
}

SetFamily cm_from_doubled_witness(const SetFamily& w, const Pattern& p)
{
    auto doubled = double_positive(p);
    if (w.size() != doubled.n() || !check_exhibits(w, doubled))
        throw Error(ErrorCode::PreconditionFailure, "family does not exhibit the doubled pattern");
    std::vector<IndexSet> sets(w.sets().begin(), w.sets().begin() + static_cast<std::ptrdiff_t>(p.n()));
    SetFamily fam(w.universe_size(), std::move(sets));
    verify_exhibits(fam, p, "cm_from_doubled_witness");
    return fam;
}

SetFamily ip_family(std::size_t n, std::size_t max_n)
{
    if (n > max_n || n > 24)
        throw Error(ErrorCode::BoundExceeded, "ip_family(" + std::to_string(n) + ") exceeds bound " +
                                                  std::to_string(max_n));
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<IndexSet> sets(n);
    for (std::uint64_t x = 0; x < count; ++x)
        for (std::size_t i = 0; i < n; ++i)
            if (x >> i & 1U)
                sets[i].insert(static_cast<Index>(x));
    return SetFamily(count, std::move(sets));
}

SetFamily ip_family(std::size_t n)
{
    return ip_family(n, limits().max_n);
}

namespace {

std::vector<unsigned> first_primes(std::size_t n)
{
    std::vector<unsigned> primes;
    for (unsigned c = 2; primes.size() < n; ++c)
        if (std::none_of(primes.begin(), primes.end(), [c](unsigned q) { return c % q == 0; }))
            primes.push_back(c);
    return primes;
}

// Decimal digits, least significant first, times a small factor.
void multiply_decimal(std::string& digits, unsigned factor)
{
    unsigned carry = 0;
    for (auto& d : digits) {
        const unsigned v = static_cast<unsigned>(d - '0') * factor + carry;
        d = static_cast<char>('0' + v % 10);
        carry = v / 10;
    }
    for (; carry > 0; carry /= 10)
        digits.push_back(static_cast<char>('0' + carry % 10));
}

}  // namespace

UnionClosedFamily disjoint_one1_family(std::size_t n, One1Flavor flavor)
{
    if (n == 0)
        throw Error(ErrorCode::UnsupportedParams, "1^(1) family needs n >= 1");
    if (n > limits().max_n || n > 20)
        throw Error(ErrorCode::BoundExceeded, "1^(1) family has 2^n parameters");
    std::vector<IndexSet> sets;
    std::vector<std::string> point_labels;
    std::vector<std::string> parameter_labels;
    const auto primes = first_primes(n);
    for (std::size_t i = 0; i < n; ++i)
        point_labels.push_back(flavor == One1Flavor::Atoms ? "a" + std::to_string(i) : std::to_string(primes[i]));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        sets.push_back(IndexSet::from_mask(x));
        if (flavor == One1Flavor::Skolem) {
            std::string product = "1";
            for (std::size_t i = 0; i < n; ++i)
                if (x >> i & 1U)
                    multiply_decimal(product, primes[i]);
            std::reverse(product.begin(), product.end());
            parameter_labels.push_back(product);
        } else {
            std::string join;
            for (std::size_t i = 0; i < n; ++i)
                if (x >> i & 1U)
                    join += (join.empty() ? "" : "|") + point_labels[i];
            parameter_labels.push_back(join.empty() ? "0" : join);
        }
    }
    UnionClosedFamily fam(SetFamily(n, std::move(sets)), std::move(point_labels), std::move(parameter_labels));
    if (!check_one_n(fam, 1))
        throw Error(ErrorCode::VerificationFailure, "disjoint family does not admit 1^(1)");
    return fam;
}

IndexSet MembershipStructure::column(std::size_t element) const
{
    IndexSet out;
    for (std::size_t i = 0; i < s_size; ++i)
        if (related(i, element))
            out.insert(static_cast<Index>(i));
    return out;
}

MembershipStructure membership_structure(std::size_t n)
{
    if (n < 1 || n > std::min<std::size_t>(limits().max_n, 12))
        throw Error(ErrorCode::BoundExceeded, "membership structure needs 1 <= n <= bound");
    MembershipStructure ms;
    ms.s_size = n;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        ms.algebra_elements.push_back(IndexSet::from_mask(x));
        for (std::size_t i = 0; i < n; ++i)
            if (x >> i & 1U)
                ms.relation.insert({i, static_cast<std::size_t>(x)});
    }
    auto report = check_membership(ms);
    if (!report.ok())
        throw Error(ErrorCode::VerificationFailure, "membership structure: " + report.violations.front());
    if (!check_one_n(membership_columns(ms), 1))
        throw Error(ErrorCode::VerificationFailure, "membership columns do not admit 1^(1)");
    return ms;
}

MembershipReport check_membership(const MembershipStructure& ms)
{
    MembershipReport rep;
    const auto& elems = ms.algebra_elements;
    const auto full = IndexSet::range(ms.s_size);
    std::map<IndexSet, std::size_t> position;
    for (std::size_t e = 0; e < elems.size(); ++e) {
        if (elems[e].bound() > ms.s_size) {
            rep.algebra_closed = false;
            rep.violations.push_back("element " + std::to_string(e) + " is not a subset of S");
        }
        position.emplace(elems[e], e);
    }
    auto find = [&](const IndexSet& s) -> std::optional<std::size_t> {
        auto it = position.find(s);
        if (it == position.end())
            return std::nullopt;
        return it->second;
    };

    auto top = find(full);
    if (!top) {
        rep.algebra_closed = false;
        rep.violations.push_back("S itself is not an element");
    }
    for (const auto& [p, e] : ms.relation)
        if (p >= ms.s_size || e >= elems.size()) {
            rep.relation_is_membership = false;
            rep.violations.push_back("R pair (" + std::to_string(p) + ", " + std::to_string(e) + ") leaves the sorts");
        }
    for (std::size_t e = 0; e < elems.size(); ++e)
        for (std::size_t i = 0; i < ms.s_size; ++i)
            if (ms.related(i, e) != elems[e].contains(static_cast<Index>(i))) {
                rep.relation_is_membership = false;
                rep.violations.push_back("R(" + std::to_string(i) + ", " + std::to_string(e) +
                                         ") disagrees with membership");
            }

    if (top && ms.column(*top) != full) {
        rep.homomorphism = false;
        rep.violations.push_back("h(1) != S");
    }
    for (std::size_t a = 0; a < elems.size(); ++a) {
        auto comp = find(elems[a].complement(ms.s_size));
        if (!comp) {
            rep.algebra_closed = false;
            rep.violations.push_back("complement of element " + std::to_string(a) + " missing");
        } else if (ms.column(*comp) != ms.column(a).complement(ms.s_size)) {
            rep.homomorphism = false;
            rep.violations.push_back("h does not preserve the complement of element " + std::to_string(a));
        }
        for (std::size_t b = a; b < elems.size(); ++b) {
            auto meet = find(elems[a].intersected(elems[b]));
            if (!meet) {
                rep.algebra_closed = false;
                rep.violations.push_back("meet of elements " + std::to_string(a) + ", " + std::to_string(b) +
                                         " missing");
            } else if (ms.column(*meet) != ms.column(a).intersected(ms.column(b))) {
                rep.homomorphism = false;
                rep.violations.push_back("h does not preserve the meet of elements " + std::to_string(a) + ", " +
                                         std::to_string(b));
            }
        }
    }
    return rep;
}

UnionClosedFamily membership_columns(const MembershipStructure& ms)
{
    const std::uint64_t count = std::uint64_t{1} << ms.s_size;
    if (ms.algebra_elements.size() != count)
        throw Error(ErrorCode::InvalidInput, "algebra is not the full power set of S");
    std::vector<IndexSet> cols;
    for (std::uint64_t x = 0; x < count; ++x) {
        if (ms.algebra_elements[x] != IndexSet::from_mask(x))
            throw Error(ErrorCode::InvalidInput, "algebra elements are not in mask order");
        cols.push_back(ms.column(x));
    }
    return UnionClosedFamily(SetFamily(ms.s_size, std::move(cols)));
}

}  // namespace patterna
