#include "patterna/pattern.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "patterna/error.hpp"
#include "patterna/graph.hpp"
#include "patterna/limits.hpp"

namespace patterna {

bool Condition::is_complete(std::size_t n) const
{
    return is_disjoint() && pos.size() + neg.size() == n && pos.bound() <= n && neg.bound() <= n;
}

Condition complete_condition(const IndexSet& x, std::size_t n)
{
    return {x, x.complement(n)};
}

namespace {

void normalize_side(std::vector<Condition>& side, std::size_t n, ValidationMode mode, const char* name)
{
    for (const auto& c : side) {
        if (c.pos.empty() && c.neg.empty())
            throw Error(ErrorCode::EmptyCondition, std::string("(∅,∅) in ") + name);
        if (c.pos.bound() > n || c.neg.bound() > n)
            throw Error(ErrorCode::IndexOutOfRange,
                        std::string("condition in ") + name + " uses an index >= n = " + std::to_string(n));
    }
    std::sort(side.begin(), side.end());
    auto dup = std::adjacent_find(side.begin(), side.end());
    if (dup != side.end()) {
        if (mode == ValidationMode::Strict)
            throw Error(ErrorCode::DuplicateCondition, std::string("repeated condition in ") + name);
        side.erase(std::unique(side.begin(), side.end()), side.end());
    }
}

IndexSet checked_indices(const std::vector<std::int64_t>& raw, std::int64_t n)
{
    std::vector<Index> out;
    out.reserve(raw.size());
    for (auto i : raw) {
        if (i < 0 || i >= n)
            throw Error(ErrorCode::IndexOutOfRange,
                        "index " + std::to_string(i) + " outside [0, " + std::to_string(n) + ")");
        out.push_back(static_cast<Index>(i));
    }
    return IndexSet(std::move(out));
}

}  // namespace

Pattern Pattern::make(std::size_t n, std::vector<Condition> consistency, std::vector<Condition> inconsistency,
                      ValidationMode mode)
{
    normalize_side(consistency, n, mode, "consistency");
    normalize_side(inconsistency, n, mode, "inconsistency");
    Pattern p;
    p.n_ = n;
    p.consistency_ = std::move(consistency);
    p.inconsistency_ = std::move(inconsistency);
    return p;
}

Pattern validate_pattern(const RawPattern& raw, ValidationMode mode)
{
    if (raw.n < 0)
        throw Error(ErrorCode::InvalidInput, "negative index count");
    auto convert = [&](const std::vector<RawCondition>& side) {
        std::vector<Condition> out;
        out.reserve(side.size());
        for (const auto& rc : side)
            out.push_back({checked_indices(rc.pos, raw.n), checked_indices(rc.neg, raw.n)});
        return out;
    };
    return Pattern::make(static_cast<std::size_t>(raw.n), convert(raw.consistency), convert(raw.inconsistency),
                         mode);
}

PatternFlags classify(const Pattern& p)
{
    const auto& cs = p.consistency();
    const auto& is = p.inconsistency();
    PatternFlags f;

    f.reasonable = std::all_of(cs.begin(), cs.end(), [](const Condition& c) { return c.is_disjoint(); }) &&
                   std::all_of(is.begin(), is.end(), [](const Condition& c) { return c.is_disjoint(); });
    for (const auto& z : is) {
        if (!f.reasonable)
            break;
        for (const auto& y : cs)
            if (z.is_contained_in(y)) {
                f.reasonable = false;
                break;
            }
    }

    auto no_neg = [](const Condition& c) { return c.neg.empty(); };
    bool positive_i = std::all_of(is.begin(), is.end(), no_neg);
    f.positive = positive_i && std::all_of(cs.begin(), cs.end(), no_neg);

    auto complete = [&](const Condition& c) { return c.is_complete(p.n()); };
    f.complete = !p.empty() && std::all_of(cs.begin(), cs.end(), complete) &&
                 std::all_of(is.begin(), is.end(), complete);

    if (f.complete && !cs.empty() && p.n() < 63) {
        bool shared = std::any_of(cs.begin(), cs.end(), [&](const Condition& c) {
            return std::binary_search(is.begin(), is.end(), c);
        });
        // complete, duplicate-free and C ∩ I = ∅: every split is covered once
        // iff the two sets together have 2^n elements
        f.fully_complete = !shared && cs.size() + is.size() == (std::size_t{1} << p.n());
    }

    if (positive_i) {
        std::size_t largest = 0;
        for (const auto& z : is)
            largest = std::max(largest, z.pos.size());
        f.max_inconsistency_size = largest;
        if (!is.empty() && std::all_of(is.begin(), is.end(),
                                       [&](const Condition& z) { return z.pos.size() == is.front().pos.size(); }))
            f.k_bounded = is.front().pos.size();
    }
    return f;
}

namespace {

constexpr std::array<std::pair<DivLine, std::string_view>, 9> kDivLineNames{{
    {DivLine::OP, "op"},
    {DivLine::IP, "ip"},
    {DivLine::SOP, "sop"},
    {DivLine::kTP, "ktp"},
    {DivLine::TP1, "tp1"},
    {DivLine::kTP2, "ktp2"},
    {DivLine::CM, "cm"},
    {DivLine::Cooper, "cooper"},
    {DivLine::PMchar, "pmchar"},
}};

[[noreturn]] void unsupported(const std::string& msg)
{
    throw Error(ErrorCode::UnsupportedParams, msg);
}

constexpr std::size_t kMaxGeneratedIndices = 1U << 14;
constexpr std::size_t kMaxPaths = 1U << 16;

struct Tree {
    std::vector<std::size_t> parent;  // parent[0] unused
    std::vector<std::size_t> depth;
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::size_t> leaves;
};

// Sequences over [0,b) of length 0..d, level order (root = 0), siblings in
// increasing last coordinate.
Tree build_tree(std::size_t b, std::size_t d)
{
    std::size_t count = 1;
    std::size_t level = 1;
    for (std::size_t l = 1; l <= d; ++l) {
        level *= b;
        count += level;
        if (count > kMaxGeneratedIndices || level > kMaxPaths)
            unsupported("tree with branching " + std::to_string(b) + " and depth " + std::to_string(d) +
                        " is too large");
    }
    Tree t;
    t.parent.assign(1, 0);
    t.depth.assign(1, 0);
    t.children.assign(1, {});
    std::vector<std::size_t> frontier{0};
    for (std::size_t l = 1; l <= d; ++l) {
        std::vector<std::size_t> next;
        for (auto node : frontier)
            for (std::size_t c = 0; c < b; ++c) {
                auto id = t.parent.size();
                t.parent.push_back(node);
                t.depth.push_back(l);
                t.children.emplace_back();
                t.children[node].push_back(id);
                next.push_back(id);
            }
        frontier = std::move(next);
    }
    t.leaves = frontier;
    return t;
}

std::vector<Condition> tree_paths(const Tree& t)
{
    std::vector<Condition> out;
    for (auto leaf : t.leaves) {
        IndexSet path;
        for (auto v = leaf;; v = t.parent[v]) {
            path.insert(static_cast<Index>(v));
            if (v == 0)
                break;
        }
        out.push_back({path, {}});
    }
    return out;
}

bool is_ancestor(const Tree& t, std::size_t anc, std::size_t v)
{
    while (t.depth[v] > t.depth[anc])
        v = t.parent[v];
    return v == anc;
}

void require_k(const DivLineParams& p, std::string_view kind)
{
    if (p.k < 2 || p.k > p.branching)
        unsupported(std::string(kind) + " needs 2 <= k <= branching (k = " + std::to_string(p.k) +
                    ", branching = " + std::to_string(p.branching) + ")");
}

Pattern gen_ktp(const DivLineParams& params)
{
    require_k(params, "kTP");
    auto t = build_tree(params.branching, params.depth);
    std::vector<Condition> inc;
    for (const auto& kids : t.children) {
        if (kids.empty())
            continue;
        std::vector<Index> ids(kids.begin(), kids.end());
        for (const auto& sub : k_subsets(IndexSet(ids), params.k))
            inc.push_back({sub, {}});
    }
    return Pattern::make(t.parent.size(), tree_paths(t), std::move(inc));
}

Pattern gen_tp1(const DivLineParams& params)
{
    if (params.branching < 1)
        unsupported("TP1 needs branching >= 1");
    auto t = build_tree(params.branching, params.depth);
    std::vector<Condition> inc;
    const auto nodes = t.parent.size();
    for (std::size_t i = 0; i < nodes; ++i)
        for (std::size_t j = i + 1; j < nodes; ++j)
            if (!is_ancestor(t, i, j) && !is_ancestor(t, j, i))
                inc.push_back({IndexSet{static_cast<Index>(i), static_cast<Index>(j)}, {}});
    return Pattern::make(nodes, tree_paths(t), std::move(inc));
}

Pattern gen_ktp2(const DivLineParams& params)
{
    require_k(params, "kTP2");
    const auto width = params.branching;
    const auto rows = params.depth;
    if (rows < 1)
        unsupported("kTP2 needs at least one row");
    std::size_t paths = 1;
    for (std::size_t r = 0; r < rows; ++r) {
        paths *= width;
        if (paths > kMaxPaths || rows * width > kMaxGeneratedIndices)
            unsupported("kTP2 array is too large");
    }
    std::vector<Condition> cons;
    cons.reserve(paths);
    for (std::size_t code = 0; code < paths; ++code) {
        IndexSet path;
        auto rest = code;
        for (std::size_t r = 0; r < rows; ++r) {
            path.insert(static_cast<Index>(r * width + rest % width));
            rest /= width;
        }
        cons.push_back({path, {}});
    }
    std::vector<Condition> inc;
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& sub : k_subsets(width, params.k))
            inc.push_back({sub.shifted(static_cast<Index>(r * width)), {}});
    return Pattern::make(rows * width, std::move(cons), std::move(inc));
}

Pattern gen_cooper(std::size_t n)
{
    if (n < 1 || n > 4)
        unsupported("Cooper pattern needs 1 <= n <= 4");
    const std::size_t width = std::size_t{1} << n;  // parameters b_X, X ⊆ n
    const std::uint64_t splits = std::uint64_t{1} << width;
    std::vector<std::uint64_t> ups;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t up = 0;
        for (std::size_t x = 0; x < width; ++x)
            if (x >> i & 1U)
                up |= std::uint64_t{1} << x;
        ups.push_back(up);
    }
    std::vector<Condition> cons;
    std::vector<Condition> inc;
    for (std::uint64_t m = 0; m < splits; ++m) {
        auto c = complete_condition(IndexSet::from_mask(m), width);
        if (std::find(ups.begin(), ups.end(), m) != ups.end())
            cons.push_back(std::move(c));
        else
            inc.push_back(std::move(c));
    }
    return Pattern::make(width, std::move(cons), std::move(inc));
}

Pattern gen_pmchar(std::size_t n)
{
    if (n > 4)
        unsupported("PM characterization pattern needs n <= 4");
    const std::size_t width = std::size_t{1} << n;
    const std::uint64_t full = width - 1;
    const std::uint64_t families = std::uint64_t{1} << width;
    std::vector<Condition> cons;
    std::vector<Condition> inc;
    for (std::uint64_t z = 1; z < families; ++z) {
        std::uint64_t meet = full;
        for (std::size_t x = 0; x < width; ++x)
            if (z >> x & 1U)
                meet &= x;
        Condition c{IndexSet::from_mask(z), {}};
        (meet != 0 ? cons : inc).push_back(std::move(c));
    }
    return Pattern::make(width, std::move(cons), std::move(inc));
}

}  // namespace

std::optional<DivLine> parse_divline(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
    for (const auto& [kind, text] : kDivLineNames)
        if (text == lower)
            return kind;
    return std::nullopt;
}

std::string_view to_string(DivLine kind)
{
    for (const auto& [k, text] : kDivLineNames)
        if (k == kind)
            return text;
    return "?";
}

Pattern gen_divline(DivLine kind, const DivLineParams& params)
{
    const auto n = params.n;
    switch (kind) {
    case DivLine::OP: {
        if (n > kMaxGeneratedIndices)
            unsupported("n too large");
        std::vector<Condition> cons;
        for (std::size_t i = 0; i < n; ++i)
            cons.push_back({IndexSet::range(n).minus(IndexSet::range(i)), IndexSet::range(i)});
        return Pattern::make(n, std::move(cons), {});
    }
    case DivLine::IP:
    case DivLine::CM: {
        if (n > limits().max_n)
            unsupported("IP/CM pattern has 2^n conditions; n above bound " + std::to_string(limits().max_n));
        std::vector<Condition> cons;
        if (n > 0)
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
                cons.push_back(complete_condition(IndexSet::from_mask(x), n));
        return Pattern::make(n, std::move(cons), {});
    }
    case DivLine::SOP: {
        if (n > kMaxGeneratedIndices)
            unsupported("n too large");
        std::vector<Condition> cons;
        std::vector<Condition> inc;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto a = static_cast<Index>(i);
            cons.push_back({IndexSet{a + 1}, IndexSet{a}});
            inc.push_back({IndexSet{a}, IndexSet{a + 1}});
        }
        return Pattern::make(n, std::move(cons), std::move(inc));
    }
    case DivLine::kTP: return gen_ktp(params);
    case DivLine::TP1: return gen_tp1(params);
    case DivLine::kTP2: return gen_ktp2(params);
    case DivLine::Cooper: return gen_cooper(n);
    case DivLine::PMchar: return gen_pmchar(n);
    }
    unsupported("unknown pattern family");
}

Pattern pattern_from_cnf(const CnfFormula& f)
{
    const auto m = f.variable_count();
    const auto marker = static_cast<Index>(m);
    std::vector<Condition> inc;
    inc.reserve(f.clauses().size());
    for (const auto& clause : f.clauses()) {
        if (clause.empty()) {
            inc.push_back({IndexSet{marker}, {}});
            continue;
        }
        Condition z;
        for (const auto& lit : clause) {
            if (lit.negated)
                z.pos.insert(static_cast<Index>(lit.variable));
            else
                z.neg.insert(static_cast<Index>(lit.variable));
        }
        inc.push_back(std::move(z));
    }
    return Pattern::make(m + 1, {Condition{IndexSet{marker}, {}}}, std::move(inc), ValidationMode::Lenient);
}

Pattern double_positive(const Pattern& p)
{
    if (!p.inconsistency().empty())
        throw Error(ErrorCode::NotConsistencyPattern, "pattern has inconsistency conditions");
    if (!classify(p).reasonable)
        throw Error(ErrorCode::NotConsistencyPattern, "pattern is not reasonable");
    const auto n = p.n();
    std::vector<Condition> cons;
    for (const auto& c : p.consistency())
        cons.push_back({c.pos.united(c.neg.shifted(static_cast<Index>(n))), {}});
    std::vector<Condition> inc;
    for (std::size_t i = 0; i < n; ++i)
        inc.push_back({IndexSet{static_cast<Index>(i), static_cast<Index>(i + n)}, {}});
    return Pattern::make(2 * n, std::move(cons), std::move(inc));
}

}  // namespace patterna
