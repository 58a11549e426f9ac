#include "patterna/json_io.hpp"

#include "patterna/error.hpp"

namespace patterna {

namespace {

Json indices(const IndexSet& s)
{
    Json arr = Json::array();
    for (auto i : s)
        arr.push_back(i);
    return arr;
}

Json conditions(const std::vector<Condition>& cs)
{
    Json arr = Json::array();
    for (const auto& c : cs)
        arr.push_back(to_json(c));
    return arr;
}

template <typename T>
Json optional_value(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

[[noreturn]] void parse_fail(const std::string& what)
{
    throw Error(ErrorCode::ParseError, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        parse_fail(std::string("expected an object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        parse_fail(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t integer(const Json& j, const std::string& what)
{
    if (!j.is_number_integer())
        parse_fail(what + " must be an integer");
    return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& what)
{
    auto v = integer(j, what);
    if (v < 0)
        parse_fail(what + " must be nonnegative");
    return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> integer_list(const Json& j, const std::string& what)
{
    if (!j.is_array())
        parse_fail(what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j)
        out.push_back(integer(x, what + " entry"));
    return out;
}

IndexSet index_list(const Json& j, const std::string& what)
{
    std::vector<Index> items;
    for (auto v : integer_list(j, what)) {
        if (v < 0 || v > std::numeric_limits<Index>::max())
            throw Error(ErrorCode::IndexOutOfRange, what + " entry " + std::to_string(v) + " is out of range");
        items.push_back(static_cast<Index>(v));
    }
    return IndexSet(std::move(items));
}

std::vector<RawCondition> raw_conditions(const Json& j, const std::string& side)
{
    if (!j.is_array())
        parse_fail("\"" + side + "\" must be an array of [pos, neg] pairs");
    std::vector<RawCondition> out;
    for (const auto& c : j) {
        if (!c.is_array() || c.size() != 2)
            parse_fail("each condition in \"" + side + "\" must be a [pos, neg] pair");
        out.push_back({integer_list(c[0], side + " positive part"), integer_list(c[1], side + " negative part")});
    }
    return out;
}

std::size_t sort_size(const Json& j, const std::string& what)
{
    if (j.is_number_integer())
        return count(j, what);
    auto items = integer_list(j, what);
    for (std::size_t i = 0; i < items.size(); ++i)
        if (items[i] != static_cast<std::int64_t>(i))
            parse_fail(what + " must list 0, 1, ... in order");
    return items.size();
}

std::vector<std::size_t> size_list(const Json& j, const std::string& what)
{
    std::vector<std::size_t> out;
    for (auto v : integer_list(j, what)) {
        if (v < 0)
            parse_fail(what + " entries must be nonnegative");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        parse_fail(e.what());
    }
}

}  // namespace

Json to_json(const Condition& c)
{
    return Json::array({indices(c.pos), indices(c.neg)});
}

Json to_json(const Pattern& p)
{
    return {{"n", p.n()}, {"consistency", conditions(p.consistency())}, {"inconsistency", conditions(p.inconsistency())}};
}

Json to_json(const PatternFlags& f)
{
    return {{"reasonable", f.reasonable},
            {"positive", f.positive},
            {"complete", f.complete},
            {"fully_complete", f.fully_complete},
            {"k_bounded", optional_value(f.k_bounded)},
            {"max_inconsistency_size", optional_value(f.max_inconsistency_size)}};
}

Json to_json(const SetFamily& fam)
{
    Json sets = Json::array();
    for (const auto& s : fam.sets())
        sets.push_back(indices(s));
    return {{"universe", fam.universe_size()}, {"sets", sets}};
}

Json to_json(const Decision& d)
{
    Json j = {{"exhibitable", d.exhibitable}};
    if (d.witness)
        j["witness"] = to_json(*d.witness);
    if (d.failing) {
        if (const auto* c = std::get_if<Condition>(&*d.failing))
            j["failing"] = to_json(*c);
        else
            j["failing"] = "empty_universe";
    }
    return j;
}

Json to_json(const Hypergraph& h)
{
    Json edges = Json::array();
    for (const auto& e : h.edges())
        edges.push_back(indices(e));
    return {{"k", h.arity()}, {"vertices", h.vertex_count()}, {"edges", edges}};
}

Json to_json(const WitnessStructure& s)
{
    Json r = Json::array();
    for (const auto& [w, p] : s.r)
        r.push_back({w, p});
    Json hyperedges = Json::array();
    for (const auto& e : s.hyperedges)
        hyperedges.push_back(indices(e));
    Json j = {{"flavor", s.flavor == StructureFlavor::Positive ? "positive" : "uniform"},
              {"witnesses", indices(IndexSet::range(s.witness_count))},
              {"parameters", indices(IndexSet::range(s.parameter_count))},
              {"r", r},
              {"hyperedges", hyperedges}};
    if (s.flavor == StructureFlavor::Uniform)
        j["arity"] = s.uniform_arity;
    return j;
}

Json to_json(const Embedding& e)
{
    return {{"witnesses", e.witness_map}, {"parameters", e.parameter_map}};
}

RawPattern raw_pattern_from_json(const Json& j)
{
    return guarded([&] {
        RawPattern raw;
        raw.n = integer(field(j, "n"), "\"n\"");
        raw.consistency = raw_conditions(field(j, "consistency"), "consistency");
        raw.inconsistency = raw_conditions(field(j, "inconsistency"), "inconsistency");
        return raw;
    });
}

Pattern pattern_from_json(const Json& j, ValidationMode mode)
{
    return validate_pattern(raw_pattern_from_json(j), mode);
}

SetFamily set_family_from_json(const Json& j)
{
    return guarded([&] {
        const auto universe = count(field(j, "universe"), "\"universe\"");
        const auto& sets_json = field(j, "sets");
        if (!sets_json.is_array())
            parse_fail("\"sets\" must be an array");
        std::vector<IndexSet> sets;
        for (const auto& s : sets_json)
            sets.push_back(index_list(s, "set"));
        return SetFamily(universe, std::move(sets));
    });
}

Hypergraph hypergraph_from_json(const Json& j)
{
    return guarded([&] {
        const auto k = count(field(j, "k"), "\"k\"");
        const auto vertices = count(field(j, "vertices"), "\"vertices\"");
        const auto& edges_json = field(j, "edges");
        if (!edges_json.is_array())
            parse_fail("\"edges\" must be an array");
        std::set<IndexSet> edges;
        for (const auto& e : edges_json) {
            auto edge = index_list(e, "edge");
            if (edge.size() != e.size())
                throw Error(ErrorCode::InvalidInput, "edge repeats a vertex");
            edges.insert(std::move(edge));
        }
        return Hypergraph(k, vertices, std::move(edges));
    });
}

WitnessStructure witness_structure_from_json(const Json& j)
{
    return guarded([&] {
        WitnessStructure s;
        const auto& flavor = field(j, "flavor");
        if (flavor == "positive")
            s.flavor = StructureFlavor::Positive;
        else if (flavor == "uniform") {
            s.flavor = StructureFlavor::Uniform;
            s.uniform_arity = count(field(j, "arity"), "\"arity\"");
        } else
            parse_fail("\"flavor\" must be \"positive\" or \"uniform\"");
        s.witness_count = sort_size(field(j, "witnesses"), "\"witnesses\"");
        s.parameter_count = sort_size(field(j, "parameters"), "\"parameters\"");
        const auto& r = field(j, "r");
        if (!r.is_array())
            parse_fail("\"r\" must be an array of [witness, parameter] pairs");
        for (const auto& pair : r) {
            auto wp = size_list(pair, "r pair");
            if (wp.size() != 2)
                parse_fail("\"r\" entries must be [witness, parameter] pairs");
            s.r.insert({wp[0], wp[1]});
        }
        const auto& hyperedges = field(j, "hyperedges");
        if (!hyperedges.is_array())
            parse_fail("\"hyperedges\" must be an array");
        for (const auto& e : hyperedges)
            s.hyperedges.insert(index_list(e, "hyperedge"));
        return s;
    });
}

Embedding embedding_from_json(const Json& j)
{
    return guarded([&] {
        return Embedding{size_list(field(j, "witnesses"), "\"witnesses\""),
                         size_list(field(j, "parameters"), "\"parameters\"")};
    });
}

std::string dump_canonical(const Json& j)
{
    return j.dump() + "\n";
}

}  // namespace patterna
