#include "patterna/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "patterna/error.hpp"

namespace patterna {

namespace {

bool normalize_clause(Clause& c)
{
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    // sorted by (variable, negated): complementary literals are adjacent
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i].variable == c[i - 1].variable)
            return false;
    return true;
}

}  // namespace

CnfFormula::CnfFormula(std::size_t variable_count, std::vector<Clause> clauses)
    : variable_count_(variable_count)
{
    clauses_.reserve(clauses.size());
    for (auto& c : clauses) {
        for (const auto& lit : c)
            if (lit.variable >= variable_count)
                throw Error(ErrorCode::InvalidInput, "literal on variable " + std::to_string(lit.variable) +
                                                         " but formula has " + std::to_string(variable_count));
        if (normalize_clause(c))
            clauses_.push_back(std::move(c));
    }
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool CnfFormula::has_empty_clause() const noexcept
{
    return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

bool satisfies(const CnfFormula& f, const Assignment& a)
{
    if (a.size() != f.variable_count())
        return false;
    return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return a[l.variable] != l.negated; });
    });
}

namespace {

class Dpll {
public:
    explicit Dpll(const CnfFormula& f) : clauses_(f.clauses()), value_(f.variable_count(), kUnassigned) {}

    std::optional<Assignment> run()
    {
        if (!search())
            return std::nullopt;
        Assignment out(value_.size());
        for (std::size_t v = 0; v < value_.size(); ++v)
            out[v] = value_[v] != kFalse;
        return out;
    }

private:
    static constexpr std::int8_t kUnassigned = -1;
    static constexpr std::int8_t kFalse = 0;
    static constexpr std::int8_t kTrue = 1;

    enum class Status { Conflict, Satisfied, Open };

    [[nodiscard]] std::int8_t literal_value(const Literal& l) const
    {
        auto v = value_[l.variable];
        if (v == kUnassigned)
            return kUnassigned;
        return (v == kTrue) != l.negated ? kTrue : kFalse;
    }

    void assign(const Literal& l) { value_[l.variable] = l.negated ? kFalse : kTrue; }

    // Unit propagation and pure-literal elimination to a fixpoint.
    Status simplify()
    {
        for (;;) {
            bool changed = false;
            bool all_satisfied = true;
            for (const auto& clause : clauses_) {
                std::size_t open = 0;
                const Literal* last_open = nullptr;
                bool sat = false;
                for (const auto& l : clause) {
                    auto lv = literal_value(l);
                    if (lv == kTrue) {
                        sat = true;
                        break;
                    }
                    if (lv == kUnassigned) {
                        ++open;
                        last_open = &l;
                    }
                }
                if (sat)
                    continue;
                all_satisfied = false;
                if (open == 0)
                    return Status::Conflict;
                if (open == 1) {
                    assign(*last_open);
                    changed = true;
                }
            }
            if (all_satisfied)
                return Status::Satisfied;
            if (changed)
                continue;

            // polarity bits per variable over clauses not yet satisfied
            std::vector<std::uint8_t> polarity(value_.size(), 0);
            for (const auto& clause : clauses_) {
                bool sat = std::any_of(clause.begin(), clause.end(),
                                       [&](const Literal& l) { return literal_value(l) == kTrue; });
                if (sat)
                    continue;
                for (const auto& l : clause)
                    if (value_[l.variable] == kUnassigned)
                        polarity[l.variable] |= l.negated ? 2 : 1;
            }
            for (std::size_t v = 0; v < value_.size(); ++v) {
                if (polarity[v] == 1) {
                    value_[v] = kTrue;
                    changed = true;
                } else if (polarity[v] == 2) {
                    value_[v] = kFalse;
                    changed = true;
                }
            }
            if (!changed)
                return Status::Open;
        }
    }

    bool search()
    {
        switch (simplify()) {
        case Status::Conflict: return false;
        case Status::Satisfied: return true;
        case Status::Open: break;
        }
        auto it = std::find(value_.begin(), value_.end(), kUnassigned);
        // an open clause always has an unassigned literal
        auto var = static_cast<std::size_t>(it - value_.begin());
        auto saved = value_;
        for (auto choice : {kTrue, kFalse}) {
            value_[var] = choice;
            if (search())
                return true;
            value_ = saved;
        }
        return false;
    }

    const std::vector<Clause>& clauses_;
    std::vector<std::int8_t> value_;
};

}  // namespace

std::optional<Assignment> sat_solve(const CnfFormula& f)
{
    return Dpll(f).run();
}

std::string export_dimacs(const CnfFormula& f)
{
    std::ostringstream out;
    out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
    for (const auto& c : f.clauses()) {
        for (const auto& l : c)
            out << (l.negated ? "-" : "") << (l.variable + 1) << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg)
{
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

CnfFormula import_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    long long declared_vars = 0;
    long long declared_clauses = 0;
    std::vector<Clause> clauses;
    Clause current;
    bool clause_open = false;

    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        char lead = line[first];
        if (lead == 'c')
            continue;
        if (lead == '%')
            break;
        std::istringstream tokens(line);
        if (lead == 'p') {
            if (have_header)
                parse_fail(line_no, "duplicate header");
            std::string p, fmt, extra;
            if (!(tokens >> p >> fmt >> declared_vars >> declared_clauses) || p != "p" || fmt != "cnf" ||
                declared_vars < 0 || declared_clauses < 0 || (tokens >> extra))
                parse_fail(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            have_header = true;
            continue;
        }
        if (!have_header)
            parse_fail(line_no, "clause before 'p cnf' header");
        std::string tok;
        while (tokens >> tok) {
            long long v = 0;
            try {
                std::size_t used = 0;
                v = std::stoll(tok, &used);
                if (used != tok.size())
                    parse_fail(line_no, "bad literal '" + tok + "'");
            } catch (const std::logic_error&) {
                parse_fail(line_no, "bad literal '" + tok + "'");
            }
            if (v == 0) {
                clauses.push_back(std::move(current));
                current.clear();
                clause_open = false;
                continue;
            }
            long long var = v < 0 ? -v : v;
            if (var > declared_vars)
                parse_fail(line_no, "variable " + std::to_string(var) + " exceeds declared count");
            current.push_back({static_cast<std::size_t>(var - 1), v < 0});
            clause_open = true;
        }
    }
    if (!have_header)
        parse_fail(line_no, "missing 'p cnf' header");
    if (clause_open)
        parse_fail(line_no, "last clause is not terminated by 0");
    if (static_cast<long long>(clauses.size()) != declared_clauses)
        parse_fail(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                std::to_string(clauses.size()));
    return CnfFormula(static_cast<std::size_t>(declared_vars), std::move(clauses));
}

}  // namespace patterna
