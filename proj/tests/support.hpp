#pragma once

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "patterna/cnf.hpp"
#include "patterna/error.hpp"
#include "patterna/graph.hpp"
#include "patterna/pattern.hpp"
#include "patterna/semantics.hpp"

namespace testing_support {

using namespace patterna;

inline Condition cond(std::initializer_list<Index> pos, std::initializer_list<Index> neg = {})
{
    return {IndexSet(pos), IndexSet(neg)};
}

inline Pattern pattern(std::size_t n, std::vector<Condition> c, std::vector<Condition> i = {})
{
    return Pattern::make(n, std::move(c), std::move(i));
}

inline SetFamily family(std::size_t universe, std::vector<IndexSet> sets)
{
    return SetFamily(universe, std::move(sets));
}

template <typename F>
std::optional<ErrorCode> error_code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

#define CHECK_ERROR_CODE(expr, expected) \
    CHECK(::testing_support::error_code_of([&] { (void)(expr); }) == std::optional<::patterna::ErrorCode>(expected))

}  // namespace testing_support
