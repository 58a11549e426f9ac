#include "patterna/limits.hpp"

#include <cstdlib>
#include <string>

namespace patterna {

namespace {

Limits load_limits()
{
    Limits l;
    if (const char* env = std::getenv("PATTERNA_MAX_N")) {
        try {
            auto v = std::stoul(env);
            if (v > 0 && v <= 30)
                l.max_n = v;
        } catch (const std::exception&) {
            // ignored: keep the default
        }
    }
    return l;
}

}  // namespace

const Limits& limits()
{
    static const Limits instance = load_limits();
    return instance;
}

}  // namespace patterna
