#pragma once

#include <cstddef>

namespace patterna {

/// Enumeration bounds shared across modules.
///
/// `max_n` bounds every operation that enumerates 2^n objects (brute-force
/// exhibitability, ip_family, membership structures). It can be overridden
/// with the PATTERNA_MAX_N environment variable.
struct Limits {
    std::size_t max_n = 16;
    std::size_t max_clique_vertices = 12;
};

/// Process-wide limits; PATTERNA_MAX_N is read once on first use.
const Limits& limits();

}  // namespace patterna
