#pragma once

#include <cstdint>

#include "mutvis/corridor.hpp"

namespace mutvis {

/// Deterministic random non-crossing instance: a simple polygon with m
/// vertices (integer coordinates up to 1e6) built by 2-opt untangling of a
/// random point set, S and T inside two distinct triangulation cells, and n
/// robots on S with targets on T. Throws GenerationFailed after bounded
/// retries.
Instance generate_instance(int vertices, int robots, std::uint64_t seed);

}  // namespace mutvis
