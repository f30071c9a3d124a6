#pragma once

#include <cstdint>
#include <string>

#include "crossfam/geometry.hpp"

namespace crossfam {

enum class GenMode { Uniform, Convex, Clustered };

GenMode parse_gen_mode(const std::string& s);

// Seeded general-position point sets with ids 0..n-1. With colored set, half
// the points (chosen at random) are red and the rest blue; n must be even.
PointSet generate_points(std::size_t n, std::uint64_t seed, GenMode mode = GenMode::Uniform, bool colored = false);

}  // namespace crossfam
