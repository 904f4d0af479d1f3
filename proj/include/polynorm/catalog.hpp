#pragma once

// Builtin polytope families and seeded random polytopes.
//
// Family spec grammar (shared with the command line):
//   cube:d  simplex:d  bruns:s  higashitani:d,h  reeve  random:d,bound,count,seed

#include "polynorm/polytope.hpp"

#include <cstdint>
#include <string_view>

namespace polynorm {

/// {0,1}^d, d >= 1.
Polytope cube(int d);
/// conv(0, e_1, ..., e_d), d >= 1.
Polytope standard_simplex(int d);
/// Very ample, non-normal 3-polytope with k_P = s - 1; s >= 4.
Polytope bruns_gubeladze(int s);
/// Very ample d-polytope with h holes at k = 2; d >= 3, h >= 1.
Polytope higashitani(int d, int h);
/// conv(0, (1,1,0), (1,0,1), (0,1,1)): not very ample.
Polytope reeve_like();

/// Convex hull of count points drawn uniformly from [0, bound]^d by a
/// mt19937_64 seeded with seed; redrawn (up to 1000 times) until the points
/// span R^d. Coordinates come from the raw 64-bit output modulo bound + 1, so
/// the same seed gives the same polytope on every platform.
Polytope random_polytope(int d, int bound, int count, std::uint64_t seed);

/// Vertices of a family member, before taking the hull.
std::vector<IntVector> family_points(std::string_view spec);

/// Parses a family spec and builds the polytope. Throws std::invalid_argument
/// on unknown families or out-of-range parameters.
Polytope from_family(std::string_view spec);

/// True when spec names a family (used to tell specs from file paths).
bool is_family_spec(std::string_view spec);

}  // namespace polynorm
