#pragma once

#include <cstdint>
#include <random>

#include "expp/cm_sets.hpp"

namespace expp {

using Rng = std::mt19937_64;

Vector gaussian_vector(int dim, Rng& rng);

// Random point of conv(V): a Gaussian draw with randomized radius, projected
// onto the hull. Covers interior and near-boundary points.
Vector sample_hull(const CMSetSpec& spec, Rng& rng);

// Random member of V (uniform-ish; QR-based for the orthogonal families).
Vector sample_member(const CMSetSpec& spec, Rng& rng);

// Random convex combination of members: a point of conv(V) proper. For
// NonnegSemiOrthogonal this is strictly tighter than the B+ surrogate.
Vector sample_conv_combination(const CMSetSpec& spec, Rng& rng);

}  // namespace expp
