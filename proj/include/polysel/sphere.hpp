#pragma once

#include <cstdint>
#include <vector>

#include "polysel/vec.hpp"

namespace polysel {

/* Deterministic quasi-uniform unit directions on S^{d-1}.
 *
 * The sequence is nested: the first n entries of unit_directions(d, n+1, s)
 * equal unit_directions(d, n, s).  The prefix is the 2d signed coordinate
 * axes +e1, -e1, +e2, ...; the tail is a low-discrepancy covering (golden
 * angle for d = 2, Halton points pushed through the inverse normal CDF and
 * radially normalized for d >= 3), offset deterministically by the seed. */
std::vector<Point> unit_directions(std::size_t dim, std::size_t count, std::uint64_t seed = 0);

/* Chordal covering radius bound used when a sampled supremum over
 * directions stands in for the exact one: for the sequence above with n
 * points, every unit vector is within this chord distance of a sample. */
double direction_resolution(std::size_t dim, std::size_t count);

/* Inverse of the standard normal CDF (Acklam's rational approximation
 * polished with one Halley step; ~1e-15 over (0,1)). */
double inverse_normal_cdf(double p);

/* SplitMix64 step, used to derive reproducible offsets from seeds. */
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace polysel
