#pragma once

#include <span>
#include <vector>

#include "mtvrp/instance.hpp"

namespace mtvrp {

inline constexpr int kNumDihedral = 8;

// k-th symmetry of the unit square: the quarter turn (x, y) -> (y, 1 - x)
// applied k mod 4 times, then the mirror x -> 1 - x when k >= 4.
// Throws std::out_of_range for k outside 0..7.
Point dihedral_transform(Point p, int k);
std::vector<Point> dihedral_transform(std::span<const Point> points, int k);

// Same instance with every coordinate mapped through dihedral_transform.
Instance dihedral_transform(const Instance& instance, int k);

}  // namespace mtvrp
