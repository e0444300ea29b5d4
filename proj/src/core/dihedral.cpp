#include "mtvrp/dihedral.hpp"

#include <stdexcept>

namespace mtvrp {

Point dihedral_transform(Point p, int k) {
  if (k < 0 || k >= kNumDihedral) throw std::out_of_range("dihedral index must be in 0..7");
  for (int r = 0; r < k % 4; ++r) p = Point{p.y, 1.0 - p.x};
  if (k >= 4) p.x = 1.0 - p.x;
  return p;
}

std::vector<Point> dihedral_transform(std::span<const Point> points, int k) {
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(dihedral_transform(p, k));
  return out;
}

Instance dihedral_transform(const Instance& instance, int k) {
  InstanceData d = instance.data();
  d.coords = dihedral_transform(d.coords, k);
  return Instance(std::move(d));
}

}  // namespace mtvrp
