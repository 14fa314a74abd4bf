#include "curvegrp/lattice.hpp"

#include <string>

#include "curvegrp/error.hpp"

namespace curvegrp {

namespace {

void same_surface(const DivisorClass& x, const DivisorClass& y) {
  if (x.surface_degree != y.surface_degree)
    throw InvalidInput("divisor classes live on different surfaces (Sigma_" + std::to_string(x.surface_degree) +
                       " vs Sigma_" + std::to_string(y.surface_degree) + ")");
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  same_surface(x, y);
  return {x.surface_degree, x.a + y.a, x.b + y.b};
}

DivisorClass operator*(std::int64_t k, const DivisorClass& x) { return {x.surface_degree, k * x.a, k * x.b}; }

std::int64_t intersect(const DivisorClass& x, const DivisorClass& y) {
  same_surface(x, y);
  return -static_cast<std::int64_t>(x.surface_degree) * x.a * y.a + x.a * y.b + y.a * x.b;
}

DivisorClass strict_transform_class(int d, int k) {
  if (k < 1 || k > d) throw InvalidInput("strict transform needs 1 <= k <= d");
  return {1, k, d};
}

DivisorClass pullback(const DivisorClass& c, int k) {
  if (k < 2) throw InvalidInput("pullback needs k >= 2");
  if (c.surface_degree != 1) throw InvalidInput("pullback starts from a class on Sigma_1");
  return {k, c.a, static_cast<std::int64_t>(k) * c.b};
}

PreimageReport preimage_report(int d, int k) {
  if (k < 2 || k > d) throw InvalidInput("preimage report needs 2 <= k <= d");
  PreimageReport r;
  r.d = d;
  r.k = k;
  r.component = {k, 1, d};
  const auto delta = DivisorClass::section(k);
  const auto fiber = DivisorClass::fiber(k);
  const auto total = pullback(strict_transform_class(d, k), k);

  r.comp_dot_fiber = intersect(r.component, fiber);
  r.comp_dot_section = intersect(r.component, delta);
  r.total_dot_fiber = intersect(total, fiber);
  r.total_dot_section = intersect(total, delta);
  r.consistent = static_cast<std::int64_t>(k) * r.component == total && r.comp_dot_fiber == 1 &&
                 r.comp_dot_section == d - k && r.total_dot_fiber == k &&
                 r.total_dot_section == static_cast<std::int64_t>(k) * (d - k);
  return r;
}

int node_count(int d, int r1, int r2) {
  if (d < 3 || r1 < 0 || r2 < 0) throw InvalidInput("invalid type I data");
  const int nodes = d - 2 - r1 - r2;
  if (nodes < 0) throw InvalidInput("invalid type I data");
  return nodes;
}

}  // namespace curvegrp
