#pragma once

// Divisor classes on Hirzebruch surfaces.
//
// Pic(Sigma_n) = Z Delta + Z F with Delta^2 = -n, Delta.F = 1, F^2 = 0.  A
// class carries the degree n of its surface; mixing surfaces is an error.

#include <cstdint>

namespace curvegrp {

struct DivisorClass {
  int surface_degree = 0;
  std::int64_t a = 0;  // coefficient of the negative section Delta
  std::int64_t b = 0;  // coefficient of the fiber F

  static DivisorClass section(int n) { return {n, 1, 0}; }
  static DivisorClass fiber(int n) { return {n, 0, 1}; }

  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& x);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

std::int64_t intersect(const DivisorClass& x, const DivisorClass& y);

// Strict transform on Sigma_1 of a degree-d plane curve with an ordinary
// (d-k)-fold point at the blown-up point: k Delta + d F.  Needs 1 <= k <= d.
DivisorClass strict_transform_class(int d, int k);

// Pullback along the k-cyclic cover Sigma_k -> Sigma_1 branched at two
// fibers: a Delta + b F -> a Delta + k b F.
DivisorClass pullback(const DivisorClass& c, int k);

struct PreimageReport {
  int d = 0;
  int k = 0;
  DivisorClass component;        // Delta + d F on Sigma_k
  std::int64_t comp_dot_fiber = 0;
  std::int64_t comp_dot_section = 0;
  std::int64_t total_dot_fiber = 0;
  std::int64_t total_dot_section = 0;
  // k * component equals the pullback of the strict transform, and each
  // number above matches its closed form.
  bool consistent = false;
};

// Intersection data of the k components of the preimage of a rational
// curve's strict transform.  Needs 2 <= k <= d.
PreimageReport preimage_report(int d, int k);

// Nodes of a rational nodal type I curve: d - 2 - r1 - r2.  Throws
// InvalidInput("invalid type I data") when that is negative.
int node_count(int d, int r1, int r2);

}  // namespace curvegrp
