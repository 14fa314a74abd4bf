#pragma once

// Zariski-van Kampen presentations from braid monodromy, and the named
// presentations of the type I / type II curve families.
//
// Fibered scheme: the strand meridians m_1..m_n generate; each special fiber
// with braid b contributes, for i = 1..n,
//   a^-1 m_i a = m_i^b   when the vertical line is retained with meridian a,
//   m_i = m_i^b          otherwise.

#include <optional>
#include <string>
#include <vector>

#include "curvegrp/braid.hpp"
#include "curvegrp/presentation.hpp"

namespace curvegrp {

struct Fiber {
  BraidWord braid;
  std::optional<std::string> meridian;
  std::string label;
};

struct MonodromyInput {
  int strands = 1;
  std::vector<std::string> meridian_names;
  std::vector<Fiber> fibers;

  // Throws InvalidInput on strand-count or naming violations.
  void validate() const;
};

// The n relators per fiber, in fiber order, before canonicalization.
std::vector<Word> fibered_relators(const MonodromyInput& input);

// Strand meridians get class "strand", fiber meridians "vertical:<label>".
Presentation fibered_presentation(const MonodromyInput& input);

// Adjoins m_n m_{n-1} ... m_1 (classical closure at a generic line at
// infinity).  Fibered inputs are rejected.
Presentation projective_quotient(const Presentation& p, const MonodromyInput& input);

enum class LocalBraidKind { Tangency, Node, Asymptote, AsymptoteTypeII };

// Tangency(r): s1^(2(2r+1)); Node: s1^2; Asymptote: s1^-2 (all on 2 strands);
// AsymptoteTypeII(k): (s1 ... s_{k-2} s_{k-1}^2 s_{k-2} ... s1)^-1 on k strands.
BraidWord local_braid(LocalBraidKind kind, int param = 0);

// <l, x | [x, l^k], [x, l^-i x l^i] for i = 1..k-1>, classes l -> line:L1,
// x -> curve:D.
Presentation k_group(int k);

// <l, x1..xk | [xi, xj] for i < j, l^-1 xi l = x(i+1) mod k>.
Presentation k_group_long(int k);

// <l, x | [x, l]> with the same class labels as k_group.
Presentation smooth_family_group();

// The nodal cubic with lines L0 (meridian a) and L2 (meridian b).
MonodromyInput nodal_cubic_input();

struct NodalCubicStages {
  Presentation fibered;
  Presentation killed;      // meridian a of L0 killed
  Presentation simplified;  // after Tietze moves and m := m1 b
};

NodalCubicStages nodal_cubic_pipeline();

// Relators of the nodal cubic group as usually written:
//   m1^a = m2 m1 m2^-1, [m2 m1, a], m1^b = m2, [m2 m1, b].
std::vector<Word> nodal_cubic_reference_relators();

}  // namespace curvegrp
