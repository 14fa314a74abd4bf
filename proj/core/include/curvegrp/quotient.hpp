#pragma once

// Homomorphisms from finitely presented groups onto concrete finite groups.
//
// The search assigns generator images in declared generator order, each
// trying candidate elements in increasing index order, and rejects a partial
// assignment as soon as some relator with all generators assigned fails to
// evaluate to the identity.  Results therefore come out sorted
// lexicographically by image indices.
//
// Branched Galois covers of the plane correspond to surjections of the
// complement group; "branched with index e along a curve" becomes "the
// meridians of that curve map to elements of order e".  The cover tests
// below fix that translation:
//   dihedral family D_2n, branched 2(L1 + L2) + nD:
//     line meridians -> order 2 outside the rotations,
//     curve meridian -> order n inside the rotations;
//   G(k) family, branched k(L1 + L2) + 2D with cyclic G(k)/H(k) layer:
//     line meridians -> image of order k in G(k)/H(k),
//     curve meridian -> order 2 inside H(k).
// Only conjugation-invariant conditions are used, since meridians are
// defined up to conjugacy.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvegrp/finite_group.hpp"
#include "curvegrp/presentation.hpp"

namespace curvegrp {

struct MeridianConstraint {
  std::string generator;
  std::optional<std::uint64_t> order;
  std::optional<std::string> in_subgroup;
  std::optional<std::string> not_in_subgroup;
  // (normal marked subgroup, exact order of the image in the quotient)
  std::optional<std::pair<std::string, std::uint64_t>> quotient_order;
};

struct Homomorphism {
  std::vector<std::string> generators;
  std::string target;
  std::vector<Element> images;

  Element image_of(std::string_view gen) const;
  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

struct SearchLimits {
  std::size_t max_generators = 6;
  std::size_t max_order = kMaxGroupOrder;

  // Honors CURVEGRP_MAX_ORDER when set to a positive integer.
  static SearchLimits from_environment();
};

struct HomCounts {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;

  friend bool operator==(const HomCounts&, const HomCounts&) = default;
};

// Calls `visit` with the images of each homomorphism in lexicographic order;
// stops early when `visit` returns false.  Throws ComputationLimit("search
// space too large; simplify first") beyond the limits.
void for_each_homomorphism(const Presentation& p, const ConcreteGroup& g,
                           std::span<const MeridianConstraint> constraints,
                           const std::function<bool(std::span<const Element>)>& visit,
                           const SearchLimits& limits = {});

std::vector<Homomorphism> homomorphisms(const Presentation& p, const ConcreteGroup& g,
                                        std::span<const MeridianConstraint> constraints = {},
                                        const SearchLimits& limits = {});
std::vector<Homomorphism> epimorphisms(const Presentation& p, const ConcreteGroup& g,
                                       std::span<const MeridianConstraint> constraints = {},
                                       const SearchLimits& limits = {});
HomCounts count_homomorphisms(const Presentation& p, const ConcreteGroup& g,
                              std::span<const MeridianConstraint> constraints = {},
                              const SearchLimits& limits = {});

bool is_surjective(const ConcreteGroup& g, std::span<const Element> images);

// Image of a word under generator images aligned with `p.generators()`.
Element evaluate(const Presentation& p, const ConcreteGroup& g, std::span<const Element> images, const Word& w);

// Relators and constraints hold for `h`.
bool is_valid_homomorphism(const Presentation& p, const ConcreteGroup& g, const Homomorphism& h,
                           std::span<const MeridianConstraint> constraints = {});

std::vector<HomCounts> fingerprint(const Presentation& p, std::span<const ConcreteGroup> battery,
                                   const SearchLimits& limits = {});

struct Distinction {
  // Name of the first battery group with differing counts; empty when the
  // battery cannot tell the groups apart.
  std::optional<std::string> distinguished_by;
  std::vector<HomCounts> left;
  std::vector<HomCounts> right;
};

Distinction distinguish(const Presentation& left, const Presentation& right, std::span<const ConcreteGroup> battery,
                        const SearchLimits& limits = {});

struct CoverTest {
  bool exists = false;
  std::optional<Homomorphism> witness;
  std::vector<MeridianConstraint> constraints;
};

CoverTest dihedral_cover_test(const Presentation& p, std::span<const std::string> line_gens,
                              const std::string& curve_gen, int n, const SearchLimits& limits = {});
CoverTest gk_cover_test(const Presentation& p, std::span<const std::string> line_gens, const std::string& curve_gen,
                        int k, const SearchLimits& limits = {});

struct Refutation {
  // Group admitting a homomorphism that kills the base relators but not the
  // candidate; empty means "unknown", never "is a consequence".
  std::optional<std::string> refuted_by;
  std::optional<Homomorphism> witness;
};

Refutation refute_consequence(std::span<const Word> base, const Word& candidate,
                              std::span<const ConcreteGroup> battery, const SearchLimits& limits = {});

// `gen -> element-name` lines.
std::string format_witness(const Homomorphism& h, const ConcreteGroup& g);

}  // namespace curvegrp
