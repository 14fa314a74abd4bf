#pragma once

// Concrete finite groups with a total multiplication.
//
// Elements are indices 0..order-1 and 0 is always the identity.  Small groups
// keep a dense multiplication table; larger ones (only G(k) for k >= 9 gets
// there) multiply through their element encoding on demand.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace curvegrp {

using Element = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 24'576;

class ConcreteGroup {
 public:
  using Product = std::function<Element(Element, Element)>;

  // `inverse` may be empty, in which case it is found by search.
  ConcreteGroup(std::string name, std::size_t order, Product product, std::vector<std::string> element_names,
                std::vector<Element> inverse = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return order_; }

  Element mul(Element a, Element b) const {
    return table_.empty() ? product_(a, b) : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const { return inverse_[a]; }
  Element pow(Element a, std::int64_t n) const;

  const std::string& element_name(Element e) const { return names_[e]; }
  std::optional<Element> find_element(std::string_view name) const;

  // Distinguished generators, e.g. {sigma, tau} for D_2n.
  const std::vector<Element>& generators() const { return generators_; }

  const std::map<std::string, std::vector<Element>, std::less<>>& marked_subgroups() const { return marked_; }
  const std::vector<Element>& marked_subgroup(std::string_view name) const;
  // Membership flags for a marked subgroup, indexed by element.
  const std::vector<bool>& membership(std::string_view name) const;

  void set_generators(std::vector<Element> gens) { generators_ = std::move(gens); }
  // Throws InvalidInput unless `elements` is closed under mul and inv.
  void mark_subgroup(std::string name, std::vector<Element> elements);

  bool is_abelian() const;

  // Associativity on every triple when order <= 64, on a fixed sample above.
  bool check_axioms() const;

 private:
  std::string name_;
  std::size_t order_;
  Product product_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
  std::map<std::string, std::vector<Element>, std::less<>> marked_;
  std::map<std::string, std::vector<bool>, std::less<>> marked_flags_;
};

// Monomial k x k matrix with cyclic-shift permutation: column j goes to row
// j + shift (mod k) with sign signs[j].
struct SignedShift {
  int shift = 0;
  std::vector<int> signs;

  friend bool operator==(const SignedShift&, const SignedShift&) = default;
};

// Dense integer matrix of a signed shift.
std::vector<std::vector<int>> to_matrix(const SignedShift& s);
// Inverse of to_matrix; nullopt unless the matrix is a signed cyclic shift.
std::optional<SignedShift> from_matrix(const std::vector<std::vector<int>>& m);

// D_2n = <sigma, tau | sigma^2 = tau^n = (sigma tau)^2 = 1>, order 2n.
// Element sigma^r tau^j has index r*n + j.  Marked subgroup "rotations".
ConcreteGroup dihedral(int n);

// G(k) generated by the monomial matrices sigma (cyclic shift) and
// tau_1 = diag(-1, -1, 1, ..., 1), elements numbered in breadth-first
// discovery order from generators sigma, tau_1..tau_{k-1}.  Marked subgroup
// "H(k)" = shift-0 elements.
ConcreteGroup gk(int k);

// Encoding of each element of gk(k), by index.
std::vector<SignedShift> gk_elements(int k);

ConcreteGroup cyclic(int n);

std::uint64_t element_order(const ConcreteGroup& g, Element e);
std::vector<std::vector<Element>> conjugacy_classes(const ConcreteGroup& g);
std::vector<Element> center(const ConcreteGroup& g);

// Order of e * N in G / N.
std::uint64_t quotient_element_order(const ConcreteGroup& g, std::string_view subgroup, Element e);

struct QuotientMap {
  ConcreteGroup group;
  std::vector<Element> projection;
};

// Throws InvalidInput if the marked subgroup is not normal.
QuotientMap quotient_map(const ConcreteGroup& g, std::string_view subgroup);

// Subgroup generated by `gens`, as sorted elements.
std::vector<Element> generated_subgroup(const ConcreteGroup& g, const std::vector<Element>& gens);

// `d<2n>`, `g<k>`, `c<n>`, case-insensitive.
ConcreteGroup group_from_name(std::string_view name);
// Comma-separated list of group names.
std::vector<ConcreteGroup> parse_battery(std::string_view list);

}  // namespace curvegrp
