#include "curvegrp/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "curvegrp/error.hpp"

namespace curvegrp {

Element Homomorphism::image_of(std::string_view gen) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == gen) return images[i];
  throw InvalidInput("homomorphism has no generator '" + std::string(gen) + "'");
}

SearchLimits SearchLimits::from_environment() {
  SearchLimits limits;
  if (const char* env = std::getenv("CURVEGRP_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_order = static_cast<std::size_t>(v);
  }
  return limits;
}

namespace {

struct CompiledWord {
  std::vector<std::pair<std::size_t, std::int64_t>> syllables;
  std::size_t depth = 0;  // highest generator index used, plus one
};

CompiledWord compile(const Presentation& p, const Word& w) {
  CompiledWord out;
  for (const auto& s : w.syllables()) {
    auto idx = p.generator_index(s.gen);
    if (!idx) throw InvalidInput("word uses undeclared generator '" + s.gen + "'");
    out.syllables.emplace_back(*idx, s.exp);
    out.depth = std::max(out.depth, *idx + 1);
  }
  return out;
}

Element eval(const ConcreteGroup& g, std::span<const Element> images, const CompiledWord& w) {
  Element acc = 0;
  for (const auto& [idx, exp] : w.syllables) acc = g.mul(acc, g.pow(images[idx], exp));
  return acc;
}

bool satisfies_constraint(const ConcreteGroup& g, Element e, const MeridianConstraint& c) {
  if (c.order && element_order(g, e) != *c.order) return false;
  if (c.in_subgroup && !g.membership(*c.in_subgroup)[e]) return false;
  if (c.not_in_subgroup && g.membership(*c.not_in_subgroup)[e]) return false;
  if (c.quotient_order && quotient_element_order(g, c.quotient_order->first, e) != c.quotient_order->second)
    return false;
  return true;
}

void check_limits(const Presentation& p, const ConcreteGroup& g, const SearchLimits& limits) {
  if (p.generators().size() > limits.max_generators || g.order() > limits.max_order)
    throw ComputationLimit("search space too large; simplify first");
}

}  // namespace

Element evaluate(const Presentation& p, const ConcreteGroup& g, std::span<const Element> images, const Word& w) {
  return eval(g, images, compile(p, w));
}

bool is_surjective(const ConcreteGroup& g, std::span<const Element> images) {
  return generated_subgroup(g, std::vector<Element>(images.begin(), images.end())).size() == g.order();
}

void for_each_homomorphism(const Presentation& p, const ConcreteGroup& g,
                           std::span<const MeridianConstraint> constraints,
                           const std::function<bool(std::span<const Element>)>& visit, const SearchLimits& limits) {
  check_limits(p, g, limits);
  const std::size_t n = p.generators().size();

  // Relators grouped by the depth at which they become fully assigned.
  std::vector<std::vector<CompiledWord>> checks(n + 1);
  for (const auto& r : p.relators()) {
    auto c = compile(p, r);
    checks[c.depth].push_back(std::move(c));
  }
  // Relators over no generator at all: only the identity relator qualifies.
  for (const auto& c : checks[0])
    if (!c.syllables.empty()) return;

  std::vector<std::vector<Element>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Element e = 0; e < g.order(); ++e) {
      bool ok = true;
      for (const auto& c : constraints) {
        if (!p.has_generator(c.generator))
          throw InvalidInput("constraint names unknown generator '" + c.generator + "'");
        if (c.generator == p.generators()[i]) ok = ok && satisfies_constraint(g, e, c);
      }
      if (ok) candidates[i].push_back(e);
    }
  }
  if (n == 0) {
    visit({});
    return;
  }

  std::vector<Element> images(n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::size_t depth = 0;
  // Iterative backtracking; cursor[d] is the next candidate to try at depth d.
  for (;;) {
    if (cursor[depth] == candidates[depth].size()) {
      if (depth == 0) return;
      cursor[depth] = 0;
      --depth;
      continue;
    }
    images[depth] = candidates[depth][cursor[depth]++];
    bool ok = true;
    for (const auto& c : checks[depth + 1])
      if (eval(g, images, c) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (depth + 1 == n) {
      if (!visit(images)) return;
    } else {
      ++depth;
    }
  }
}

std::vector<Homomorphism> homomorphisms(const Presentation& p, const ConcreteGroup& g,
                                        std::span<const MeridianConstraint> constraints, const SearchLimits& limits) {
  std::vector<Homomorphism> out;
  for_each_homomorphism(
      p, g, constraints,
      [&](std::span<const Element> images) {
        out.push_back({p.generators(), g.name(), {images.begin(), images.end()}});
        return true;
      },
      limits);
  return out;
}

std::vector<Homomorphism> epimorphisms(const Presentation& p, const ConcreteGroup& g,
                                       std::span<const MeridianConstraint> constraints, const SearchLimits& limits) {
  std::vector<Homomorphism> out;
  for_each_homomorphism(
      p, g, constraints,
      [&](std::span<const Element> images) {
        if (is_surjective(g, images)) out.push_back({p.generators(), g.name(), {images.begin(), images.end()}});
        return true;
      },
      limits);
  return out;
}

HomCounts count_homomorphisms(const Presentation& p, const ConcreteGroup& g,
                              std::span<const MeridianConstraint> constraints, const SearchLimits& limits) {
  HomCounts counts;
  for_each_homomorphism(
      p, g, constraints,
      [&](std::span<const Element> images) {
        ++counts.homs;
        if (is_surjective(g, images)) ++counts.epis;
        return true;
      },
      limits);
  return counts;
}

bool is_valid_homomorphism(const Presentation& p, const ConcreteGroup& g, const Homomorphism& h,
                           std::span<const MeridianConstraint> constraints) {
  if (h.generators != p.generators() || h.images.size() != p.generators().size()) return false;
  for (auto e : h.images)
    if (e >= g.order()) return false;
  for (const auto& r : p.relators())
    if (evaluate(p, g, h.images, r) != 0) return false;
  for (const auto& c : constraints)
    if (!satisfies_constraint(g, h.image_of(c.generator), c)) return false;
  return true;
}

std::vector<HomCounts> fingerprint(const Presentation& p, std::span<const ConcreteGroup> battery,
                                   const SearchLimits& limits) {
  std::vector<HomCounts> out;
  out.reserve(battery.size());
  for (const auto& g : battery) out.push_back(count_homomorphisms(p, g, {}, limits));
  return out;
}

Distinction distinguish(const Presentation& left, const Presentation& right, std::span<const ConcreteGroup> battery,
                        const SearchLimits& limits) {
  Distinction d;
  d.left = fingerprint(left, battery, limits);
  d.right = fingerprint(right, battery, limits);
  for (std::size_t i = 0; i < battery.size(); ++i)
    if (d.left[i] != d.right[i]) {
      d.distinguished_by = battery[i].name();
      break;
    }
  return d;
}

namespace {

void require_class(const Presentation& p, const std::string& gen, std::string_view prefix) {
  if (!p.has_generator(gen)) throw InvalidInput("unknown generator '" + gen + "'");
  const auto cls = p.class_of(gen);
  if (!cls || cls->rfind(prefix, 0) != 0)
    throw InvalidInput("missing class labels: generator '" + gen + "' must carry a '" + std::string(prefix) +
                       "' class");
}

CoverTest first_epimorphism(const Presentation& p, const ConcreteGroup& g, std::vector<MeridianConstraint> constraints,
                            const SearchLimits& limits) {
  CoverTest out;
  out.constraints = std::move(constraints);
  for_each_homomorphism(
      p, g, out.constraints,
      [&](std::span<const Element> images) {
        if (!is_surjective(g, images)) return true;
        out.exists = true;
        out.witness = Homomorphism{p.generators(), g.name(), {images.begin(), images.end()}};
        return false;
      },
      limits);
  return out;
}

}  // namespace

CoverTest dihedral_cover_test(const Presentation& p, std::span<const std::string> line_gens,
                              const std::string& curve_gen, int n, const SearchLimits& limits) {
  if (n < 3) throw InvalidInput("dihedral cover test needs n >= 3");
  for (const auto& l : line_gens) require_class(p, l, "line");
  require_class(p, curve_gen, "curve");

  const ConcreteGroup g = dihedral(n);
  std::vector<MeridianConstraint> constraints;
  for (const auto& l : line_gens) constraints.push_back({l, 2, std::nullopt, "rotations", std::nullopt});
  constraints.push_back({curve_gen, static_cast<std::uint64_t>(n), "rotations", std::nullopt, std::nullopt});
  return first_epimorphism(p, g, std::move(constraints), limits);
}

CoverTest gk_cover_test(const Presentation& p, std::span<const std::string> line_gens, const std::string& curve_gen,
                        int k, const SearchLimits& limits) {
  if (k < 3) throw InvalidInput("G(k) cover test needs k >= 3");
  for (const auto& l : line_gens) require_class(p, l, "line");
  require_class(p, curve_gen, "curve");

  const ConcreteGroup g = gk(k);
  std::vector<MeridianConstraint> constraints;
  for (const auto& l : line_gens)
    constraints.push_back(
        {l, std::nullopt, std::nullopt, std::nullopt, std::pair<std::string, std::uint64_t>{"H(k)", k}});
  constraints.push_back({curve_gen, 2, "H(k)", std::nullopt, std::nullopt});
  return first_epimorphism(p, g, std::move(constraints), limits);
}

Refutation refute_consequence(std::span<const Word> base, const Word& candidate,
                              std::span<const ConcreteGroup> battery, const SearchLimits& limits) {
  std::set<std::string> names;
  for (const auto& w : base)
    for (const auto& s : w.syllables()) names.insert(s.gen);
  for (const auto& s : candidate.syllables()) names.insert(s.gen);
  const Presentation p(std::vector<std::string>(names.begin(), names.end()),
                       std::vector<Word>(base.begin(), base.end()));
  const auto compiled = compile(p, candidate);

  Refutation out;
  for (const auto& g : battery) {
    for_each_homomorphism(
        p, g, {},
        [&](std::span<const Element> images) {
          if (eval(g, images, compiled) == 0) return true;
          out.refuted_by = g.name();
          out.witness = Homomorphism{p.generators(), g.name(), {images.begin(), images.end()}};
          return false;
        },
        limits);
    if (out.refuted_by) break;
  }
  return out;
}

std::string format_witness(const Homomorphism& h, const ConcreteGroup& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < h.generators.size(); ++i)
    out << h.generators[i] << " -> " << g.element_name(h.images[i]) << '\n';
  return out.str();
}

}  // namespace curvegrp
