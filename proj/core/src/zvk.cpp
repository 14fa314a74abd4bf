#include "curvegrp/zvk.hpp"

#include <set>

#include "curvegrp/error.hpp"

namespace curvegrp {

void MonodromyInput::validate() const {
  if (strands < 1) throw InvalidInput("monodromy needs at least one strand");
  if (static_cast<int>(meridian_names.size()) != strands)
    throw InvalidInput("expected " + std::to_string(strands) + " strand meridian names");
  std::set<std::string> names;
  for (const auto& m : meridian_names) {
    if (!is_valid_generator_name(m)) throw InvalidInput("invalid meridian name '" + m + "'");
    if (!names.insert(m).second) throw InvalidInput("duplicate meridian name '" + m + "'");
  }
  for (const auto& f : fibers) {
    if (f.braid.strands() != strands)
      throw InvalidInput("fiber '" + f.label + "' braid has " + std::to_string(f.braid.strands()) + " strands");
    if (f.meridian) {
      if (!is_valid_generator_name(*f.meridian)) throw InvalidInput("invalid meridian name '" + *f.meridian + "'");
      if (!names.insert(*f.meridian).second)
        throw InvalidInput("fiber meridian '" + *f.meridian + "' clashes with another meridian");
    }
  }
}

std::vector<Word> fibered_relators(const MonodromyInput& input) {
  input.validate();
  std::vector<Word> rels;
  for (const auto& f : input.fibers) {
    const auto images = braid_images(f.braid, input.meridian_names);
    for (std::size_t i = 0; i < images.size(); ++i) {
      Word m = Word::generator(input.meridian_names[i]);
      if (f.meridian) m = m.conjugate(Word::generator(*f.meridian));
      rels.push_back(m * images[i].inverse());
    }
  }
  return rels;
}

Presentation fibered_presentation(const MonodromyInput& input) {
  auto rels = fibered_relators(input);
  std::vector<std::string> gens = input.meridian_names;
  ClassMap classes;
  for (const auto& m : input.meridian_names) classes[m] = "strand";
  for (const auto& f : input.fibers)
    if (f.meridian) {
      gens.push_back(*f.meridian);
      classes[*f.meridian] = "vertical:" + f.label;
    }
  return Presentation(std::move(gens), std::move(rels), std::move(classes));
}

Presentation projective_quotient(const Presentation& p, const MonodromyInput& input) {
  for (const auto& f : input.fibers)
    if (f.meridian) throw InvalidInput("projective closure of fibered data unsupported");
  Word product;
  for (auto it = input.meridian_names.rbegin(); it != input.meridian_names.rend(); ++it)
    product *= Word::generator(*it);
  return add_relator(p, product);
}

BraidWord local_braid(LocalBraidKind kind, int param) {
  switch (kind) {
    case LocalBraidKind::Tangency:
      if (param < 0) throw InvalidInput("tangency index r must be >= 0");
      return BraidWord::generator(2, 1, 2 * (2 * param + 1));
    case LocalBraidKind::Node:
      return BraidWord::generator(2, 1, 2);
    case LocalBraidKind::Asymptote:
      return BraidWord::generator(2, 1, -2);
    case LocalBraidKind::AsymptoteTypeII: {
      const int k = param;
      if (k < 3) throw InvalidInput("type II asymptote braid needs k >= 3");
      std::vector<BraidLetter> letters;
      for (int i = 1; i <= k - 2; ++i) letters.push_back({i, 1});
      letters.push_back({k - 1, 1});
      letters.push_back({k - 1, 1});
      for (int i = k - 2; i >= 1; --i) letters.push_back({i, 1});
      return BraidWord(k, std::move(letters)).inverse();
    }
  }
  throw InvalidInput("unknown local braid kind");
}

namespace {

ClassMap kk_classes() { return {{"l", "line:L1"}, {"x", "curve:D"}}; }

}  // namespace

Presentation k_group(int k) {
  if (k < 1) throw InvalidInput("K_k needs k >= 1");
  const Word l = Word::generator("l");
  const Word x = Word::generator("x");
  std::vector<Word> rels{commutator(x, l.power(k))};
  for (int i = 1; i <= k - 1; ++i) rels.push_back(commutator(x, x.conjugate(l.power(i))));
  return Presentation({"l", "x"}, std::move(rels), kk_classes());
}

Presentation k_group_long(int k) {
  if (k < 1) throw InvalidInput("K_k needs k >= 1");
  std::vector<std::string> gens{"l"};
  std::vector<Word> xs;
  for (int i = 1; i <= k; ++i) {
    gens.push_back("x" + std::to_string(i));
    xs.push_back(Word::generator(gens.back()));
  }
  const Word l = Word::generator("l");
  std::vector<Word> rels;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) rels.push_back(commutator(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]));
  for (int i = 0; i < k; ++i)
    rels.push_back(xs[static_cast<std::size_t>(i)].conjugate(l) * xs[static_cast<std::size_t>((i + 1) % k)].inverse());
  return Presentation(std::move(gens), std::move(rels), {{"l", "line:L1"}, {"x1", "curve:D"}});
}

Presentation smooth_family_group() {
  const Word l = Word::generator("l");
  const Word x = Word::generator("x");
  return Presentation({"l", "x"}, {commutator(x, l)}, kk_classes());
}

MonodromyInput nodal_cubic_input() {
  MonodromyInput in;
  in.strands = 2;
  in.meridian_names = {"m1", "m2"};
  in.fibers.push_back({BraidWord::parse(2, "s1^2"), "a", "alpha"});
  in.fibers.push_back({BraidWord::parse(2, "s1"), "b", "beta"});
  return in;
}

NodalCubicStages nodal_cubic_pipeline() {
  NodalCubicStages st;
  st.fibered = fibered_presentation(nodal_cubic_input());
  st.killed = kill_generator(st.fibered, "a");
  const Presentation reduced = tietze_simplify(st.killed);
  const auto basis = change_basis(reduced, "m", Word::parse("m1 b"));
  st.simplified = tietze_simplify(basis.presentation);
  return st;
}

std::vector<Word> nodal_cubic_reference_relators() {
  const Word m1 = Word::generator("m1");
  const Word m2 = Word::generator("m2");
  const Word a = Word::generator("a");
  const Word b = Word::generator("b");
  return {
      m1.conjugate(a) * (m2 * m1 * m2.inverse()).inverse(),
      commutator(m2 * m1, a),
      m1.conjugate(b) * m2.inverse(),
      commutator(m2 * m1, b),
  };
}

}  // namespace curvegrp
