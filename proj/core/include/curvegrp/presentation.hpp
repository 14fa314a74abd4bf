#pragma once

// Finitely presented groups.
//
// Relators are stored in canonical cyclic form (see canonical_cyclic) and
// deduplicated, so two presentations with the same generators and the same
// relator set up to rotation and inversion compare equal after sorting.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvegrp/word.hpp"

namespace curvegrp {

using ClassMap = std::map<std::string, std::string, std::less<>>;
using Substitution = std::map<std::string, Word, std::less<>>;

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generators, std::vector<Word> relators = {},
                        ClassMap classes = {});

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const ClassMap& classes() const { return classes_; }

  bool has_generator(std::string_view g) const;
  std::optional<std::size_t> generator_index(std::string_view g) const;
  std::optional<std::string> class_of(std::string_view g) const;

  Presentation with_class(const std::string& g, std::string label) const;

  // Relators in sorted canonical order; the basis for set comparisons.
  std::vector<Word> sorted_relators() const;

  // Text form:
  //   generators: m b
  //   class m = curve:D
  //   relator: m b^2 m^-1 b^-2
  std::string to_text() const;
  // Accepts the text form; blank lines and lines starting with '#' are skipped.
  static Presentation parse(std::string_view text);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
  ClassMap classes_;
};

// Same generator list and the same relator set up to canonical form.
bool same_group_data(const Presentation& a, const Presentation& b);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<std::int64_t> torsion;  // each >= 2, each dividing the next

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

Presentation add_relator(const Presentation& p, const Word& w);
// Adjoins `g` as a relator and eliminates it; throws InvalidInput for an
// unknown generator.
Presentation kill_generator(const Presentation& p, const std::string& g);

struct TietzeOptions {
  std::size_t max_moves = 10'000;
  // A substitution may grow the total relator length by at most this factor.
  std::size_t max_growth = 4;
};

struct TietzeResult {
  Presentation presentation;
  // Each eliminated generator expressed in the surviving generators.
  Substitution eliminated;
  std::size_t moves = 0;
};

// Tietze moves to a fixed point:
//   - drop identity relators, deduplicate up to rotation and inversion;
//   - eliminate a generator occurring exactly once (exponent +-1) in some
//     relator, scanning generators from last declared to first and relators
//     in list order;
//   - shorten a relator by replacing a cyclic subword that is more than half
//     of another relator with the inverse of the remainder.
TietzeResult tietze_simplify_tracked(const Presentation& p, const TietzeOptions& options = {});
Presentation tietze_simplify(const Presentation& p, const TietzeOptions& options = {});

struct BasisChange {
  Presentation presentation;
  // Old generators in terms of the new basis.
  Substitution old_in_new;
  // New generators in terms of the old basis.
  Substitution new_in_old;
};

// Introduces `name` := `w` and removes the first generator h that occurs
// exactly once in w with exponent +-1, replacing it by its expression in
// `name` and the remaining generators.  `name` takes h's place in the
// generator list.  Throws InvalidInput if no such h exists or `name` clashes
// with another generator.
BasisChange change_basis(const Presentation& p, const std::string& name, const Word& w);

// Pushes every occurrence of `outer` to the ends of `w` using rules
// outer^-1 m outer = v_m read off the relators of `p` (positive powers move
// left, negative powers move right).  Returns outer^p u outer^-q, freely
// reduced; the identity certifies that w lies in the normal closure.
// Throws InvalidInput("incomplete conjugation table") when a needed rule is
// missing.
Word rewrite_conjugations(const Presentation& p, const Word& w, const std::string& outer);

// The rules outer^-1 m outer = v_m found among the relators of `p`.
Substitution conjugation_rules(const Presentation& p, const std::string& outer);

// True when eliminating generators by Tietze moves maps `w` to the identity;
// a proof that w is a consequence of the relators.  False means "not shown".
bool consequence_by_substitution(const Presentation& p, const Word& w);

AbelianInvariants abelianization(const Presentation& p);

// Every generator of `w` is declared in `p`.
bool uses_only_generators(const Presentation& p, const Word& w);

}  // namespace curvegrp
