#include "curvegrp/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curvegrp/error.hpp"
#include "curvegrp/smith.hpp"

namespace curvegrp {

namespace {

std::vector<Word> canonical_unique(const std::vector<Word>& relators, bool drop_identity) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const auto& r : relators) {
    Word c = canonical_cyclic(r);
    if (drop_identity && c.is_identity()) continue;
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::size_t total_length(const std::vector<Word>& words) {
  std::size_t n = 0;
  for (const auto& w : words) n += w.length();
  return n;
}

Letter inverse_letter(const Letter& l) { return {l.gen, -l.sign}; }

std::vector<Letter> inverse_letters(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators, ClassMap classes)
    : generators_(std::move(generators)), classes_(std::move(classes)) {
  std::set<std::string, std::less<>> names;
  for (const auto& g : generators_) {
    if (!is_valid_generator_name(g)) throw InvalidInput("invalid generator name '" + g + "'");
    if (!names.insert(g).second) throw InvalidInput("duplicate generator '" + g + "'");
  }
  for (const auto& r : relators)
    for (const auto& s : r.syllables())
      if (!names.contains(s.gen)) throw InvalidInput("relator uses undeclared generator '" + s.gen + "'");
  for (const auto& [g, label] : classes_)
    if (!names.contains(g)) throw InvalidInput("class assigned to undeclared generator '" + g + "'");
  relators_ = canonical_unique(relators, false);
}

bool Presentation::has_generator(std::string_view g) const { return generator_index(g).has_value(); }

std::optional<std::size_t> Presentation::generator_index(std::string_view g) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == g) return i;
  return std::nullopt;
}

std::optional<std::string> Presentation::class_of(std::string_view g) const {
  if (auto it = classes_.find(g); it != classes_.end()) return it->second;
  return std::nullopt;
}

Presentation Presentation::with_class(const std::string& g, std::string label) const {
  auto classes = classes_;
  classes[g] = std::move(label);
  return Presentation(generators_, relators_, std::move(classes));
}

std::vector<Word> Presentation::sorted_relators() const {
  auto rels = relators_;
  std::sort(rels.begin(), rels.end());
  return rels;
}

std::string Presentation::to_text() const {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : generators_) out << ' ' << g;
  out << '\n';
  for (const auto& g : generators_)
    if (auto c = class_of(g)) out << "class " << g << " = " << *c << '\n';
  for (const auto& r : relators_) {
    out << "relator:";
    if (!r.is_identity()) out << ' ' << r.to_string();
    out << '\n';
  }
  return out.str();
}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<std::vector<std::string>> gens;
  std::vector<Word> rels;
  ClassMap classes;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string& why) {
      throw InvalidInput("presentation line " + std::to_string(lineno) + ": " + why);
    };
    if (line.rfind("generators:", 0) == 0) {
      if (gens) fail("duplicate generators line");
      std::istringstream names(line.substr(11));
      gens.emplace();
      for (std::string g; names >> g;) gens->push_back(g);
    } else if (line.rfind("relator:", 0) == 0) {
      if (!gens) fail("relator before generators line");
      rels.push_back(Word::parse(line.substr(8)));
    } else if (line.rfind("class ", 0) == 0) {
      if (!gens) fail("class before generators line");
      const auto eq = line.find('=');
      if (eq == std::string::npos) fail("expected 'class <gen> = <label>'");
      const std::string g = trim(std::string_view(line).substr(6, eq - 6));
      const std::string label = trim(std::string_view(line).substr(eq + 1));
      if (g.empty() || label.empty()) fail("expected 'class <gen> = <label>'");
      classes[g] = label;
    } else {
      fail("unrecognised line '" + line + "'");
    }
  }
  if (!gens) throw InvalidInput("presentation has no generators line");
  return Presentation(std::move(*gens), std::move(rels), std::move(classes));
}

bool same_group_data(const Presentation& a, const Presentation& b) {
  return a.generators() == b.generators() && a.sorted_relators() == b.sorted_relators();
}

bool uses_only_generators(const Presentation& p, const Word& w) {
  return std::all_of(w.syllables().begin(), w.syllables().end(),
                     [&](const Syllable& s) { return p.has_generator(s.gen); });
}

Presentation add_relator(const Presentation& p, const Word& w) {
  auto rels = p.relators();
  rels.push_back(w);
  return Presentation(p.generators(), std::move(rels), p.classes());
}

Presentation kill_generator(const Presentation& p, const std::string& g) {
  if (!p.has_generator(g)) throw InvalidInput("unknown generator '" + g + "'");
  std::vector<std::string> gens;
  for (const auto& h : p.generators())
    if (h != g) gens.push_back(h);
  const Substitution kill{{g, Word{}}};
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(r.substitute(kill));
  auto classes = p.classes();
  classes.erase(g);
  return Presentation(std::move(gens), std::move(rels), std::move(classes));
}

namespace {

struct TietzeState {
  std::vector<std::string> gens;
  std::vector<Word> rels;
  ClassMap classes;
  Substitution eliminated;

  void normalize() { rels = canonical_unique(rels, true); }

  bool try_eliminate(const TietzeOptions& options) {
    const std::size_t before = total_length(rels);
    for (std::size_t gi = gens.size(); gi-- > 0;) {
      const std::string g = gens[gi];
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Word& r = rels[ri];
        if (r.occurrences(g) != 1 || std::abs(r.exponent_sum(g)) != 1) continue;
        // Rotate so the single g-letter leads: r ~ g^e u.
        const auto letters = r.letters();
        std::size_t pos = 0;
        while (letters[pos].gen != g) ++pos;
        const int e = letters[pos].sign;
        const auto rotated = rotate_letters(letters, pos);
        const Word u = Word::from_letters(std::span(rotated).subspan(1));
        const Word value = e > 0 ? u.inverse() : u;

        const Substitution step{{g, value}};
        std::vector<Word> next;
        for (std::size_t rj = 0; rj < rels.size(); ++rj)
          if (rj != ri) next.push_back(rels[rj].substitute(step));
        if (total_length(next) > options.max_growth * std::max<std::size_t>(before, 1)) continue;

        for (auto& [name, img] : eliminated) img = img.substitute(step);
        eliminated.emplace(g, value);
        rels = std::move(next);
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(gi));
        classes.erase(g);
        return true;
      }
    }
    return false;
  }

  bool try_shorten() {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const auto r = rels[i].letters();
      const std::size_t n = r.size();
      for (std::size_t j = 0; j < rels.size(); ++j) {
        if (i == j) continue;
        const auto s_fwd = rels[j].letters();
        const std::size_t m = s_fwd.size();
        if (m == 0 || m > 2 * n) continue;
        const std::vector<Letter> forms[2] = {s_fwd, inverse_letters(s_fwd)};

        std::size_t best_len = 0, best_p = 0, best_q = 0, best_form = 0;
        for (std::size_t form = 0; form < 2; ++form)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < m; ++q) {
              std::size_t len = 0;
              const std::size_t cap = std::min(n, m);
              while (len < cap && r[(p + len) % n] == forms[form][(q + len) % m]) ++len;
              if (len > best_len) {
                best_len = len;
                best_p = p;
                best_q = q;
                best_form = form;
              }
            }
        if (2 * best_len <= m) continue;

        // r ~ x t, s ~ x v with x the matched window; x = v^-1, so r ~ v^-1 t.
        const auto r_rot = rotate_letters(r, best_p);
        const auto s_rot = rotate_letters(forms[best_form], best_q);
        std::vector<Letter> v(s_rot.begin() + static_cast<std::ptrdiff_t>(best_len), s_rot.end());
        std::vector<Letter> out = inverse_letters(v);
        out.insert(out.end(), r_rot.begin() + static_cast<std::ptrdiff_t>(best_len), r_rot.end());
        rels[i] = canonical_cyclic(Word::from_letters(out));
        return true;
      }
    }
    return false;
  }
};

}  // namespace

TietzeResult tietze_simplify_tracked(const Presentation& p, const TietzeOptions& options) {
  TietzeState st{p.generators(), p.relators(), p.classes(), {}};
  std::size_t moves = 0;
  st.normalize();
  while (moves < options.max_moves) {
    if (st.try_eliminate(options) || st.try_shorten()) {
      ++moves;
      st.normalize();
      continue;
    }
    break;
  }
  return {Presentation(std::move(st.gens), std::move(st.rels), std::move(st.classes)), std::move(st.eliminated),
          moves};
}

Presentation tietze_simplify(const Presentation& p, const TietzeOptions& options) {
  return tietze_simplify_tracked(p, options).presentation;
}

BasisChange change_basis(const Presentation& p, const std::string& name, const Word& w) {
  if (!uses_only_generators(p, w)) throw InvalidInput("substitution uses undeclared generators");
  if (!is_valid_generator_name(name)) throw InvalidInput("invalid generator name '" + name + "'");

  const auto& syl = w.syllables();
  std::optional<std::size_t> pick;
  for (std::size_t i = 0; i < syl.size() && !pick; ++i)
    if (std::abs(syl[i].exp) == 1 && w.occurrences(syl[i].gen) == 1) pick = i;
  if (!pick) throw InvalidInput("non-invertible substitution for '" + name + "'");

  const std::string h = syl[*pick].gen;
  if (name != h && p.has_generator(name)) throw InvalidInput("generator '" + name + "' already exists");

  // w = u h^e v  =>  h = (u^-1 name v^-1)^e
  const Word u = Word::from_syllables(std::span(syl).subspan(0, *pick));
  const Word v = Word::from_syllables(std::span(syl).subspan(*pick + 1));
  Word h_expr = u.inverse() * Word::generator(name) * v.inverse();
  if (syl[*pick].exp < 0) h_expr = h_expr.inverse();

  BasisChange out;
  std::vector<std::string> gens;
  for (const auto& g : p.generators()) {
    gens.push_back(g == h ? name : g);
    if (g != h) {
      out.old_in_new.emplace(g, Word::generator(g));
      out.new_in_old.emplace(g, Word::generator(g));
    }
  }
  out.old_in_new.emplace(h, h_expr);
  out.new_in_old.emplace(name, w);

  const Substitution step{{h, h_expr}};
  std::vector<Word> rels;
  for (const auto& r : p.relators()) rels.push_back(r.substitute(step));
  auto classes = p.classes();
  if (name != h) classes.erase(h);
  out.presentation = Presentation(std::move(gens), std::move(rels), std::move(classes));
  return out;
}

Substitution conjugation_rules(const Presentation& p, const std::string& outer) {
  Substitution rules;
  for (const auto& r : p.relators()) {
    if (r.occurrences(outer) != 2) continue;
    const auto fwd = r.letters();
    for (const auto& form : {fwd, inverse_letters(fwd)}) {
      for (std::size_t start = 0; start < form.size(); ++start) {
        const auto rot = rotate_letters(form, start);
        if (rot.size() < 3) continue;
        if (rot[0] != Letter{outer, -1} || rot[2] != Letter{outer, 1}) continue;
        if (rot[1].gen == outer || rot[1].sign != 1) continue;
        const Word rest = Word::from_letters(std::span(rot).subspan(3));
        if (rest.contains(outer)) continue;
        rules.emplace(rot[1].gen, rest.inverse());
      }
    }
  }
  return rules;
}

Word rewrite_conjugations(const Presentation& p, const Word& w, const std::string& outer) {
  const Substitution rules = conjugation_rules(p, outer);
  auto apply = [&](const Word& x, std::int64_t times) {
    Word cur = x;
    for (std::int64_t t = 0; t < times; ++t) {
      for (const auto& s : cur.syllables())
        if (!rules.contains(s.gen))
          throw InvalidInput("incomplete conjugation table");
      cur = cur.substitute(rules);
    }
    return cur;
  };

  // Invariant: the processed prefix equals outer^left * middle * outer^-right.
  std::int64_t left = 0;
  std::int64_t right = 0;
  Word middle;
  for (const auto& l : w.letters()) {
    if (l.gen != outer) {
      middle *= apply(Word::from_letters(std::span(&l, 1)), right);
    } else if (l.sign < 0) {
      ++right;
    } else if (right > 0) {
      --right;
    } else {
      middle = apply(middle, 1);
      ++left;
    }
  }
  return Word::generator(outer, left) * middle * Word::generator(outer, -right);
}

bool consequence_by_substitution(const Presentation& p, const Word& w) {
  if (!uses_only_generators(p, w)) throw InvalidInput("word uses undeclared generators");
  const auto result = tietze_simplify_tracked(p);
  return w.substitute(result.eliminated).is_identity();
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto& gens = p.generators();
  IntMatrix m(p.relators().size(), gens.size());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t c = 0; c < gens.size(); ++c) m(r, c) = p.relators()[r].exponent_sum(gens[c]);

  const auto snf = smith_normal_form(m);
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (auto d : snf.diagonal) {
    if (d != 0) ++nonzero;
    if (d >= 2) out.torsion.push_back(d);
  }
  out.rank = gens.size() - nonzero;
  return out;
}

}  // namespace curvegrp
