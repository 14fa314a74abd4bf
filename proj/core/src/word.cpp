#include "curvegrp/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "curvegrp/error.hpp"

namespace curvegrp {

std::strong_ordering compare_letters(const Letter& a, const Letter& b) {
  if (auto c = a.gen <=> b.gen; c != 0) return c;
  // +1 sorts before -1
  return b.sign <=> a.sign;
}

bool is_valid_generator_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void Word::push(const std::string& gen, std::int64_t exp) {
  if (exp == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == gen) {
    syllables_.back().exp += exp;
    if (syllables_.back().exp == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({gen, exp});
}

Word Word::generator(std::string name, std::int64_t exp) {
  Word w;
  w.push(name, exp);
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const auto& l : letters) w.push(l.gen, l.sign);
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.push(s.gen, s.exp);
  return w;
}

Word Word::parse(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view tok = token;
    std::int64_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      auto digits = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
        throw InvalidInput("bad exponent in word token '" + token + "'");
      if (exp == 0) throw InvalidInput("zero exponent in word token '" + token + "'");
      tok = tok.substr(0, caret);
    }
    if (!is_valid_generator_name(tok))
      throw InvalidInput("bad generator name in word token '" + token + "'");
    w.push(std::string(tok), exp);
  }
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (const auto& s : syllables_) {
    const int sign = s.exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.push_back({s.gen, sign});
  }
  return out;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::size_t>(s.exp > 0 ? s.exp : -s.exp);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::power(std::int64_t n) const {
  if (n < 0) return inverse().power(-n);
  Word w;
  for (std::int64_t i = 0; i < n; ++i) w *= *this;
  return w;
}

Word Word::conjugate(const Word& g) const { return g.inverse() * *this * g; }

std::int64_t Word::exponent_sum(std::string_view gen) const {
  std::int64_t total = 0;
  for (const auto& s : syllables_)
    if (s.gen == gen) total += s.exp;
  return total;
}

bool Word::contains(std::string_view gen) const { return occurrences(gen) > 0; }

std::size_t Word::occurrences(std::string_view gen) const {
  return static_cast<std::size_t>(
      std::count_if(syllables_.begin(), syllables_.end(), [&](const Syllable& s) { return s.gen == gen; }));
}

Word Word::substitute(const std::map<std::string, Word, std::less<>>& images) const {
  Word w;
  for (const auto& s : syllables_) {
    auto it = images.find(s.gen);
    if (it == images.end()) {
      w.push(s.gen, s.exp);
      continue;
    }
    w *= it->second.power(s.exp);
  }
  return w;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w *= b;
  return w;
}

Word& Word::operator*=(const Word& other) {
  for (const auto& s : other.syllables_) push(s.gen, s.exp);
  return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const auto la = a.letters();
  const auto lb = b.letters();
  return std::lexicographical_compare_three_way(la.begin(), la.end(), lb.begin(), lb.end(), compare_letters);
}

Word reduce(std::span<const Letter> letters) { return Word::from_letters(letters); }
Word multiply(const Word& a, const Word& b) { return a * b; }
Word invert(const Word& w) { return w.inverse(); }
Word conjugate(const Word& w, const Word& g) { return w.conjugate(g); }
std::int64_t exponent_sum(const Word& w, std::string_view gen) { return w.exponent_sum(gen); }

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word cyclically_reduce(const Word& w) {
  auto syl = w.syllables();
  std::size_t lo = 0;
  std::size_t hi = syl.size();
  while (hi - lo >= 2 && syl[lo].gen == syl[hi - 1].gen) {
    const std::int64_t merged = syl[lo].exp + syl[hi - 1].exp;
    if (merged != 0) {
      // Fold the tail syllable into the head; the word is now cyclically reduced.
      syl[lo].exp = merged;
      --hi;
      break;
    }
    ++lo;
    --hi;
  }
  return Word::from_syllables(std::span(syl).subspan(lo, hi - lo));
}

std::vector<Letter> rotate_letters(std::span<const Letter> letters, std::size_t start) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) out.push_back(letters[(start + i) % letters.size()]);
  return out;
}

namespace {

std::vector<Letter> least_rotation(const std::vector<Letter>& letters) {
  std::vector<Letter> best = letters;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    auto cand = rotate_letters(letters, i);
    if (std::lexicographical_compare_three_way(cand.begin(), cand.end(), best.begin(), best.end(),
                                               compare_letters) < 0)
      best = std::move(cand);
  }
  return best;
}

}  // namespace

Word canonical_cyclic(const Word& w) {
  const Word r = cyclically_reduce(w);
  const auto a = least_rotation(r.letters());
  const auto b = least_rotation(r.inverse().letters());
  const bool pick_a =
      std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end(), compare_letters) <= 0;
  return Word::from_letters(pick_a ? a : b);
}

}  // namespace curvegrp
