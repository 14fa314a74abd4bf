#pragma once

// Words in a free group on named generators.
//
// A Word is kept freely reduced at all times and stored in run-length form:
// a sequence of syllables (generator, nonzero exponent) where neighbouring
// syllables never share a generator.  Generators are plain strings ordered
// lexicographically; that order (together with + before -) is the letter
// order used for every canonical form in the library.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace curvegrp {

struct Letter {
  std::string gen;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Letter order: generator name, then positive before negative.
std::strong_ordering compare_letters(const Letter& a, const Letter& b);

struct Syllable {
  std::string gen;
  std::int64_t exp = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;

  static Word generator(std::string name, std::int64_t exp = 1);
  static Word from_letters(std::span<const Letter> letters);
  static Word from_syllables(std::span<const Syllable> syllables);

  // Parses whitespace-separated tokens `name`, `name^-1`, `name^k`.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::vector<Letter> letters() const;

  bool is_identity() const { return syllables_.empty(); }
  // Number of letters (sum of |exp|).
  std::size_t length() const;

  Word inverse() const;
  Word power(std::int64_t n) const;
  // g^-1 * this * g
  Word conjugate(const Word& g) const;

  std::int64_t exponent_sum(std::string_view gen) const;
  bool contains(std::string_view gen) const;
  // Number of syllables of `gen`.
  std::size_t occurrences(std::string_view gen) const;

  // Homomorphic image: every generator found in `images` is replaced by its
  // image, every other generator is left alone.
  Word substitute(const std::map<std::string, Word, std::less<>>& images) const;

  std::string to_string() const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  void push(const std::string& gen, std::int64_t exp);

  std::vector<Syllable> syllables_;
};

// Free-function forms of the basic operations.
Word reduce(std::span<const Letter> letters);
Word multiply(const Word& a, const Word& b);
Word invert(const Word& w);
Word conjugate(const Word& w, const Word& g);
std::int64_t exponent_sum(const Word& w, std::string_view gen);

// [a, b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

// Removes inverse pairs across the ends; the result is a conjugate of w.
Word cyclically_reduce(const Word& w);

// Least cyclic rotation of the cyclic reduction of w, compared against the
// least rotation of its inverse; the smaller one.
Word canonical_cyclic(const Word& w);

// The letter sequence read cyclically from position `start`.
std::vector<Letter> rotate_letters(std::span<const Letter> letters, std::size_t start);

bool is_valid_generator_name(std::string_view name);

}  // namespace curvegrp
