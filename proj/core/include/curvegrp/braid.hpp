#pragma once

// Braid words and their right action on free groups.
//
// The generator s_i acts on the strand meridians x_1..x_n by
//   x_i     -> x_{i+1}
//   x_{i+1} -> x_{i+1} x_i x_{i+1}^-1
// and fixes every other x_j.  Its inverse acts by x_i -> x_i^-1 x_{i+1} x_i,
// x_{i+1} -> x_i.  With this convention the decreasing product
// x_n x_{n-1} ... x_1 is invariant.  Letters of a braid word act left to right.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvegrp/word.hpp"

namespace curvegrp {

struct BraidLetter {
  int index = 1;  // 1..strands-1
  int sign = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  // Tokens `s<i>`, `s<i>^-1`, `s<i>^k`.
  static BraidWord parse(int strands, std::string_view text);
  static BraidWord generator(int strands, int index, int exp = 1);

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }

  BraidWord inverse() const;
  std::string to_string() const;

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Default strand meridian names x1..xn.
std::vector<std::string> default_strand_names(int n, std::string_view prefix = "x");

// Images of the strand meridians under the action of `braid`.
std::vector<Word> braid_images(const BraidWord& braid, std::span<const std::string> strands);

// The action of `braid` on `w`; every generator of `w` must be one of `strands`.
Word artin_act(const BraidWord& braid, const Word& w, std::span<const std::string> strands);

}  // namespace curvegrp
