#include "curvegrp/braid.hpp"

#include <charconv>
#include <sstream>

#include "curvegrp/error.hpp"

namespace curvegrp {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidInput("braid strand count must be positive");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > strands_ - 1)
      throw InvalidInput("braid generator s" + std::to_string(l.index) + " out of range for " +
                         std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw InvalidInput("braid letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::generator(int strands, int index, int exp) {
  std::vector<BraidLetter> letters;
  for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) letters.push_back({index, exp > 0 ? 1 : -1});
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || token[0] != 's') throw InvalidInput("bad braid token '" + token + "'");
    std::string_view rest = std::string_view(token).substr(1);
    int exp = 1;
    std::string_view idx = rest;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      idx = rest.substr(0, caret);
      auto e = rest.substr(caret + 1);
      auto [p, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
      if (e.empty() || ec != std::errc{} || p != e.data() + e.size() || exp == 0)
        throw InvalidInput("bad braid exponent in '" + token + "'");
    }
    int index = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
    if (idx.empty() || ec != std::errc{} || p != idx.data() + idx.size())
      throw InvalidInput("bad braid index in '" + token + "'");
    for (int i = 0; i < (exp > 0 ? exp : -exp); ++i) letters.push_back({index, exp > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> inv;
  inv.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) inv.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(inv));
}

std::string BraidWord::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    int exp = 0;
    const int index = letters_[i].index;
    const int sign = letters_[i].sign;
    while (i < letters_.size() && letters_[i].index == index && letters_[i].sign == sign) {
      exp += sign;
      ++i;
    }
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(index);
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw InvalidInput("braid strand counts differ");
  auto letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(letters));
}

std::vector<std::string> default_strand_names(int n, std::string_view prefix) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::vector<Word> braid_images(const BraidWord& braid, std::span<const std::string> strands) {
  if (static_cast<int>(strands.size()) != braid.strands())
    throw InvalidInput("expected " + std::to_string(braid.strands()) + " strand meridians");
  std::vector<Word> images;
  images.reserve(strands.size());
  for (const auto& s : strands) images.push_back(Word::generator(s));

  for (const auto& letter : braid.letters()) {
    const auto& xi = strands[static_cast<std::size_t>(letter.index - 1)];
    const auto& xj = strands[static_cast<std::size_t>(letter.index)];
    const Word a = Word::generator(xi);
    const Word b = Word::generator(xj);
    std::map<std::string, Word, std::less<>> step;
    if (letter.sign > 0) {
      step.emplace(xi, b);
      step.emplace(xj, b * a * b.inverse());
    } else {
      step.emplace(xi, a.inverse() * b * a);
      step.emplace(xj, a);
    }
    // The new automorphism is applied after the ones already accumulated.
    for (auto& img : images) img = img.substitute(step);
  }
  return images;
}

Word artin_act(const BraidWord& braid, const Word& w, std::span<const std::string> strands) {
  std::map<std::string, Word, std::less<>> images;
  for (const auto& s : w.syllables()) {
    bool found = false;
    for (const auto& name : strands) found = found || name == s.gen;
    if (!found) throw InvalidInput("not a strand meridian: " + s.gen);
  }
  const auto imgs = braid_images(braid, strands);
  for (std::size_t i = 0; i < strands.size(); ++i) images.emplace(strands[i], imgs[i]);
  return w.substitute(images);
}

}  // namespace curvegrp
