#include "curvegrp/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <random>
#include <unordered_map>

#include "curvegrp/error.hpp"

namespace curvegrp {

namespace {

constexpr std::size_t kDenseTableLimit = 1024;

}  // namespace

ConcreteGroup::ConcreteGroup(std::string name, std::size_t order, Product product,
                             std::vector<std::string> element_names, std::vector<Element> inverse)
    : name_(std::move(name)),
      order_(order),
      product_(std::move(product)),
      inverse_(std::move(inverse)),
      names_(std::move(element_names)) {
  if (order_ == 0) throw InvalidInput("group order must be positive");
  if (order_ > kMaxGroupOrder) throw ComputationLimit("table too large");
  if (names_.size() != order_) throw InvalidInput("one name per element required");

  if (order_ <= kDenseTableLimit) {
    table_.resize(order_ * order_);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b) table_[static_cast<std::size_t>(a) * order_ + b] = product_(a, b);
  }
  for (Element a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw InvalidInput(name_ + ": element 0 is not the identity");

  if (inverse_.empty()) {
    inverse_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a) {
      bool found = false;
      for (Element b = 0; b < order_ && !found; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          found = true;
        }
      if (!found) throw InvalidInput(name_ + ": element without inverse");
    }
  }
  if (inverse_.size() != order_) throw InvalidInput(name_ + ": inverse table has wrong size");
  for (Element a = 0; a < order_; ++a)
    if (mul(a, inverse_[a]) != 0 || mul(inverse_[a], a) != 0) throw InvalidInput(name_ + ": bad inverse table");
}

Element ConcreteGroup::pow(Element a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Element result = 0;
  Element base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::optional<Element> ConcreteGroup::find_element(std::string_view name) const {
  for (Element e = 0; e < order_; ++e)
    if (names_[e] == name) return e;
  return std::nullopt;
}

const std::vector<Element>& ConcreteGroup::marked_subgroup(std::string_view name) const {
  auto it = marked_.find(name);
  if (it == marked_.end()) throw InvalidInput(name_ + " has no marked subgroup '" + std::string(name) + "'");
  return it->second;
}

const std::vector<bool>& ConcreteGroup::membership(std::string_view name) const {
  auto it = marked_flags_.find(name);
  if (it == marked_flags_.end()) throw InvalidInput(name_ + " has no marked subgroup '" + std::string(name) + "'");
  return it->second;
}

void ConcreteGroup::mark_subgroup(std::string name, std::vector<Element> elements) {
  std::vector<bool> flags(order_, false);
  for (auto e : elements) {
    if (e >= order_) throw InvalidInput("marked subgroup element out of range");
    flags[e] = true;
  }
  if (!flags[0]) throw InvalidInput("marked subgroup '" + name + "' lacks the identity");
  for (auto a : elements) {
    if (!flags[inv(a)]) throw InvalidInput("marked subgroup '" + name + "' not closed under inverses");
    for (auto b : elements)
      if (!flags[mul(a, b)]) throw InvalidInput("marked subgroup '" + name + "' not closed under products");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  marked_flags_[name] = std::move(flags);
  marked_[std::move(name)] = std::move(elements);
}

bool ConcreteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool ConcreteGroup::check_axioms() const {
  for (Element a = 0; a < order_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) return false;
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0) return false;
  }
  auto assoc = [&](Element a, Element b, Element c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
  if (order_ <= 64) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c)
          if (!assoc(a, b, c)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order_ - 1));
  for (int i = 0; i < 20'000; ++i)
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

std::vector<std::vector<int>> to_matrix(const SignedShift& s) {
  const int k = static_cast<int>(s.signs.size());
  std::vector<std::vector<int>> m(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (int j = 0; j < k; ++j) m[static_cast<std::size_t>((j + s.shift) % k)][static_cast<std::size_t>(j)] = s.signs[static_cast<std::size_t>(j)];
  return m;
}

std::optional<SignedShift> from_matrix(const std::vector<std::vector<int>>& m) {
  const int k = static_cast<int>(m.size());
  if (k == 0) return std::nullopt;
  SignedShift s;
  s.signs.assign(static_cast<std::size_t>(k), 0);
  std::optional<int> shift;
  for (int j = 0; j < k; ++j) {
    int nonzero = 0;
    for (int i = 0; i < k; ++i) {
      const int v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v == 0) continue;
      if (v != 1 && v != -1) return std::nullopt;
      ++nonzero;
      const int sh = ((i - j) % k + k) % k;
      if (shift && *shift != sh) return std::nullopt;
      shift = sh;
      s.signs[static_cast<std::size_t>(j)] = v;
    }
    if (nonzero != 1) return std::nullopt;
  }
  s.shift = *shift;
  return s;
}

namespace {

// Product of monomial matrices a * b, in encoded form.
SignedShift shift_product(const SignedShift& a, const SignedShift& b) {
  const int k = static_cast<int>(a.signs.size());
  SignedShift out;
  out.shift = (a.shift + b.shift) % k;
  out.signs.resize(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    out.signs[static_cast<std::size_t>(j)] =
        b.signs[static_cast<std::size_t>(j)] * a.signs[static_cast<std::size_t>((j + b.shift) % k)];
  return out;
}

std::uint64_t shift_key(const SignedShift& s) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < s.signs.size(); ++j)
    if (s.signs[j] < 0) mask |= std::uint64_t{1} << j;
  return (static_cast<std::uint64_t>(s.shift) << s.signs.size()) | mask;
}

std::string power_name(const std::string& base, int j) {
  if (j == 0) return "1";
  if (j == 1) return base;
  return base + "^" + std::to_string(j);
}

struct GkData {
  int k;
  std::vector<SignedShift> elements;
  std::vector<std::string> names;
  std::unordered_map<std::uint64_t, Element> index;
};

std::shared_ptr<const GkData> build_gk(int k) {
  auto data = std::make_shared<GkData>();
  data->k = k;
  const auto uk = static_cast<std::size_t>(k);

  SignedShift identity{0, std::vector<int>(uk, 1)};
  SignedShift sigma{1, std::vector<int>(uk, 1)};
  SignedShift sigma_inv{k - 1, std::vector<int>(uk, 1)};
  std::vector<SignedShift> gens{sigma};
  std::vector<std::string> gen_names{"sigma"};
  SignedShift tau{0, std::vector<int>(uk, 1)};
  tau.signs[0] = tau.signs[1] = -1;
  for (int i = 1; i <= k - 1; ++i) {
    gens.push_back(tau);
    gen_names.push_back("tau" + std::to_string(i));
    tau = shift_product(shift_product(sigma, tau), sigma_inv);
  }

  data->elements.push_back(identity);
  data->names.push_back("1");
  data->index.emplace(shift_key(identity), 0);
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      SignedShift y = shift_product(data->elements[x], gens[g]);
      const auto key = shift_key(y);
      if (data->index.contains(key)) continue;
      const auto id = static_cast<Element>(data->elements.size());
      data->index.emplace(key, id);
      data->names.push_back(x == 0 ? gen_names[g] : data->names[x] + "*" + gen_names[g]);
      data->elements.push_back(std::move(y));
      queue.push_back(id);
    }
  }
  return data;
}

}  // namespace

ConcreteGroup dihedral(int n) {
  if (n < 2) throw InvalidInput("dihedral group needs n >= 2");
  const auto order = static_cast<std::size_t>(2 * n);
  std::vector<std::string> names;
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j < n; ++j) {
      if (r == 0) {
        names.push_back(power_name("tau", j));
      } else {
        names.push_back(j == 0 ? "sigma" : "sigma*" + power_name("tau", j));
      }
    }
  // (sigma^a tau^i)(sigma^b tau^j) = sigma^(a+b) tau^((-1)^b i + j)
  auto product = [n](Element x, Element y) {
    const int a = static_cast<int>(x) / n, i = static_cast<int>(x) % n;
    const int b = static_cast<int>(y) / n, j = static_cast<int>(y) % n;
    const int r = (a + b) % 2;
    const int t = (((b ? -i : i) + j) % n + n) % n;
    return static_cast<Element>(r * n + t);
  };
  ConcreteGroup g("d" + std::to_string(2 * n), order, product, std::move(names));
  g.set_generators({static_cast<Element>(n), 1});
  std::vector<Element> rotations;
  for (int j = 0; j < n; ++j) rotations.push_back(static_cast<Element>(j));
  g.mark_subgroup("rotations", std::move(rotations));
  return g;
}

std::vector<SignedShift> gk_elements(int k) {
  if (k < 3) throw InvalidInput("G(k) needs k >= 3");
  if (k > 12) throw ComputationLimit("table too large");
  return build_gk(k)->elements;
}

ConcreteGroup gk(int k) {
  if (k < 3) throw InvalidInput("G(k) needs k >= 3");
  if (k > 12) throw ComputationLimit("table too large");
  auto data = build_gk(k);
  const std::size_t order = data->elements.size();
  auto product = [data](Element a, Element b) {
    return data->index.at(shift_key(shift_product(data->elements[a], data->elements[b])));
  };
  std::vector<Element> inverse(order);
  for (Element a = 0; a < order; ++a) {
    const auto& s = data->elements[a];
    SignedShift t{(data->k - s.shift) % data->k, std::vector<int>(s.signs.size())};
    for (int i = 0; i < data->k; ++i)
      t.signs[static_cast<std::size_t>(i)] = s.signs[static_cast<std::size_t>((i - s.shift + data->k) % data->k)];
    inverse[a] = data->index.at(shift_key(t));
  }
  ConcreteGroup g("g" + std::to_string(k), order, product, data->names, std::move(inverse));
  std::vector<Element> gens;
  for (Element e = 1; e <= static_cast<Element>(k); ++e) gens.push_back(e);
  g.set_generators(std::move(gens));
  std::vector<Element> h;
  for (Element e = 0; e < order; ++e)
    if (data->elements[e].shift == 0) h.push_back(e);
  g.mark_subgroup("H(k)", std::move(h));
  return g;
}

ConcreteGroup cyclic(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  std::vector<std::string> names;
  for (int j = 0; j < n; ++j) names.push_back(power_name("c", j));
  auto product = [n](Element a, Element b) { return static_cast<Element>((a + b) % static_cast<Element>(n)); };
  ConcreteGroup g("c" + std::to_string(n), static_cast<std::size_t>(n), product, std::move(names));
  if (n > 1) g.set_generators({1});
  return g;
}

std::uint64_t element_order(const ConcreteGroup& g, Element e) {
  std::uint64_t n = 1;
  for (Element x = e; x != 0; x = g.mul(x, e)) ++n;
  return n;
}

std::vector<std::vector<Element>> conjugacy_classes(const ConcreteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    std::vector<Element> cls;
    for (Element x = 0; x < g.order(); ++x) {
      const Element c = g.mul(g.mul(g.inv(x), a), x);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> center(const ConcreteGroup& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::uint64_t quotient_element_order(const ConcreteGroup& g, std::string_view subgroup, Element e) {
  const auto& in = g.membership(subgroup);
  std::uint64_t n = 1;
  for (Element x = e; !in[x]; x = g.mul(x, e)) ++n;
  return n;
}

QuotientMap quotient_map(const ConcreteGroup& g, std::string_view subgroup) {
  const auto& members = g.marked_subgroup(subgroup);
  const auto& in = g.membership(subgroup);
  for (Element x = 0; x < g.order(); ++x)
    for (auto n : members)
      if (!in[g.mul(g.mul(g.inv(x), n), x)])
        throw InvalidInput(std::string(subgroup) + " is not normal in " + g.name());

  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> projection(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnassigned) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto n : members) projection[g.mul(x, n)] = id;
  }
  if (reps.size() > kDenseTableLimit) throw ComputationLimit("quotient too large for a dense table");
  std::vector<std::string> names;
  for (auto r : reps) names.push_back("[" + g.element_name(r) + "]");
  // Only used while the dense table is built, so borrowing g is safe.
  auto product = [&g, reps, projection](Element a, Element b) { return projection[g.mul(reps[a], reps[b])]; };
  ConcreteGroup q(g.name() + "/" + std::string(subgroup), reps.size(), product, std::move(names));
  return {std::move(q), std::move(projection)};
}

std::vector<Element> generated_subgroup(const ConcreteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : gens) {
      const Element y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

ConcreteGroup group_from_name(std::string_view name) {
  std::string lower;
  for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.size() < 2) throw InvalidInput("bad group name '" + std::string(name) + "'");
  int value = 0;
  const char* first = lower.data() + 1;
  const char* last = lower.data() + lower.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw InvalidInput("bad group name '" + std::string(name) + "'");
  switch (lower[0]) {
    case 'd':
      if (value < 4 || value % 2 != 0) throw InvalidInput("dihedral name needs an even order >= 4: '" + lower + "'");
      return dihedral(value / 2);
    case 'g':
      return gk(value);
    case 'c':
      return cyclic(value);
    default:
      throw InvalidInput("bad group name '" + std::string(name) + "'");
  }
}

std::vector<ConcreteGroup> parse_battery(std::string_view list) {
  std::vector<ConcreteGroup> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    auto item = list.substr(start, comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) out.push_back(group_from_name(item));
    start = comma + 1;
  }
  return out;
}

}  // namespace curvegrp
