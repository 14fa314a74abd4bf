#include "scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "curvegrp/error.hpp"
#include "curvegrp/lattice.hpp"

namespace curvegrp::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidInput("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

void expect_params(const std::vector<std::string>& parts, std::size_t n, std::string_view syntax) {
  if (parts.size() != n + 1) throw InvalidInput("catalog entry expects " + std::string(syntax));
}

Scenario nodal_cubic() {
  Scenario s;
  s.name = "nodal-cubic";
  s.monodromy = nodal_cubic_input();
  s.presentation = fibered_presentation(*s.monodromy);
  s.basis = BasisSpec{"m", Word::parse("m1 b")};
  s.references = nodal_cubic_reference_relators();
  return s;
}

Scenario bifamily() {
  const Word m = Word::generator("m");
  const Word n = Word::generator("n");
  const Word node = m * n.inverse();
  const Word cusp = m * n * m * (n * m * n).inverse();

  Scenario s;
  s.name = "bifamily";
  s.presentation = Presentation({"m", "n"}, {node});
  s.notes = {{"generic", node.to_string()},
             {"nodal", node.to_string() + ", " + commutator(m, n).to_string()},
             {"cusp", cusp.to_string()}};
  s.checks.push_back({"node-vs-double-relation", {node}, commutator(m, n)});
  s.checks.push_back({"cusp-vs-node", {cusp}, node});
  return s;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"nodal-cubic", "nodal cubic with vertical lines L0, L2 (fibered monodromy)"},
      {"smooth-family", "Z^2 with classes l line, x curve"},
      {"type-I:<d>:<r1>:<r2>", "rational nodal type I curve, group K_2"},
      {"type-II:<k>", "rational nodal type II curve, group K_k (k >= 3)"},
      {"k-group:<k>", "K_k on generators l, x"},
      {"k-group-long:<k>", "K_k on generators l, x1..xk"},
      {"bifamily", "node, double and cusp relation sets with consequence analysis"},
  };
  return entries;
}

Scenario catalog_scenario(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& name = parts[0];
  Scenario s;
  s.name = spec;
  if (name == "nodal-cubic") {
    expect_params(parts, 0, "nodal-cubic");
    return nodal_cubic();
  }
  if (name == "bifamily") {
    expect_params(parts, 0, "bifamily");
    return bifamily();
  }
  if (name == "smooth-family") {
    expect_params(parts, 0, "smooth-family");
    s.presentation = smooth_family_group();
    return s;
  }
  if (name == "type-I") {
    expect_params(parts, 3, "type-I:<d>:<r1>:<r2>");
    const int d = parse_int(parts[1], "degree");
    const int r1 = parse_int(parts[2], "r1");
    const int r2 = parse_int(parts[3], "r2");
    const int nodes = node_count(d, r1, r2);
    s.presentation = k_group(2);
    s.notes = {{"degree", std::to_string(d)}, {"nodes", std::to_string(nodes)}};
    return s;
  }
  if (name == "type-II") {
    expect_params(parts, 1, "type-II:<k>");
    const int k = parse_int(parts[1], "k");
    if (k < 3) throw InvalidInput("type-II needs k >= 3");
    s.presentation = k_group(k);
    return s;
  }
  if (name == "k-group" || name == "k-group-long") {
    expect_params(parts, 1, name + ":<k>");
    const int k = parse_int(parts[1], "k");
    s.presentation = name == "k-group" ? k_group(k) : k_group_long(k);
    return s;
  }
  throw InvalidInput("unknown catalog entry '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario load_scenario(const std::string& ref) {
  constexpr std::string_view prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) return catalog_scenario(ref.substr(prefix.size()));
  return parse_scenario_text(read_file(ref), ref);
}

Scenario parse_scenario_text(std::string_view text, std::string name) {
  std::vector<std::string> lines;
  for (auto& l : split(text, '\n')) {
    auto t = trim(l);
    if (!t.empty() && t[0] != '#') lines.push_back(std::move(t));
  }
  Scenario s;
  s.name = std::move(name);
  if (lines.empty() || lines[0][0] != '[') {
    s.presentation = Presentation::parse(text);
    return s;
  }

  MonodromyInput in;
  bool have_monodromy = false;
  std::string section;
  std::vector<std::optional<std::string>> fiber_braids;
  std::vector<Fiber> fibers;

  for (const auto& line : lines) {
    if (line.front() == '[') {
      if (line.back() != ']') throw InvalidInput("bad section header '" + line + "'");
      section = line.substr(1, line.size() - 2);
      if (section == "monodromy") {
        if (have_monodromy) throw InvalidInput("duplicate [monodromy] section");
        have_monodromy = true;
      } else if (section == "fiber") {
        fibers.push_back({BraidWord(1), std::nullopt, ""});
        fiber_braids.emplace_back();
      } else if (section != "basis") {
        throw InvalidInput("unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected key = value, got '" + line + "'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    if (section == "monodromy") {
      if (key == "strands") {
        in.strands = parse_int(value, "strand count");
      } else if (key == "meridians") {
        std::istringstream ss(value);
        in.meridian_names.clear();
        for (std::string tok; ss >> tok;) in.meridian_names.push_back(tok);
      } else {
        throw InvalidInput("unknown [monodromy] key '" + key + "'");
      }
    } else if (section == "fiber") {
      auto& f = fibers.back();
      if (key == "label") f.label = value;
      else if (key == "meridian") f.meridian = value;
      else if (key == "braid") fiber_braids.back() = value;
      else throw InvalidInput("unknown [fiber] key '" + key + "'");
    } else if (section == "basis") {
      if (!is_valid_generator_name(key)) throw InvalidInput("invalid basis generator '" + key + "'");
      s.basis = BasisSpec{key, Word::parse(value)};
    } else {
      throw InvalidInput("key outside any section: '" + line + "'");
    }
  }
  if (!have_monodromy) throw InvalidInput("scenario file lacks a [monodromy] section");
  if (in.meridian_names.empty()) in.meridian_names = default_strand_names(in.strands, "m");
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (!fiber_braids[i]) throw InvalidInput("fiber " + std::to_string(i + 1) + " has no braid");
    fibers[i].braid = BraidWord::parse(in.strands, *fiber_braids[i]);
    if (fibers[i].label.empty()) fibers[i].label = std::to_string(i + 1);
  }
  in.fibers = std::move(fibers);
  s.presentation = fibered_presentation(in);
  s.monodromy = std::move(in);
  return s;
}

std::vector<MeridianConstraint> parse_constraints(std::string_view text) {
  std::vector<MeridianConstraint> out;
  for (auto& raw : split(text, '\n')) {
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ss(line);
    MeridianConstraint c;
    ss >> c.generator;
    for (std::string tok; ss >> tok;) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw InvalidInput("bad constraint '" + tok + "'");
      const std::string key = tok.substr(0, eq);
      const std::string value = tok.substr(eq + 1);
      if (key == "order") {
        c.order = static_cast<std::uint64_t>(parse_int(value, "order"));
      } else if (key == "in") {
        c.in_subgroup = value;
      } else if (key == "notin") {
        c.not_in_subgroup = value;
      } else if (key == "quotient") {
        const auto colon = value.rfind(':');
        if (colon == std::string::npos) throw InvalidInput("quotient constraint needs S:N");
        c.quotient_order = std::pair<std::string, std::uint64_t>{
            value.substr(0, colon), static_cast<std::uint64_t>(parse_int(value.substr(colon + 1), "order"))};
      } else {
        throw InvalidInput("unknown constraint key '" + key + "'");
      }
    }
    if (c.in_subgroup && c.not_in_subgroup && *c.in_subgroup == *c.not_in_subgroup)
      throw InvalidInput("constraint on '" + c.generator + "' is both in and not in " + *c.in_subgroup);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace curvegrp::cli
