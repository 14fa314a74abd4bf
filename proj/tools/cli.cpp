#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "curvegrp/error.hpp"
#include "curvegrp/finite_group.hpp"
#include "curvegrp/lattice.hpp"
#include "curvegrp/presentation.hpp"
#include "curvegrp/quotient.hpp"
#include "scenario.hpp"

namespace curvegrp::cli {

void Report::block(const std::string& text) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) line(l);
}

std::string Report::render(bool machine) const {
  std::ostringstream out;
  for (const auto& [heading, lines] : sections_) {
    if (!machine) out << "# " << heading << '\n';
    for (const auto& l : lines) out << l << '\n';
  }
  return out.str();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string format_torsion(const std::vector<std::int64_t>& t) {
  if (t.empty()) return "none";
  std::vector<std::string> parts;
  for (auto d : t) parts.push_back(std::to_string(d));
  return join(parts, " ");
}

std::string format_class(const DivisorClass& c) {
  auto term = [](std::int64_t coeff, const char* sym) {
    if (coeff == 1) return std::string(sym);
    return std::to_string(coeff) + sym;
  };
  std::string s;
  if (c.a != 0) s = term(c.a, "Delta");
  if (c.b != 0) {
    if (!s.empty()) s += c.b < 0 ? " - " : " + ";
    s += term(s.empty() ? c.b : (c.b < 0 ? -c.b : c.b), "F");
  }
  if (s.empty()) s = "0";
  return s + " (Sigma_" + std::to_string(c.surface_degree) + ")";
}

void add_witness(Report& r, const Homomorphism& h, const ConcreteGroup& g) {
  r.block(format_witness(h, g));
  r.kv("epi", yes_no(is_surjective(g, h.images)));
}

std::optional<std::string> outer_generator(const Scenario& s, const Word& w) {
  if (!s.monodromy) return std::nullopt;
  for (const auto& f : s.monodromy->fibers)
    if (f.meridian && w.contains(*f.meridian)) return f.meridian;
  return std::nullopt;
}

struct PresentOptions {
  std::string scenario;
  std::vector<std::string> kills;
  bool simplify = false;
  bool abelianize = false;
};

Report cmd_present(const PresentOptions& o) {
  const Scenario s = load_scenario(o.scenario);
  Report r;
  r.section("scenario");
  r.kv("name", s.name);
  for (const auto& [k, v] : s.notes) r.kv(k, v);

  Presentation p = s.presentation;
  for (const auto& g : o.kills) p = kill_generator(p, g);
  if (!o.kills.empty() || o.simplify) {
    r.section("transformations");
    for (const auto& g : o.kills) r.kv("kill", g);
  }
  if (o.simplify) {
    p = tietze_simplify(p);
    bool applied = false;
    if (s.basis && !p.has_generator(s.basis->name) && uses_only_generators(p, s.basis->word)) {
      p = tietze_simplify(change_basis(p, s.basis->name, s.basis->word).presentation);
      applied = true;
    }
    r.kv("simplify", "tietze");
    if (applied) r.kv("basis", s.basis->name + " = " + s.basis->word.to_string());
  }

  r.section("presentation");
  r.block(p.to_text());

  if (o.kills.empty() && !o.simplify && !s.references.empty()) {
    r.section("certificates");
    for (const auto& w : s.references) {
      const auto outer = outer_generator(s, w);
      std::string verdict = "not certified";
      if (outer) {
        try {
          const Word rest = rewrite_conjugations(p, w, *outer);
          verdict = rest.is_identity() ? "identity via " + *outer : "residue " + rest.to_string();
        } catch (const InvalidInput& e) {
          verdict = e.what();
        }
      }
      r.kv(w.to_string(), verdict);
    }
  }

  if (o.abelianize) {
    const auto ab = abelianization(p);
    r.section("abelianization");
    r.kv("rank", std::to_string(ab.rank));
    r.kv("torsion", format_torsion(ab.torsion));
  }

  const auto limits = SearchLimits::from_environment();
  const std::vector<ConcreteGroup> battery{dihedral(3), cyclic(2)};
  for (const auto& c : s.checks) {
    r.section(c.heading);
    std::vector<std::string> base;
    for (const auto& w : c.base) base.push_back(w.to_string());
    r.kv("base", join(base, ", "));
    r.kv("candidate", c.candidate.to_string());
    std::vector<std::string> gens;
    for (const auto& w : c.base)
      for (const auto& syl : w.syllables()) gens.push_back(syl.gen);
    for (const auto& syl : c.candidate.syllables()) gens.push_back(syl.gen);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (consequence_by_substitution(Presentation(gens, c.base), c.candidate)) {
      r.kv("consequence", "yes");
      continue;
    }
    const auto ref = refute_consequence(c.base, c.candidate, battery, limits);
    if (!ref.refuted_by) {
      r.kv("consequence", "unknown");
      continue;
    }
    r.kv("refutedBy", *ref.refuted_by);
    for (const auto& g : battery)
      if (g.name() == *ref.refuted_by) add_witness(r, *ref.witness, g);
  }
  return r;
}

struct QuotientOptions {
  std::string scenario;
  std::string target;
  bool epi_only = false;
  std::string constraints_file;
};

Report cmd_quotients(const QuotientOptions& o) {
  const Scenario s = load_scenario(o.scenario);
  const ConcreteGroup g = group_from_name(o.target);
  std::vector<MeridianConstraint> constraints;
  if (!o.constraints_file.empty()) constraints = parse_constraints(read_file(o.constraints_file));
  const auto limits = SearchLimits::from_environment();

  std::vector<std::pair<std::vector<Element>, bool>> found;
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  for_each_homomorphism(
      s.presentation, g, constraints,
      [&](std::span<const Element> images) {
        const bool epi = is_surjective(g, images);
        ++homs;
        epis += epi;
        if (epi || !o.epi_only) found.push_back({{images.begin(), images.end()}, epi});
        return true;
      },
      limits);

  Report r;
  r.section("quotients");
  r.kv("scenario", s.name);
  r.kv("target", g.name());
  r.kv("order", std::to_string(g.order()));
  r.kv("constraints", std::to_string(constraints.size()));
  r.kv("homs", std::to_string(homs));
  r.kv("epis", std::to_string(epis));
  std::size_t i = 0;
  for (const auto& [images, epi] : found) {
    r.section((o.epi_only ? "epi " : "hom ") + std::to_string(++i));
    for (std::size_t j = 0; j < images.size(); ++j)
      r.line(s.presentation.generators()[j] + " -> " + g.element_name(images[j]));
    r.kv("epi", yes_no(epi));
  }
  return r;
}

Report cmd_cover_test(const std::string& ref, const std::string& family, int param) {
  const Scenario s = load_scenario(ref);
  const Presentation& p = s.presentation;
  std::vector<std::string> lines;
  std::vector<std::string> curves;
  for (const auto& g : p.generators()) {
    const auto cls = p.class_of(g);
    if (!cls) continue;
    if (cls->rfind("line", 0) == 0) lines.push_back(g);
    if (cls->rfind("curve", 0) == 0) curves.push_back(g);
  }
  if (curves.size() != 1) throw InvalidInput("missing class labels: need exactly one generator of class curve:*");

  const auto limits = SearchLimits::from_environment();
  const bool dihedral_family = family == "dihedral";
  const CoverTest t = dihedral_family ? dihedral_cover_test(p, lines, curves[0], param, limits)
                                      : gk_cover_test(p, lines, curves[0], param, limits);
  Report r;
  r.section("cover-test");
  r.kv("scenario", s.name);
  r.kv("family", family);
  r.kv("param", std::to_string(param));
  r.kv("lines", join(lines, " "));
  r.kv("curve", curves[0]);
  r.kv("exists", yes_no(t.exists));
  if (t.witness) {
    r.section("witness");
    add_witness(r, *t.witness, dihedral_family ? dihedral(param) : gk(param));
  }
  return r;
}

Report cmd_distinguish(const std::string& left, const std::string& right, const std::string& battery_text,
                       bool& inconclusive) {
  const Scenario l = load_scenario(left);
  const Scenario rr = load_scenario(right);
  const auto battery = parse_battery(battery_text);
  const auto d = distinguish(l.presentation, rr.presentation, battery, SearchLimits::from_environment());
  Report r;
  r.section("distinguish");
  r.kv("left", l.name);
  r.kv("right", rr.name);
  r.section("fingerprints");
  for (std::size_t i = 0; i < battery.size(); ++i) {
    r.kv(battery[i].name(), "left " + std::to_string(d.left[i].homs) + "/" + std::to_string(d.left[i].epis) +
                                " right " + std::to_string(d.right[i].homs) + "/" +
                                std::to_string(d.right[i].epis));
  }
  r.section("verdict");
  r.kv("distinguishedBy", d.distinguished_by.value_or("inconclusive"));
  inconclusive = !d.distinguished_by;
  return r;
}

Report cmd_lattice(int d, int k) {
  const auto rep = preimage_report(d, k);
  Report r;
  r.section("lattice");
  r.kv("d", std::to_string(d));
  r.kv("k", std::to_string(k));
  r.kv("componentClass", format_class(rep.component));
  r.kv("compDotF", std::to_string(rep.comp_dot_fiber));
  r.kv("compDotDelta", std::to_string(rep.comp_dot_section));
  r.kv("totalDotF", std::to_string(rep.total_dot_fiber));
  r.kv("totalDotDelta", std::to_string(rep.total_dot_section));
  r.kv("consistent", yes_no(rep.consistent));
  return r;
}

Report cmd_catalog_list() {
  Report r;
  r.section("catalog");
  for (const auto& e : catalog_entries()) r.kv(e.syntax, e.description);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental groups of plane-curve complements and their finite quotients", "curvegrp"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Omit section headings");

  PresentOptions present;
  auto* present_cmd = app.add_subcommand("present", "Print a scenario's presentation");
  present_cmd->add_option("scenario", present.scenario, "catalog:<name>[:p...] or a file")->required();
  present_cmd->add_option("--kill", present.kills, "Kill a generator (repeatable)");
  present_cmd->add_flag("--simplify", present.simplify, "Apply Tietze moves and the recorded basis change");
  present_cmd->add_flag("--abelianize", present.abelianize, "Print abelian invariants");

  QuotientOptions quot;
  auto* quot_cmd = app.add_subcommand("quotients", "Enumerate homomorphisms into a finite group");
  quot_cmd->add_option("scenario", quot.scenario)->required();
  quot_cmd->add_option("--target", quot.target, "d<2n>, g<k> or c<n>")->required();
  quot_cmd->add_flag("--epi-only", quot.epi_only);
  quot_cmd->add_option("--constraints", quot.constraints_file, "Meridian constraints file");

  std::string cover_ref;
  std::string family;
  int param = 0;
  auto* cover_cmd = app.add_subcommand("cover-test", "Galois cover existence at the group level");
  cover_cmd->add_option("scenario", cover_ref)->required();
  cover_cmd->add_option("--family", family)->required()->check(CLI::IsMember({"dihedral", "gk"}));
  cover_cmd->add_option("--param", param, "n for dihedral, k for gk")->required();

  std::string left;
  std::string right;
  std::string battery;
  auto* dist_cmd = app.add_subcommand("distinguish", "Compare fingerprints over a battery");
  dist_cmd->add_option("--left", left)->required();
  dist_cmd->add_option("--right", right)->required();
  dist_cmd->add_option("--battery", battery, "Comma-separated group names")->required();

  int d = 0;
  int k = 0;
  auto* lattice_cmd = app.add_subcommand("lattice", "Picard lattice computations");
  lattice_cmd->require_subcommand(1);
  auto* lattice_report = lattice_cmd->add_subcommand("report", "Preimage intersection report");
  lattice_report->add_option("--d", d)->required();
  lattice_report->add_option("--k", k)->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in scenarios");
  catalog_cmd->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "List catalog entries");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Report r;
    int code = kOk;
    if (*present_cmd) {
      r = cmd_present(present);
    } else if (*quot_cmd) {
      r = cmd_quotients(quot);
    } else if (*cover_cmd) {
      r = cmd_cover_test(cover_ref, family, param);
    } else if (*dist_cmd) {
      bool inconclusive = false;
      r = cmd_distinguish(left, right, battery, inconclusive);
      if (inconclusive) code = kInconclusive;
    } else if (*lattice_report) {
      r = cmd_lattice(d, k);
    } else if (*catalog_list) {
      r = cmd_catalog_list();
    }
    out << r.render(machine);
    return code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ComputationLimit& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
}

}  // namespace curvegrp::cli
