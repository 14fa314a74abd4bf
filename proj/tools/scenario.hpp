#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvegrp/presentation.hpp"
#include "curvegrp/quotient.hpp"
#include "curvegrp/zvk.hpp"

namespace curvegrp::cli {

// Recorded change of basis `name = word`, applied between two Tietze passes.
struct BasisSpec {
  std::string name;
  Word word;
};

// One consequence / refutation check of the bifamily analysis.
struct RelationCheck {
  std::string heading;
  std::vector<Word> base;
  Word candidate;
};

struct Scenario {
  std::string name;
  Presentation presentation;
  std::optional<MonodromyInput> monodromy;
  std::optional<BasisSpec> basis;
  std::vector<Word> references;  // relators certified by rewrite_conjugations
  std::vector<std::pair<std::string, std::string>> notes;
  std::vector<RelationCheck> checks;
};

struct CatalogEntry {
  std::string syntax;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

// `catalog:<name>[:p...]`, or a path to a scenario or presentation file.
Scenario load_scenario(const std::string& ref);

Scenario catalog_scenario(const std::string& spec);

// Scenario file text: [monodromy] / [fiber] / [basis] sections, or the
// presentation text format.
Scenario parse_scenario_text(std::string_view text, std::string name);

// Lines `<gen> order=N in=S notin=S quotient=S:N`; '#' starts a comment.
std::vector<MeridianConstraint> parse_constraints(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace curvegrp::cli
