#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "curvegrp/error.hpp"
#include "curvegrp/zvk.hpp"
#include "scenario.hpp"

using namespace curvegrp;
using namespace curvegrp::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "curvegrp");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CURVEGRP_TEST_DATA) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(data("golden/" + name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, NodalCubicSimplifiedGolden) {
  const auto r = invoke({"present", "catalog:nodal-cubic", "--kill", "a", "--simplify"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("nodal_cubic_simplified.txt"));
  EXPECT_NE(r.out.find("relator: b^2 m b^-2 m^-1\n"), std::string::npos);
}

TEST(Cli, NodalCubicCertificates) {
  const auto r = invoke({"present", "catalog:nodal-cubic"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("nodal_cubic_fibered.txt"));
  std::size_t certified = 0;
  for (std::size_t pos = 0; (pos = r.out.find(": identity via ", pos)) != std::string::npos; ++pos) ++certified;
  EXPECT_EQ(certified, 4u);
}

TEST(Cli, ScenarioFileMatchesCatalog) {
  const auto from_file = invoke({"present", data("nodal_cubic.scn"), "--kill", "a", "--simplify", "--machine"});
  const auto from_catalog = invoke({"present", "catalog:nodal-cubic", "--kill", "a", "--simplify", "--machine"});
  ASSERT_EQ(from_file.code, kOk) << from_file.err;
  // Only the name line differs.
  auto strip_name = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
  EXPECT_EQ(strip_name(from_file.out), strip_name(from_catalog.out));
}

TEST(Cli, ConicClosure) {
  const auto s = load_scenario(data("conic.scn"));
  ASSERT_TRUE(s.monodromy);
  EXPECT_EQ(s.monodromy->meridian_names, (std::vector<std::string>{"m1", "m2"}));
  const auto ab = abelianization(projective_quotient(s.presentation, *s.monodromy));
  EXPECT_EQ(ab.torsion, std::vector<std::int64_t>{2});
}

TEST(Cli, PresentationFile) {
  const auto r = invoke({"cover-test", data("k2.pres"), "--family", "dihedral", "--param", "5"});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("exists: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("l -> sigma\nx -> tau\nepi: yes\n"), std::string::npos);
}

TEST(Cli, Abelianize) {
  const auto r = invoke({"present", "catalog:k-group:4", "--abelianize", "--machine"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("rank: 2\ntorsion: none\n"), std::string::npos);
  EXPECT_EQ(r.out.find("# "), std::string::npos);
}

TEST(Cli, Distinguish) {
  const auto r = invoke({"distinguish", "--left", "catalog:k-group:3", "--right", "catalog:k-group:1", "--battery", "g3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("distinguish_k3_k1.txt"));
  EXPECT_NE(r.out.find("distinguishedBy: g3\n"), std::string::npos);

  const auto same = invoke({"distinguish", "--left", "catalog:k-group:2", "--right", "catalog:type-I:3:0:0",
                            "--battery", "d6,g3"});
  EXPECT_EQ(same.code, kInconclusive);
  EXPECT_NE(same.out.find("distinguishedBy: inconclusive\n"), std::string::npos);
}

TEST(Cli, Quotients) {
  const auto r = invoke({"quotients", "catalog:type-I:3:0:0", "--target", "d6", "--epi-only", "--constraints",
                         data("dihedral_meridians.cons")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("constraints: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("# epi 1\nl -> sigma\nx -> tau\nepi: yes\n"), std::string::npos);

  const auto all = invoke({"quotients", "catalog:k-group:1", "--target", "c2"});
  EXPECT_NE(all.out.find("homs: 4\nepis: 3\n"), std::string::npos);
}

TEST(Cli, CoverTests) {
  const auto g = invoke({"cover-test", "catalog:type-II:3", "--family", "gk", "--param", "3"});
  EXPECT_EQ(g.code, kOk);
  EXPECT_NE(g.out.find("l -> sigma\nx -> tau1\n"), std::string::npos);
  const auto z = invoke({"cover-test", "catalog:smooth-family", "--family", "dihedral", "--param", "3"});
  EXPECT_NE(z.out.find("exists: no\n"), std::string::npos);
  EXPECT_EQ(invoke({"cover-test", "catalog:nodal-cubic", "--family", "gk", "--param", "3"}).code, kUsage);
}

TEST(Cli, Bifamily) {
  const auto r = invoke({"present", "catalog:bifamily"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("bifamily.txt"));
  EXPECT_NE(r.out.find("consequence: yes\n"), std::string::npos);
  EXPECT_NE(r.out.find("refutedBy: d6\nm -> sigma\nn -> sigma*tau\n"), std::string::npos);
}

TEST(Cli, LatticeAndCatalog) {
  EXPECT_EQ(invoke({"lattice", "report", "--d", "3", "--k", "2"}).out, golden("lattice_3_2.txt"));
  EXPECT_EQ(invoke({"lattice", "report", "--d", "3", "--k", "5"}).code, kUsage);
  EXPECT_EQ(invoke({"catalog", "list"}).out, golden("catalog_list.txt"));
}

TEST(Cli, TypeI) {
  const auto r = invoke({"present", "catalog:type-I:3:0:0"});
  EXPECT_NE(r.out.find("nodes: 1\n"), std::string::npos);
  const auto bad = invoke({"present", "catalog:type-I:3:1:1"});
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("invalid type I data"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"present"}).code, kUsage);
  EXPECT_EQ(invoke({"present", "catalog:nope"}).code, kUsage);
  EXPECT_EQ(invoke({"present", "catalog:k-group"}).code, kUsage);
  EXPECT_EQ(invoke({"present", "catalog:k-group:x"}).code, kUsage);
  EXPECT_EQ(invoke({"present", "/nonexistent/file"}).code, kUsage);
  EXPECT_EQ(invoke({"present", "catalog:nodal-cubic", "--kill", "q"}).code, kUsage);
  EXPECT_EQ(invoke({"quotients", "catalog:k-group:2", "--target", "z9"}).code, kUsage);
  EXPECT_EQ(invoke({"cover-test", "catalog:k-group:2", "--family", "cyclic", "--param", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Cli, ComputationErrors) {
  EXPECT_EQ(invoke({"quotients", "catalog:k-group-long:6", "--target", "c2"}).code, kComputation);
  EXPECT_EQ(invoke({"quotients", "catalog:k-group:2", "--target", "g13"}).code, kComputation);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"present", "catalog:nodal-cubic", "--kill", "a", "--simplify", "--abelianize"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
  const std::vector<std::string> q{"quotients", "catalog:k-group:3", "--target", "g3"};
  EXPECT_EQ(invoke(q).out, invoke(q).out);
}

TEST(Catalog, EntriesRoundTripThroughText) {
  for (const std::string ref : {"nodal-cubic", "smooth-family", "type-I:5:1:0", "type-II:4", "k-group:3",
                                "k-group-long:3", "bifamily"}) {
    const auto s = catalog_scenario(ref);
    const auto back = Presentation::parse(s.presentation.to_text());
    EXPECT_EQ(back, s.presentation) << ref;
    EXPECT_EQ(back.sorted_relators(), s.presentation.sorted_relators()) << ref;
  }
}

TEST(Catalog, ScenarioParsingErrors) {
  EXPECT_THROW(parse_scenario_text("[monodromy]\nstrands = 2\n[fiber]\nlabel = x\n", "t"), InvalidInput);
  EXPECT_THROW(parse_scenario_text("[fiber]\nbraid = s1\n", "t"), InvalidInput);
  EXPECT_THROW(parse_scenario_text("[monodromy]\nstrands = 2\ncolour = red\n", "t"), InvalidInput);
  EXPECT_THROW(parse_scenario_text("[weird]\n", "t"), InvalidInput);
  EXPECT_THROW(parse_scenario_text("[monodromy]\nstrands = 2\n[fiber]\nbraid = s2\n", "t"), InvalidInput);
}

TEST(Catalog, Constraints) {
  const auto c = parse_constraints("l order=2 notin=rotations # comment\n\nx quotient=H(3):3 in=H(3)\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].order, 2u);
  EXPECT_EQ(c[0].not_in_subgroup, "rotations");
  EXPECT_EQ(c[1].quotient_order->first, "H(3)");
  EXPECT_EQ(c[1].quotient_order->second, 3u);
  EXPECT_THROW(parse_constraints("l colour=red\n"), InvalidInput);
  EXPECT_THROW(parse_constraints("l in=rotations notin=rotations\n"), InvalidInput);
}
