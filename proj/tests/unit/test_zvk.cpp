#include <gtest/gtest.h>

#include "curvegrp/error.hpp"
#include "curvegrp/finite_group.hpp"
#include "curvegrp/quotient.hpp"
#include "curvegrp/zvk.hpp"

using namespace curvegrp;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

std::vector<Word> canonical(std::vector<Word> ws) {
  for (auto& w : ws) w = canonical_cyclic(w);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  return ws;
}

}  // namespace

TEST(Fibered, NodalCubicRelators) {
  const auto rels = fibered_relators(nodal_cubic_input());
  ASSERT_EQ(rels.size(), 4u);
  EXPECT_EQ(rels[0], W("a^-1 m1 a") * W("m2 m1 m2^-1").inverse());
  EXPECT_EQ(rels[1], W("a^-1 m2 a") * W("m2 m1 m2 m1^-1 m2^-1").inverse());
  EXPECT_EQ(rels[2], W("b^-1 m1 b m2^-1"));
  EXPECT_EQ(rels[3], W("b^-1 m2 b") * W("m2 m1 m2^-1").inverse());

  const auto p = fibered_presentation(nodal_cubic_input());
  EXPECT_EQ(p.generators(), (std::vector<std::string>{"m1", "m2", "a", "b"}));
  EXPECT_EQ(p.class_of("m1"), "strand");
  EXPECT_EQ(p.class_of("a"), "vertical:alpha");
  EXPECT_EQ(p.class_of("b"), "vertical:beta");
}

TEST(Fibered, MeridianlessFiber) {
  MonodromyInput in;
  in.strands = 2;
  in.meridian_names = {"m1", "m2"};
  in.fibers.push_back({BraidWord::parse(2, "s1^2"), std::nullopt, "node"});
  EXPECT_EQ(fibered_relators(in).size(), 2u);
  const auto p = fibered_presentation(in);
  EXPECT_EQ(p.sorted_relators(), canonical({commutator(W("m2"), W("m1"))}));
}

TEST(Fibered, FreeGroup) {
  MonodromyInput in;
  in.strands = 3;
  in.meridian_names = default_strand_names(3, "m");
  const auto p = fibered_presentation(in);
  EXPECT_EQ(p.generators().size(), 3u);
  EXPECT_TRUE(p.relators().empty());
}

TEST(Fibered, Validation) {
  MonodromyInput in = nodal_cubic_input();
  in.fibers[1].meridian = "m1";
  EXPECT_THROW(fibered_presentation(in), InvalidInput);
  in = nodal_cubic_input();
  in.fibers[0].braid = BraidWord::parse(3, "s2");
  EXPECT_THROW(fibered_presentation(in), InvalidInput);
  in = nodal_cubic_input();
  in.meridian_names = {"m1"};
  EXPECT_THROW(fibered_presentation(in), InvalidInput);
}

TEST(Fibered, ProductCommutesWithEveryVerticalMeridian) {
  // [x_n ... x_1, a] is a consequence for any braid on the fiber of a.
  const std::vector<std::string> braids{"s1", "s1^3 s2^-1", "s2 s1 s2^-2 s3", "s3^-1 s1^2"};
  for (const auto& text : braids) {
    MonodromyInput in;
    in.strands = 4;
    in.meridian_names = default_strand_names(4, "m");
    in.fibers.push_back({BraidWord::parse(4, text), "a", "f"});
    const auto p = fibered_presentation(in);
    Word product;
    for (int j = 4; j >= 1; --j) product *= Word::generator("m" + std::to_string(j));
    EXPECT_TRUE(rewrite_conjugations(p, commutator(product, W("a")), "a").is_identity()) << text;
  }
}

TEST(Projective, Closure) {
  MonodromyInput conic;
  conic.strands = 2;
  conic.meridian_names = {"m1", "m2"};
  conic.fibers.push_back({BraidWord::parse(2, "s1"), std::nullopt, "t1"});
  conic.fibers.push_back({BraidWord::parse(2, "s1"), std::nullopt, "t2"});
  const auto ab = abelianization(projective_quotient(fibered_presentation(conic), conic));
  EXPECT_EQ(ab.rank, 0u);
  EXPECT_EQ(ab.torsion, std::vector<std::int64_t>{2});

  MonodromyInput point;
  point.strands = 1;
  point.meridian_names = {"m1"};
  const auto trivial = tietze_simplify(projective_quotient(fibered_presentation(point), point));
  EXPECT_TRUE(abelianization(trivial).rank == 0 && abelianization(trivial).torsion.empty());

  MonodromyInput free2;
  free2.strands = 2;
  free2.meridian_names = {"m1", "m2"};
  const auto z = projective_quotient(fibered_presentation(free2), free2);
  EXPECT_EQ(z.sorted_relators(), canonical({W("m2 m1")}));
  EXPECT_EQ(abelianization(z).rank, 1u);

  const auto cubic = nodal_cubic_input();
  try {
    projective_quotient(fibered_presentation(cubic), cubic);
    FAIL() << "expected an error";
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "projective closure of fibered data unsupported");
  }
}

TEST(LocalBraid, Literal) {
  EXPECT_EQ(local_braid(LocalBraidKind::Tangency, 0).to_string(), "s1^2");
  EXPECT_EQ(local_braid(LocalBraidKind::Tangency, 2).to_string(), "s1^10");
  EXPECT_EQ(local_braid(LocalBraidKind::Node).to_string(), "s1^2");
  EXPECT_EQ(local_braid(LocalBraidKind::Asymptote).to_string(), "s1^-2");
  const auto t3 = local_braid(LocalBraidKind::AsymptoteTypeII, 3);
  EXPECT_EQ(t3.strands(), 3);
  EXPECT_EQ(t3.to_string(), "s1^-1 s2^-2 s1^-1");
  EXPECT_EQ(local_braid(LocalBraidKind::AsymptoteTypeII, 4).to_string(), "s1^-1 s2^-1 s3^-2 s2^-1 s1^-1");
  EXPECT_THROW(local_braid(LocalBraidKind::Tangency, -1), InvalidInput);
  EXPECT_THROW(local_braid(LocalBraidKind::AsymptoteTypeII, 2), InvalidInput);
}

TEST(KGroup, Shapes) {
  const auto k1 = k_group(1);
  EXPECT_EQ(k1.sorted_relators(), canonical({commutator(W("x"), W("l"))}));
  EXPECT_EQ(k1.class_of("l"), "line:L1");
  EXPECT_EQ(k1.class_of("x"), "curve:D");

  EXPECT_EQ(k_group(2).sorted_relators(), canonical({commutator(W("x"), W("l^2")), commutator(W("x"), W("l^-1 x l"))}));
  EXPECT_EQ(k_group(3).relators().size(), 3u);
  EXPECT_THROW(k_group(0), InvalidInput);
  EXPECT_THROW(k_group_long(0), InvalidInput);
}

TEST(KGroup, LongFormAgrees) {
  const auto battery = parse_battery("d6,g3,c2,c3");
  for (int k = 1; k <= 4; ++k) {
    const auto long_form = k_group_long(k);
    EXPECT_EQ(long_form.generators().size(), static_cast<std::size_t>(k + 1));
    EXPECT_EQ(fingerprint(long_form, battery), fingerprint(k_group(k), battery)) << k;
    const auto reduced = tietze_simplify(long_form);
    EXPECT_EQ(reduced.generators().size(), 2u) << k;
    EXPECT_EQ(fingerprint(reduced, battery), fingerprint(k_group(k), battery)) << k;
  }
  EXPECT_EQ(k_group_long(1).sorted_relators(), canonical({W("l^-1 x1 l x1^-1")}));
}

TEST(NodalCubic, Pipeline) {
  const auto st = nodal_cubic_pipeline();
  EXPECT_EQ(st.fibered.generators().size(), 4u);
  EXPECT_EQ(st.killed.generators(), (std::vector<std::string>{"m1", "m2", "b"}));
  EXPECT_EQ(st.simplified.generators(), (std::vector<std::string>{"m", "b"}));
  EXPECT_EQ(st.simplified.sorted_relators(), canonical({commutator(W("m"), W("b^2")), commutator(W("m^2"), W("b"))}));
  EXPECT_EQ(abelianization(st.simplified).rank, 2u);
  EXPECT_TRUE(abelianization(st.simplified).torsion.empty());
}

TEST(NodalCubic, SquaresAreCentral) {
  const auto p = nodal_cubic_pipeline().simplified;
  for (const char* sq : {"m^2", "b^2"})
    for (const char* g : {"m", "b"}) {
      const Word c = canonical_cyclic(commutator(W(sq), W(g)));
      const bool relator = std::find(p.relators().begin(), p.relators().end(), c) != p.relators().end();
      EXPECT_TRUE(c.is_identity() || relator) << sq << " " << g;
    }
}

TEST(NodalCubic, QuotientBySquaresMapsOntoDihedralGroups) {
  const auto p = nodal_cubic_pipeline().simplified;
  const auto q = add_relator(add_relator(p, W("m^2")), W("b^2"));
  for (int n = 3; n <= 6; ++n) EXPECT_GT(count_homomorphisms(q, dihedral(n)).epis, 0u) << n;
}
