#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hyperlift/error.hpp"
#include "hyperlift/families.hpp"

using namespace hyperlift;

namespace {

CharZeroPoly P(std::vector<std::int64_t> c) { return CharZeroPoly::from_ints(c); }

FamilyPolys polys(FamilyCase c, Variant v, std::int64_t lambda = 2) {
  return build_family_polys(c, v, {QuadInt(lambda)});
}

int letter_degree(const FamilyPolys& f, char ch) {
  switch (ch) {
    case 'R': return f.R.degree();
    case 'S': return f.S.degree();
    case 'T': return f.T.degree();
    default: return f.L.degree();
  }
}

}  // namespace

TEST(Families, ParseAndPrint) {
  EXPECT_EQ(parse_family_case("A5"), FamilyCase::A5);
  EXPECT_EQ(parse_family_case("S4"), FamilyCase::S4);
  EXPECT_EQ(parse_variant("classical"), Variant::Classical);
  EXPECT_EQ(to_string(FamilyCase::A4), "A4");
  EXPECT_EQ(to_string(Variant::Stated), "stated");
  EXPECT_THROW(parse_family_case("A6"), InvalidInput);
  EXPECT_THROW(parse_variant("fancy"), InvalidInput);
}

TEST(Families, Degrees) {
  for (Variant v : {Variant::Stated, Variant::Classical}) {
    const auto a5 = polys(FamilyCase::A5, v);
    EXPECT_EQ(a5.R.degree(), 30);
    EXPECT_EQ(a5.S.degree(), 20);
    EXPECT_EQ(a5.T.degree(), 10);
    EXPECT_EQ(a5.G.at(0).degree(), 60);
    const auto s4 = polys(FamilyCase::S4, v);
    EXPECT_EQ(s4.R.degree(), 12);
    EXPECT_EQ(s4.G.at(0).degree(), 24);
  }
  FamilySpec spec;
  spec.fcase = FamilyCase::A4;
  spec.word = "TRL";
  EXPECT_EQ(build_F(spec).degree(), 21);
}

TEST(Families, LambdaValidation) {
  EXPECT_THROW(build_family_polys(FamilyCase::A5, Variant::Stated, {QuadInt(1)}), InvalidInput);
  EXPECT_THROW(build_family_polys(FamilyCase::A5, Variant::Classical, {}), InvalidInput);
  EXPECT_NO_THROW(build_family_polys(FamilyCase::A4, Variant::Stated, {QuadInt(1)}));
  const auto f = build_family_polys(FamilyCase::A4, Variant::Stated, {QuadInt(2), QuadInt(5)});
  EXPECT_EQ(f.G.size(), 2u);
  EXPECT_EQ(f.L, f.G[0] * f.G[1]);
}

// Invariant-theory identities, computed from the classical forms alone.
TEST(Families, IcosahedralIdentities) {
  const auto c = polys(FamilyCase::A5, Variant::Classical);
  const CharZeroPoly f = P({0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1});  // x^11 + 11x^6 - x
  EXPECT_EQ(f, CharZeroPoly::x() * c.T);
  EXPECT_EQ(c.R * c.R, c.S.pow(3) + CharZeroPoly::constant(1728) * f.pow(5));
  for (std::int64_t l : {2, 3, -7, 100}) {
    const auto g = polys(FamilyCase::A5, Variant::Classical, l).G[0];
    EXPECT_EQ(g, CharZeroPoly::constant(l) * c.S.pow(3) - c.R * c.R) << l;
    EXPECT_EQ(g, polys(FamilyCase::A5, Variant::Stated, l).G[0]);
  }
}

TEST(Families, OctahedralIdentities) {
  const auto s4 = polys(FamilyCase::S4, Variant::Classical);
  const CharZeroPoly x4 = CharZeroPoly::monomial(QuadInt(1), 4);
  EXPECT_EQ(s4.S.pow(3) - s4.R * s4.R, CharZeroPoly::constant(108) * x4 * s4.T.pow(4));
  for (std::int64_t l : {2, 5, 42}) {
    const auto g = polys(FamilyCase::S4, Variant::Classical, l).G[0];
    EXPECT_EQ(g, s4.S.pow(3) + CharZeroPoly::constant(l - 42) * x4 * s4.T.pow(4)) << l;
  }
  // The A4 pencil: G = R_S4 - lambda (x^5 - x)^2.
  const auto a4 = polys(FamilyCase::A4, Variant::Classical, 3);
  EXPECT_EQ(a4.G[0], s4.R - CharZeroPoly::constant(3) * a4.T * a4.T);
  // sqrt(-3) appears only in the A4 R.
  EXPECT_EQ(a4.R.radicand(), -3);
  std::vector<QuadInt> conj;
  for (const auto& c : a4.R.coeffs()) conj.push_back(c.conjugate());
  EXPECT_EQ(a4.R * CharZeroPoly(conj), a4.S);
}

TEST(Families, StatedS4HasStrayTerms) {
  const auto g = polys(FamilyCase::S4, Variant::Stated).G[0];
  EXPECT_FALSE(g.coeff(6).is_zero());
  const auto c = polys(FamilyCase::S4, Variant::Classical).G[0];
  for (int e = 0; e <= c.degree(); ++e)
    if (e % 4) EXPECT_TRUE(c.coeff(e).is_zero()) << e;
}

TEST(Families, CandidateWords) {
  EXPECT_EQ(candidate_words(FamilyCase::A4), (std::vector<std::string>{"L", "RL", "SL", "TL", "TRL", "TSL"}));
  EXPECT_EQ(candidate_words(FamilyCase::A5).size(), 8u);
  EXPECT_EQ(candidate_words(FamilyCase::S4).front(), "L");
}

// deg F is the sum of the letter degrees for every candidate word.
TEST(Families, DegreeAdditivity) {
  for (FamilyCase c : {FamilyCase::A5, FamilyCase::A4, FamilyCase::S4}) {
    for (Variant v : {Variant::Stated, Variant::Classical}) {
      const auto f = polys(c, v);
      for (const auto& w : candidate_words(c)) {
        FamilySpec spec{c, v, {QuadInt(2)}, w};
        int expect = 0;
        for (char ch : w) expect += letter_degree(f, ch);
        try {
          EXPECT_EQ(build_F(spec).degree(), expect) << to_string(c) << " " << w;
        } catch (const InvalidInput&) {
          // Not squarefree for this lambda; acceptable but must be explicit.
        }
      }
    }
  }
}

TEST(Families, BadWords) {
  FamilySpec spec;
  spec.word = "XL";
  EXPECT_THROW(build_F(spec), InvalidInput);
  spec.word = "LL";
  EXPECT_THROW(build_F(spec), InvalidInput);
  spec.word = "";
  EXPECT_THROW(build_F(spec), InvalidInput);
}

TEST(Reduction, HandExamples) {
  // x^6 - 1 = (x-1)^3 (x+1)^3 mod 3: two odd points, genus 0.
  auto r = reduction_report(P({-1, 0, 0, 0, 0, 0, 1}), 3);
  EXPECT_EQ(r.genus, 2);
  EXPECT_EQ(r.branch_points, 6);
  EXPECT_EQ(r.residual_branch_points, 2);
  EXPECT_EQ(r.residual_genus, 0);
  EXPECT_FALSE(r.good_reduction);
  // x^5 + x stays squarefree mod 5; infinity is a branch point.
  r = reduction_report(P({0, 1, 0, 0, 0, 1}), 5);
  EXPECT_EQ(r.residual_branch_points, 6);
  EXPECT_TRUE(r.good_reduction);
  // 3x^6 + x + 1 drops to degree 1: infinity has multiplicity 5.
  r = reduction_report(P({1, 1, 0, 0, 0, 0, 3}), 3);
  EXPECT_EQ(r.reduced.degree(), 1);
  EXPECT_EQ(r.residual_branch_points, 2);
  EXPECT_FALSE(r.good_reduction);
  EXPECT_THROW(reduction_report(P({3, 0, 6}), 3), InvalidInput);
}

TEST(Reduction, ExampleCurveIsGoodAtThree) {
  const auto r = reduction_report(P({1, 0, -5, 0, -5, 0, 1}), 3);
  EXPECT_TRUE(r.good_reduction);
  EXPECT_EQ(r.reduced, FqPoly::from_ints(r.field, {1, 0, 1, 0, 1, 0, 1}));
}

TEST(Reduction, FamilyFactorsAtThree) {
  const auto a5 = polys(FamilyCase::A5, Variant::Classical);
  EXPECT_FALSE(reduction_report(a5.R, 3).good_reduction);
  EXPECT_FALSE(reduction_report(a5.S, 3).good_reduction);
  const auto a4 = polys(FamilyCase::A4, Variant::Classical);
  const auto r = reduction_report(a4.R, 3);
  EXPECT_EQ(r.field->p(), 3u);
}

// Good reduction iff the reduction is squarefree and loses at most one
// degree, checked on random integer forms.
TEST(Reduction, MatchesSquarefreeCriterion) {
  std::mt19937_64 rng(7);
  for (int p : {3, 5, 7}) {
    std::uniform_int_distribution<std::int64_t> coeff(-2 * p, 2 * p);
    for (int trial = 0; trial < 150; ++trial) {
      const int deg = 5 + static_cast<int>(rng() % 4);
      std::vector<std::int64_t> c(deg + 1);
      for (auto& a : c) a = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      if (rng() % 3 == 0) c.back() = p;
      const CharZeroPoly F = P(c);
      if (!is_squarefree_char0(F)) continue;
      bool any = false;
      for (auto a : c) any = any || a % p != 0;
      if (!any) continue;
      const auto r = reduction_report(F, p);
      const int N = 2 * r.genus + 2;
      const bool expect = is_squarefree(r.reduced) && r.reduced.degree() >= N - 1;
      EXPECT_EQ(r.good_reduction, expect) << F << " mod " << p;
      EXPECT_EQ(r.residual_branch_points % 2, 0);
      EXPECT_LE(r.residual_genus, r.genus);
    }
  }
}

TEST(AllowedWords, ComparedWithPublished) {
  const auto a4 = allowed_F_words(FamilyCase::A4, 3, Variant::Classical, {QuadInt(2)});
  EXPECT_EQ(a4.stated, (std::vector<std::string>{"L", "RL", "TL", "TRL"}));
  EXPECT_TRUE(a4.only_computed.empty());
  EXPECT_TRUE(a4.only_stated.empty());
  const auto s4 = allowed_F_words(FamilyCase::S4, 3, Variant::Classical, {QuadInt(2)});
  EXPECT_EQ(s4.computed, (std::vector<std::string>{"L", "TL"}));
  const auto a5 = allowed_F_words(FamilyCase::A5, 5, Variant::Classical, {QuadInt(2)});
  EXPECT_EQ(a5.stated_unparseable, (std::vector<std::string>{"RSG"}));
  EXPECT_THROW(allowed_F_words(FamilyCase::A4, 7, Variant::Classical, {QuadInt(2)}), InvalidInput);
}

TEST(Invariants, GenusTwoU) {
  auto [u1, u2] = genus2_u_invariants(BigInt(0), BigInt(0));
  EXPECT_EQ(u1, BigInt(0));
  EXPECT_EQ(u2, BigInt(0));
  std::tie(u1, u2) = genus2_u_invariants(BigInt(1), BigInt(-1));
  EXPECT_EQ(u1, BigInt(0));
  EXPECT_EQ(u2, BigInt(-2));
  std::tie(u1, u2) = genus2_u_invariants(BigInt(-5), BigInt(-5));
  EXPECT_EQ(u1, BigInt(-250));
  EXPECT_EQ(u2, BigInt(50));
  // Symmetric in (a1, a2).
  std::tie(u1, u2) = genus2_u_invariants(BigInt(3), BigInt(-11));
  const auto [v1, v2] = genus2_u_invariants(BigInt(-11), BigInt(3));
  EXPECT_EQ(u1, v1);
  EXPECT_EQ(u2, v2);
}

TEST(Cyclic, Z2pShapes) {
  auto eq = cyclic_curve_equation(CyclicKind::Z2p, 2, 3);
  EXPECT_EQ(eq.t, 2);
  ASSERT_TRUE(eq.poly);
  EXPECT_EQ(*eq.poly, P({1, 0, 0, 1, 0, 0, 1}));
  EXPECT_TRUE(eq.genus_matches);
  // The 2g+1 shape keeps the leading x^(2g+2); only t changes.
  eq = cyclic_curve_equation(CyclicKind::Z2p, 2, 5, {"2g+1", {}, 0, 0});
  EXPECT_EQ(eq.t, 1);
  EXPECT_EQ(*eq.poly, P({1, 0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(eq.genus_matches);
  eq = cyclic_curve_equation(CyclicKind::Z2p, 3, 3, {"2g", {4}, 0, 0});
  EXPECT_EQ(*eq.poly, P({0, 1, 0, 0, 4, 0, 0, 1}));
  EXPECT_THROW(cyclic_curve_equation(CyclicKind::Z2p, 2, 7), InvalidInput);
  EXPECT_THROW(cyclic_curve_equation(CyclicKind::Z2p, 2, 3, {"2g+1", {}, 0, 0}), InvalidInput);
}

TEST(Cyclic, DihedralGenusMismatch) {
  const auto eq = cyclic_curve_equation(CyclicKind::D2p, 2, 3);
  EXPECT_EQ(eq.t, 1);
  EXPECT_EQ(eq.poly->degree(), 7);
  EXPECT_EQ(eq.produced_genus, 3);
  EXPECT_FALSE(eq.genus_matches);
  EXPECT_FALSE(eq.note.empty());
}

TEST(Cyclic, GenusConstraint) {
  const auto eq = cyclic_curve_equation(CyclicKind::CyclicN, 4, 3, {"", {}, 3, 1});
  EXPECT_EQ(eq.genus_constraint, (std::vector<int>{2, 4}));
  EXPECT_TRUE(eq.genus_matches);
  EXPECT_FALSE(eq.poly);
  EXPECT_THROW(cyclic_curve_equation(CyclicKind::CyclicN, 4, 3, {"", {}, 1, 1}), InvalidInput);
}

TEST(Claims, ModThreeOctahedralAndTetrahedralHold) {
  for (const auto& c : verify_claims(3)) {
    const bool tet_or_oct = c.claim.rfind("A4: ", 0) == 0 || c.claim.rfind("S4: ", 0) == 0;
    const bool list_or_powers = c.claim.find("allowed") != std::string::npos ||
                                c.claim.find("x^4") != std::string::npos;
    if (tet_or_oct && !list_or_powers) EXPECT_TRUE(c.pass) << c.claim << " [" << c.source << "] " << c.detail;
  }
}

TEST(Claims, ModFiveClassicalR) {
  const auto claims = verify_claims(5);
  bool seen = false;
  for (const auto& c : claims) {
    if (c.claim.rfind("A5: R", 0) != 0) continue;
    seen = true;
    EXPECT_TRUE(c.pass) << c.source << " " << c.detail;
  }
  EXPECT_TRUE(seen);
  EXPECT_THROW(verify_claims(7), InvalidInput);
}
