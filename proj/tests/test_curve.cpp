#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hyperlift/curve.hpp"
#include "hyperlift/error.hpp"

using namespace hyperlift;

namespace {

// Brute-force stabilizer of the branch locus inside PGL_2 of its field.
std::vector<Moebius> brute_reduced(const HyperCurve& c) {
  const BranchLocus bl = branch_locus(c);
  std::vector<P1Point> pts = bl.points;
  std::sort(pts.begin(), pts.end());
  std::vector<Moebius> out;
  for (const auto& h : pgl2_elements(bl.field)) {
    std::vector<P1Point> img;
    for (const auto& pt : pts) img.push_back(h(pt));
    std::sort(img.begin(), img.end());
    if (img == pts) out.push_back(h);
  }
  return out;
}

struct Case {
  std::uint64_t p;
  int m;
  std::vector<std::int64_t> f;
};

const std::vector<Case> kCurves = {
    {3, 1, {1, 0, 1, 0, 1, 0, 1}},  {7, 1, {0, -1, 0, 0, 0, 1}}, {7, 1, {-1, 0, 0, 0, 0, 0, 1}},
    {5, 1, {1, 1, 0, 0, 0, 1}},     {7, 1, {0, 2, 2, 6, 3, 1}},    {5, 1, {1, 0, 0, 0, 0, 0, 1}},
    {3, 2, {1, 0, 1, 0, 1, 0, 1}}, {11, 1, {3, 5, 8, 5, 10, 1, 1}}, {13, 1, {0, 8, 2, 12, 5, 11, 1}},
};

}  // namespace

TEST(Curve, Construction) {
  const HyperCurve c = curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1});
  EXPECT_EQ(c.genus, 2);
  EXPECT_EQ(c.form_degree(), 6);
  const HyperCurve odd = curve_from_ints(7, 1, {0, -1, 0, 0, 0, 1});
  EXPECT_EQ(odd.genus, 2);
  EXPECT_TRUE(odd.form.back().is_zero());
  EXPECT_THROW(curve_from_ints(2, 1, {1, 0, 1, 0, 1, 1}), InvalidInput);
  EXPECT_THROW(curve_from_ints(5, 1, {1, 0, 1, 1}), InvalidInput);
  // (x - 1)^2 (x^3 + 1)
  EXPECT_THROW(curve_from_ints(5, 1, {1, -2, 1, 1, -2, 1}), InvalidInput);
}

TEST(Curve, BranchLocus) {
  const BranchLocus a = branch_locus(curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(a.degree, 2);
  EXPECT_EQ(a.points.size(), 6u);
  EXPECT_TRUE(std::none_of(a.points.begin(), a.points.end(), [](const P1Point& p) { return p.infinity; }));
  const BranchLocus b = branch_locus(curve_from_ints(7, 1, {0, -1, 0, 0, 0, 1}));
  EXPECT_EQ(b.degree, 2);
  EXPECT_EQ(b.points.size(), 6u);
  EXPECT_TRUE(b.points.back().infinity);
  EXPECT_THROW(branch_locus(curve_from_ints(7, 1, {2, 3, 0, 1, 5, 0, 1}), 0), BoundExceeded);
}

TEST(Moebius, NormalizationAndProducts) {
  const auto k = fq_ctx_new(5, 1);
  const Moebius h = Moebius::from_ints(k, 2, 4, 0, 2);
  EXPECT_EQ(h, Moebius::from_ints(k, 1, 2, 0, 1));
  EXPECT_THROW(Moebius::from_ints(k, 1, 2, 2, 4), InvalidInput);
  const Moebius g = Moebius::from_ints(k, 0, 1, 1, 0);
  EXPECT_TRUE((g * g).is_identity());
  EXPECT_TRUE((h * h.inverse()).is_identity());
  for (const auto& x : fq_elements(k)) {
    const P1Point pt = P1Point::affine(x);
    EXPECT_EQ((h * g)(pt), h(g(pt)));
  }
  EXPECT_EQ(g(P1Point::affine(FqElem::zero(k))), P1Point::at_infinity());
}

TEST(Moebius, FormMultipliers) {
  const HyperCurve c = curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1});
  const auto k = c.ctx;
  EXPECT_TRUE(moebius_act_form(Moebius::identity(k), c.form).multiplier->is_one());
  EXPECT_TRUE(moebius_act_form(Moebius::from_ints(k, 0, 1, 1, 0), c.form).multiplier->is_one());
  EXPECT_TRUE(moebius_act_form(Moebius::from_ints(k, -1, 0, 0, 1), c.form).multiplier->is_one());
  // x + 1 moves the branch point 0 of x^5 - x over F_7 to a non-branch point.
  const HyperCurve d = curve_from_ints(7, 1, {0, -1, 0, 0, 0, 1});
  EXPECT_FALSE(moebius_act_form(Moebius::from_ints(d.ctx, 1, 1, 0, 1), d.form).multiplier.has_value());
}

TEST(Moebius, OrderPMatrix) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 101}) {
    EXPECT_EQ(pgl_element_order(Moebius::from_ints(fq_ctx_new(p, 1), 3, -1, 1, 1)), p);
  }
  EXPECT_EQ(pgl_element_order(Moebius::identity(fq_ctx_new(5, 1))), 1u);
  EXPECT_EQ(pgl_element_order(Moebius::from_ints(fq_ctx_new(7, 1), 3, 0, 0, 1)), 6u);
}

TEST(Pgl2, ElementCount) {
  for (std::uint64_t q : {3, 5, 7}) {
    EXPECT_EQ(pgl2_elements(fq_ctx_new(q, 1)).size(), q * q * q - q);
  }
  EXPECT_EQ(pgl2_elements(fq_ctx_new(3, 2)).size(), 720u);
  EXPECT_THROW(pgl2_elements(fq_ctx_new(101, 1), 1000), BoundExceeded);
}

TEST(ReducedGroup, MatchesBruteForceStabilizer) {
  for (const auto& c : kCurves) {
    const HyperCurve curve = curve_from_ints(c.p, c.m, c.f);
    const auto fast = reduced_autgroup(curve);
    const auto slow = brute_reduced(curve);
    EXPECT_EQ(fast, slow) << curve.f.to_string() << " over " << curve.ctx->describe();
  }
}

TEST(ReducedGroup, KnownOrders) {
  EXPECT_EQ(reduced_autgroup(curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1})).size(), 24u);
  EXPECT_EQ(reduced_autgroup(curve_from_ints(7, 1, {-1, 0, 0, 0, 0, 0, 1})).size() % 12, 0u);
  EXPECT_EQ(reduced_autgroup(curve_from_ints(7, 1, {0, -1, 0, 0, 0, 1})).size(), 24u);
}

TEST(ReducedGroup, ClosedUnderProductAndInverse) {
  for (const auto& c : kCurves) {
    const auto h = reduced_autgroup(curve_from_ints(c.p, c.m, c.f));
    const std::set<Moebius> s(h.begin(), h.end());
    for (const auto& a : h) {
      EXPECT_TRUE(s.count(a.inverse()));
      for (const auto& b : h) EXPECT_TRUE(s.count(a * b));
    }
  }
}

TEST(FullGroup, LiftsAreAutomorphismsOfTheCurve) {
  for (const auto& c : kCurves) {
    const HyperCurve curve = curve_from_ints(c.p, c.m, c.f);
    const auto h = reduced_autgroup(curve);
    const FullAutGroup g = lift_to_full(curve, h);
    ASSERT_EQ(g.elements.size(), 2 * h.size());
    const FieldEmbedding emb(curve.ctx, g.field);
    const FqPoly f = embed_poly(emb, curve.f);
    int checked = 0;
    for (const auto& x : fq_elements(g.field)) {
      const auto y = fq_sqrt(f(x));
      if (!y) continue;
      for (const auto& s : g.elements) {
        const auto img = apply(s, x, y->first, curve.genus);
        if (!img) continue;
        EXPECT_EQ(img->second * img->second, f(img->first));
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(FullGroup, CompositionMatchesSubstitution) {
  const HyperCurve curve = curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1});
  const FullAutGroup g = lift_to_full(curve, reduced_autgroup(curve));
  const FqPoly f = embed_poly(FieldEmbedding(curve.ctx, g.field), curve.f);
  std::vector<std::pair<FqElem, FqElem>> pts;
  for (const auto& x : fq_elements(g.field)) {
    if (auto y = fq_sqrt(f(x))) pts.emplace_back(x, y->first);
  }
  for (std::size_t i = 0; i < g.elements.size(); i += 5) {
    for (std::size_t j = 0; j < g.elements.size(); j += 7) {
      const CurveAut& a = g.elements[i];
      const CurveAut& b = g.elements[j];
      const CurveAut ab = compose(a, b, curve.genus);
      for (const auto& [x, y] : pts) {
        const auto inner = apply(b, x, y, curve.genus);
        if (!inner) continue;
        const auto outer = apply(a, inner->first, inner->second, curve.genus);
        const auto direct = apply(ab, x, y, curve.genus);
        if (!outer || !direct) continue;
        EXPECT_EQ(*outer, *direct);
      }
    }
  }
}

TEST(FullGroup, ContainsInvolutionAndOrder48) {
  const HyperCurve curve = curve_from_ints(3, 1, {1, 0, 1, 0, 1, 0, 1});
  const FullAutGroup g = lift_to_full(curve, reduced_autgroup(curve));
  EXPECT_EQ(g.elements.size(), 48u);
  const CurveAut sigma{Moebius::identity(g.field), -FqElem::one(g.field)};
  EXPECT_NE(std::find(g.elements.begin(), g.elements.end(), sigma), g.elements.end());
  const CurveAut id{Moebius::identity(g.field), FqElem::one(g.field)};
  for (const auto& s : g.elements) {
    EXPECT_EQ(compose(s, sigma, 2), compose(sigma, s, 2));
    EXPECT_EQ(compose(id, s, 2), s);
  }
}

TEST(FullGroup, RejectsNonStabilizer) {
  const HyperCurve curve = curve_from_ints(7, 1, {0, -1, 0, 0, 0, 1});
  EXPECT_THROW(lift_to_full(curve, {Moebius::from_ints(curve.ctx, 1, 1, 0, 1)}), InvalidInput);
}
