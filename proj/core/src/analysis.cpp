#include "hyperlift/analysis.hpp"

#include <algorithm>

#include "hyperlift/error.hpp"

namespace hyperlift {

namespace {

FiniteGroup reduced_table(const std::vector<Moebius>& h) {
  std::vector<std::string> labels;
  for (const auto& m : h) labels.push_back(m.to_string());
  return cayley_from_elements(h, [](const Moebius& x, const Moebius& y) { return x * y; }, labels);
}

FiniteGroup full_table(const FullAutGroup& g) {
  std::vector<std::string> labels;
  for (const auto& s : g.elements) labels.push_back(s.to_string());
  const int genus = g.genus;
  return cayley_from_elements(
      g.elements, [genus](const CurveAut& x, const CurveAut& y) { return compose(x, y, genus); }, labels);
}

int find_involution(const FullAutGroup& g) {
  CurveAut sigma{Moebius::identity(g.field), -FqElem::one(g.field)};
  std::vector<CurveAut> sorted = g.elements;
  std::sort(sorted.begin(), sorted.end());
  auto it = std::lower_bound(sorted.begin(), sorted.end(), sigma);
  if (it == sorted.end() || !(*it == sigma)) throw InvalidInput("hyperelliptic involution missing from the full group");
  return static_cast<int>(it - sorted.begin());
}

bool liftable_base(const GroupType& t) {
  using K = GroupType::Kind;
  return t.kind == K::Cyclic || t.kind == K::Dihedral || t.kind == K::A4 || t.kind == K::S4 || t.kind == K::A5;
}

}  // namespace

CurveAnalysis analyze_curve(const HyperCurve& curve, int max_ext) {
  BranchLocus locus = branch_locus(curve, max_ext);
  std::vector<Moebius> reduced = reduced_autgroup(curve, locus);
  FullAutGroup full = lift_to_full(curve, reduced);
  FiniteGroup hg = reduced_table(reduced);
  FiniteGroup gg = full_table(full);
  const int sigma = find_involution(full);
  GroupType ht = identify(hg);
  GroupType gt = identify(gg);
  const int p = static_cast<int>(curve.ctx->p());
  LiftVerdict v = hyperelliptic_liftable(gt, p, curve.genus);
  if (gg.order() <= 256) v.oort = oort_status(gg, p);
  CurveAnalysis a{curve,         std::move(locus), std::move(reduced), std::move(full), std::move(hg),
                  std::move(gg), sigma,            std::move(ht),      std::move(gt),   std::move(v),
                  {}};
  a.checks = consistency_checks(a.verdict, a.full_group.order(), p, curve.genus);
  for (auto& c : structural_checks(a)) a.checks.push_back(std::move(c));
  return a;
}

std::vector<ConsistencyCheck> structural_checks(const CurveAnalysis& a) {
  std::vector<ConsistencyCheck> out;
  const FiniteGroup& g = a.full_group;
  const FiniteGroup& h = a.reduced_group;
  out.push_back({"|G| = 2|H|", g.order() == 2 * h.order(),
                 std::to_string(g.order()) + " vs 2*" + std::to_string(h.order())});

  bool central = true;
  for (int x = 0; x < g.order() && central; ++x) central = g.mul(x, a.involution) == g.mul(a.involution, x);
  out.push_back({"hyperelliptic involution is central", central, central ? "" : "some element does not commute"});

  std::vector<int> normal = {g.identity(), a.involution};
  std::sort(normal.begin(), normal.end());
  const bool iso = is_isomorphic(quotient(g, normal), h);
  out.push_back({"G/<sigma> isomorphic to H", iso, ""});

  bool ext = a.full_type.kind == GroupType::Kind::Unknown;
  std::string detail = "G = " + a.full_type.to_string() + ", H = " + a.reduced_type.to_string();
  if (!ext && liftable_base(a.reduced_type)) ext = is_quotient_extension(g, a.reduced_type);
  out.push_back({"type of G is an extension of the type of H", ext, detail});

  const bool assoc = g.is_associative() && h.is_associative();
  out.push_back({"Cayley tables associative", assoc, ""});
  return out;
}

}  // namespace hyperlift
