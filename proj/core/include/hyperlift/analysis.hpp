#pragma once

#include <optional>
#include <vector>

#include "hyperlift/curve.hpp"
#include "hyperlift/group_type.hpp"
#include "hyperlift/groups.hpp"
#include "hyperlift/lift_rules.hpp"

namespace hyperlift {

/// Everything computed for one curve: branch locus, reduced and full
/// automorphism groups with their tables, identification, verdict.
struct CurveAnalysis {
  HyperCurve curve;
  BranchLocus locus;
  std::vector<Moebius> reduced;
  FullAutGroup full;
  FiniteGroup reduced_group;
  FiniteGroup full_group;
  /// Index of (identity, -1) in full_group.
  int involution = -1;
  GroupType reduced_type;
  GroupType full_type;
  /// Oort status taken from full_group itself.
  LiftVerdict verdict;
  std::vector<ConsistencyCheck> checks;
};

CurveAnalysis analyze_curve(const HyperCurve& curve, int max_ext = FqCtx::kMaxDegree);

/// |G| = 2|H|, central involution, G/<sigma> ~ H, identify(G) among the
/// extensions of identify(H), associativity of both tables.
std::vector<ConsistencyCheck> structural_checks(const CurveAnalysis& a);

}  // namespace hyperlift
