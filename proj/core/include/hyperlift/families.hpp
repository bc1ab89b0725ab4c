#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlift/bigint.hpp"
#include "hyperlift/fq_poly.hpp"
#include "hyperlift/zpoly.hpp"

namespace hyperlift {

enum class FamilyCase { A5, A4, S4 };
/// Stated: the published coefficients verbatim. Classical: the icosahedral
/// and octahedral invariants they were transcribed from.
enum class Variant { Stated, Classical };

FamilyCase parse_family_case(const std::string& s);
Variant parse_variant(const std::string& s);
std::string to_string(FamilyCase c);
std::string to_string(Variant v);

struct FamilyPolys {
  CharZeroPoly R, S, T;
  std::vector<CharZeroPoly> G;
  CharZeroPoly L;
};

/// R, S, T, G_i (one per lambda) and L = prod G_i. Throws InvalidInput for
/// an empty lambda list or, in the A5 case, lambda = 1 (the x^60
/// coefficient lambda - 1 vanishes).
FamilyPolys build_family_polys(FamilyCase c, Variant v, const std::vector<QuadInt>& lambdas);

struct FamilySpec {
  FamilyCase fcase = FamilyCase::A5;
  Variant variant = Variant::Stated;
  std::vector<QuadInt> lambdas{QuadInt(2)};
  /// Distinct letters from R, S, T, L, e.g. "TRL".
  std::string word = "L";
};

/// Product of the factors named by the word. Throws InvalidInput for a bad
/// word or when the product is not squarefree.
CharZeroPoly build_F(const FamilySpec& spec);

/// The equation shapes listed for each case, in the order given.
std::vector<std::string> candidate_words(FamilyCase c);

struct ReductionReport {
  CharZeroPoly F;
  int p = 0;
  FqCtxPtr field;
  FqPoly reduced;
  FactoredForm factored;
  int genus = 0;
  /// Branch points of y^2 = F over the algebraic closure: 2g+2.
  int branch_points = 0;
  /// Points of odd multiplicity of the reduced binary form (infinity
  /// included), i.e. branch points of the normalized reduction.
  int residual_branch_points = 0;
  int residual_genus = 0;
  bool good_reduction = false;
};

/// Reduces F modulo p (over F_p, or F_{p^2} when sqrt d needs it) and
/// compares genera. Throws InvalidInput when F reduces to zero.
ReductionReport reduction_report(const CharZeroPoly& F, int p);

struct AllowedWords {
  std::vector<std::string> computed;
  /// The published list, parseable entries only.
  std::vector<std::string> stated;
  std::vector<std::string> stated_unparseable;
  std::vector<std::string> only_computed;
  std::vector<std::string> only_stated;
};

/// Candidate words whose F has good reduction at p (3 or 5), compared with
/// the published conclusion for that case and prime.
AllowedWords allowed_F_words(FamilyCase c, int p, Variant v, const std::vector<QuadInt>& lambdas);

/// (a1^3 + a2^3, 2 a1 a2).
std::pair<BigInt, BigInt> genus2_u_invariants(const BigInt& a1, const BigInt& a2);

enum class CyclicKind { Z2p, D2p, CyclicN };

struct CyclicEquation {
  std::optional<CharZeroPoly> poly;
  std::string symbolic;
  int t = 0;
  int requested_genus = 0;
  /// Genus of y^2 = poly, when a polynomial is produced.
  std::optional<int> produced_genus;
  /// CyclicN only: the two genus values (n-1)/2 (pt-1) and (n-1)(pt-1).
  std::vector<int> genus_constraint;
  bool genus_matches = true;
  std::string note;
};

struct CyclicParams {
  /// Z2p only: "2g+2", "2g+1" or "2g"; empty picks the first admissible.
  std::string shape;
  /// a_j or lambda_i, default 1 each.
  std::vector<std::int64_t> coeffs;
  /// CyclicN only.
  int n = 0;
  int t = 0;
};

/// Equation shapes for cyclic covers with p | |G| and their genus
/// bookkeeping. Throws InvalidInput when no shape admits an integral t.
CyclicEquation cyclic_curve_equation(CyclicKind kind, int g, int p, const CyclicParams& params = {});

struct ClaimResult {
  std::string claim;
  /// "stated", "classical" or "both".
  std::string source;
  bool pass = false;
  std::string detail;
};

/// Every published reduction claim for p = 3 or p = 5, checked under both
/// variants where they differ. lambdas feed the G_i claims.
std::vector<ClaimResult> verify_claims(int p, const std::vector<QuadInt>& lambdas = {QuadInt(2)});

}  // namespace hyperlift
