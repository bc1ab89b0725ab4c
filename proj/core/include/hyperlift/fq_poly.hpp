#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hyperlift/fq.hpp"

namespace hyperlift {

/// Dense univariate polynomial over F_{p^m}, coefficients low-to-high and
/// normalized (no trailing zeros; the zero polynomial has no coefficients).
class FqPoly {
 public:
  explicit FqPoly(FqCtxPtr ctx) : ctx_(std::move(ctx)) {}
  FqPoly(FqCtxPtr ctx, std::vector<FqElem> coeffs);

  static FqPoly from_ints(const FqCtxPtr& ctx, const std::vector<std::int64_t>& coeffs);
  static FqPoly constant(const FqElem& c);
  /// c * x^k
  static FqPoly monomial(const FqElem& c, std::size_t k);
  static FqPoly x(const FqCtxPtr& ctx) { return monomial(FqElem::one(ctx), 1); }
  static FqPoly one(const FqCtxPtr& ctx) { return constant(FqElem::one(ctx)); }

  const FqCtxPtr& ctx() const { return ctx_; }
  const std::vector<FqElem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Coefficient of x^i (zero past the degree).
  FqElem coeff(std::size_t i) const;
  /// Throws InvalidInput for the zero polynomial.
  const FqElem& leading() const;

  FqElem operator()(const FqElem& x) const;
  FqPoly derivative() const;
  FqPoly monic() const;
  FqPoly pow(std::uint64_t e) const;

  FqPoly operator-() const;
  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o);
  FqPoly& operator*=(const FqElem& c);
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(FqPoly a, const FqPoly& b) { return a *= b; }
  friend FqPoly operator*(FqPoly a, const FqElem& c) { return a *= c; }
  friend FqPoly operator*(const FqElem& c, FqPoly a) { return a *= c; }

  friend bool operator==(const FqPoly& a, const FqPoly& b);

  /// Human-readable form, highest degree first, e.g. "x^4 + 2x^2 + 1".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FqPoly& f);

 private:
  void normalize();
  void check_same(const FqPoly& o) const;

  FqCtxPtr ctx_;
  std::vector<FqElem> c_;
};

/// Quotient and remainder; throws InvalidInput on division by zero.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
/// Monic gcd (zero when both inputs are zero).
FqPoly gcd(const FqPoly& a, const FqPoly& b);
/// base^e mod m.
FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m);
/// Substitution f(g(x)).
FqPoly compose(const FqPoly& f, const FqPoly& g);
/// Coefficient-wise image under a field embedding.
FqPoly embed_poly(const FieldEmbedding& emb, const FqPoly& f);

bool is_squarefree(const FqPoly& f);

/// unit * prod factor_i ^ multiplicity_i with monic, pairwise coprime
/// factors and distinct multiplicities when produced by
/// squarefree_decompose.
struct FactoredForm {
  FqElem unit;
  std::vector<std::pair<FqPoly, int>> factors;

  FqPoly expand() const;
  std::string to_string() const;
};

/// Squarefree decomposition over F_{p^m} (Yun's scheme with p-th root
/// descent when the derivative vanishes). Factors sorted by multiplicity.
/// Throws InvalidInput for the zero polynomial.
FactoredForm squarefree_decompose(const FqPoly& f);

/// Product of the factors whose multiplicity is odd (a monic polynomial).
FqPoly odd_multiplicity_part(const FactoredForm& ff);
/// Product of all distinct factors (a monic polynomial).
FqPoly squarefree_part(const FactoredForm& ff);

/// Degrees of the irreducible factors of a squarefree polynomial over its
/// own field, as (product of the factors of that degree, degree) pairs.
std::vector<std::pair<FqPoly, int>> distinct_degree_factor(const FqPoly& squarefree);

/// Smallest M (a multiple of the field degree m) such that f splits over
/// F_{p^M}. Constants split trivially and give M = m.
int splitting_degree(const FqPoly& f);

/// Distinct roots of f lying in f's own field, sorted canonically.
/// Uses equal-degree splitting; small fields fall back to enumeration.
std::vector<FqElem> roots_in_field(const FqPoly& f);
/// Same set by exhaustive evaluation over the field (small fields only).
std::vector<FqElem> roots_by_enumeration(const FqPoly& f);

struct Root {
  FqElem value;
  int multiplicity;
};

struct RootSet {
  FqCtxPtr field;  ///< canonical F_{p^M}
  int degree = 0;  ///< M, the minimal splitting degree
  std::vector<Root> roots;
};

/// All roots of f in its minimal splitting field F_{p^M}, with
/// multiplicities, sorted canonically. Throws BoundExceeded when
/// M > max_total_degree and InvalidInput for the zero polynomial.
RootSet roots_over_extensions(const FqPoly& f, int max_total_degree = FqCtx::kMaxDegree);

struct ClaimMatch {
  bool equal = false;
  FqPoly expanded;
  /// target - expanded
  FqPoly difference;
};

/// Expands a claimed factorization and compares it with a target.
ClaimMatch expand_claimed_factorization(const FactoredForm& claim, const FqPoly& target);

}  // namespace hyperlift
