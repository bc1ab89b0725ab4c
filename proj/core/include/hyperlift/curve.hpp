#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperlift/fq_poly.hpp"

namespace hyperlift {

/// y^2 = f(x) over F_{p^m}, p odd, f squarefree of degree 2g+1 or 2g+2.
struct HyperCurve {
  FqCtxPtr ctx;
  FqPoly f;
  int genus = 0;
  /// Binary form of degree 2g+2: form[i] is the coefficient of X^i Z^(2g+2-i).
  /// The top coefficient is zero exactly when deg f is odd.
  std::vector<FqElem> form;

  int form_degree() const { return 2 * genus + 2; }
};

/// Throws InvalidInput for p = 2, non-squarefree f, or genus < 2.
HyperCurve curve_new(const FqCtxPtr& ctx, const FqPoly& f);
/// Same, from integer coefficients (low-to-high) reduced into F_{p^m}.
HyperCurve curve_from_ints(std::uint64_t p, int m, const std::vector<std::int64_t>& coeffs);

/// A point of P^1: an affine coordinate or infinity.
struct P1Point {
  bool infinity = false;
  FqElem x;

  static P1Point at_infinity() { return {true, {}}; }
  static P1Point affine(FqElem v) { return {false, std::move(v)}; }
  friend bool operator==(const P1Point& a, const P1Point& b);
  /// Affine points in canonical order, infinity last.
  friend bool operator<(const P1Point& a, const P1Point& b);
  std::string to_string() const;
};

struct BranchLocus {
  FqCtxPtr field;
  int degree = 0;
  std::vector<P1Point> points;
};

/// The 2g+2 branch points over the splitting field of f. Throws
/// BoundExceeded when that field has degree above max_degree.
BranchLocus branch_locus(const HyperCurve& curve, int max_degree = FqCtx::kMaxDegree);

/// x -> (ax+b)/(cx+d), normalized so the first nonzero of (a,b,c,d) is 1.
class Moebius {
 public:
  Moebius(FqElem a, FqElem b, FqElem c, FqElem d);
  static Moebius identity(const FqCtxPtr& ctx);
  static Moebius from_ints(const FqCtxPtr& ctx, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  const FqElem& a() const { return a_; }
  const FqElem& b() const { return b_; }
  const FqElem& c() const { return c_; }
  const FqElem& d() const { return d_; }
  const FqCtxPtr& ctx() const { return a_.ctx(); }
  FqElem det() const { return a_ * d_ - b_ * c_; }
  bool is_identity() const;

  P1Point operator()(const P1Point& pt) const;
  /// Projective product: (h1 * h2)(x) = h1(h2(x)).
  friend Moebius operator*(const Moebius& h1, const Moebius& h2);
  Moebius inverse() const;
  Moebius embed(const FieldEmbedding& emb) const;

  friend bool operator==(const Moebius& x, const Moebius& y);
  friend bool operator<(const Moebius& x, const Moebius& y);
  std::string to_string() const;

 private:
  FqElem a_, b_, c_, d_;
};

struct FormAction {
  std::vector<FqElem> form;
  /// c_h with form' = c_h * form, when it exists.
  std::optional<FqElem> multiplier;
};

/// form'(X,Z) = form(aX+bZ, cX+dZ) for the normalized matrix of h.
FormAction moebius_act_form(const Moebius& h, const std::vector<FqElem>& form);

/// Least n >= 1 with h^n trivial in PGL_2.
std::uint64_t pgl_element_order(const Moebius& h);

/// Stabilizer of the branch locus in PGL_2 of the splitting field, via the
/// images of three fixed branch points. Sorted canonically.
std::vector<Moebius> reduced_autgroup(const HyperCurve& curve, int max_degree = FqCtx::kMaxDegree);
std::vector<Moebius> reduced_autgroup(const HyperCurve& curve, const BranchLocus& locus);

/// Every element of PGL_2(F_q), normalized. Throws BoundExceeded when
/// q^3 exceeds limit.
std::vector<Moebius> pgl2_elements(const FqCtxPtr& ctx, std::uint64_t limit = 1u << 24);

/// (x, y) -> ((ax+b)/(cx+d), e*y/(cx+d)^(g+1)).
struct CurveAut {
  Moebius h;
  FqElem e;

  friend bool operator==(const CurveAut& x, const CurveAut& y) { return x.h == y.h && x.e == y.e; }
  friend bool operator<(const CurveAut& x, const CurveAut& y);
  std::string to_string() const;
};

/// first after second, renormalized; genus fixes the weight of e.
CurveAut compose(const CurveAut& first, const CurveAut& second, int genus);

/// Image of an affine curve point; nullopt when it lands at infinity.
std::optional<std::pair<FqElem, FqElem>> apply(const CurveAut& s, const FqElem& x, const FqElem& y, int genus);

struct FullAutGroup {
  FqCtxPtr field;
  int genus = 0;
  std::vector<CurveAut> elements;
};

/// Both lifts (h, +-e), e^2 = c_h, of every reduced element. Moves
/// everything to one quadratic extension when some c_h is a non-square.
/// Throws InvalidInput when some h does not preserve the form.
FullAutGroup lift_to_full(const HyperCurve& curve, const std::vector<Moebius>& reduced);

}  // namespace hyperlift
