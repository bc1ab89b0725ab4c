#include "hyperlift/curve.hpp"

#include <algorithm>
#include <sstream>

#include "hyperlift/error.hpp"

namespace hyperlift {

HyperCurve curve_new(const FqCtxPtr& ctx, const FqPoly& f) {
  if (ctx->p() == 2) throw InvalidInput("characteristic 2 is not supported");
  if (!f.ctx()->same_field(*ctx)) throw InvalidInput("polynomial is not over the curve's field");
  if (f.degree() < 5) throw InvalidInput("genus < 2: deg f must be at least 5");
  if (!is_squarefree(f)) throw InvalidInput("f is not squarefree");
  HyperCurve c{ctx, f, (f.degree() - 1) / 2, {}};
  c.form.reserve(c.form_degree() + 1);
  for (int i = 0; i <= c.form_degree(); ++i) c.form.push_back(f.coeff(i));
  return c;
}

HyperCurve curve_from_ints(std::uint64_t p, int m, const std::vector<std::int64_t>& coeffs) {
  if (p == 2) throw InvalidInput("characteristic 2 is not supported");
  const FqCtxPtr ctx = fq_ctx_new(p, m);
  return curve_new(ctx, FqPoly::from_ints(ctx, coeffs));
}

bool operator==(const P1Point& a, const P1Point& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.x == b.x;
}

bool operator<(const P1Point& a, const P1Point& b) {
  if (a.infinity) return false;
  if (b.infinity) return true;
  return a.x < b.x;
}

std::string P1Point::to_string() const { return infinity ? "inf" : x.to_string(); }

BranchLocus branch_locus(const HyperCurve& curve, int max_degree) {
  const RootSet rs = roots_over_extensions(curve.f, max_degree);
  BranchLocus bl{rs.field, rs.degree, {}};
  for (const auto& r : rs.roots) bl.points.push_back(P1Point::affine(r.value));
  if (curve.f.degree() % 2 == 1) bl.points.push_back(P1Point::at_infinity());
  if (static_cast<int>(bl.points.size()) != curve.form_degree()) {
    throw InternalError("branch locus has the wrong number of points");
  }
  return bl;
}

// ---------------------------------------------------------------------------

Moebius::Moebius(FqElem a, FqElem b, FqElem c, FqElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw InvalidInput("singular Moebius matrix");
  const FqElem* lead = !a_.is_zero() ? &a_ : (!b_.is_zero() ? &b_ : &c_);
  if (!lead->is_one()) {
    const FqElem s = lead->inv();
    a_ *= s;
    b_ *= s;
    c_ *= s;
    d_ *= s;
  }
}

Moebius Moebius::identity(const FqCtxPtr& ctx) {
  return Moebius(FqElem::one(ctx), FqElem::zero(ctx), FqElem::zero(ctx), FqElem::one(ctx));
}

Moebius Moebius::from_ints(const FqCtxPtr& ctx, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Moebius(FqElem(ctx, a), FqElem(ctx, b), FqElem(ctx, c), FqElem(ctx, d));
}

bool Moebius::is_identity() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one(); }

P1Point Moebius::operator()(const P1Point& pt) const {
  if (pt.infinity) {
    if (c_.is_zero()) return P1Point::at_infinity();
    return P1Point::affine(a_ / c_);
  }
  const FqElem den = c_ * pt.x + d_;
  if (den.is_zero()) return P1Point::at_infinity();
  return P1Point::affine((a_ * pt.x + b_) / den);
}

Moebius operator*(const Moebius& h1, const Moebius& h2) {
  return Moebius(h1.a_ * h2.a_ + h1.b_ * h2.c_, h1.a_ * h2.b_ + h1.b_ * h2.d_, h1.c_ * h2.a_ + h1.d_ * h2.c_,
                 h1.c_ * h2.b_ + h1.d_ * h2.d_);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

Moebius Moebius::embed(const FieldEmbedding& emb) const { return Moebius(emb(a_), emb(b_), emb(c_), emb(d_)); }

bool operator==(const Moebius& x, const Moebius& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

bool operator<(const Moebius& x, const Moebius& y) {
  if (!(x.a_ == y.a_)) return x.a_ < y.a_;
  if (!(x.b_ == y.b_)) return x.b_ < y.b_;
  if (!(x.c_ == y.c_)) return x.c_ < y.c_;
  return x.d_ < y.d_;
}

std::string Moebius::to_string() const {
  return "[[" + a_.to_string() + "," + b_.to_string() + "],[" + c_.to_string() + "," + d_.to_string() + "]]";
}

FormAction moebius_act_form(const Moebius& h, const std::vector<FqElem>& form) {
  const FqCtxPtr& ctx = h.ctx();
  const int n = static_cast<int>(form.size()) - 1;
  const FqPoly num({ctx, {h.b(), h.a()}});
  const FqPoly den({ctx, {h.d(), h.c()}});
  std::vector<FqPoly> pn{FqPoly::one(ctx)}, pd{FqPoly::one(ctx)};
  for (int i = 1; i <= n; ++i) {
    pn.push_back(pn.back() * num);
    pd.push_back(pd.back() * den);
  }
  FqPoly acc(ctx);
  for (int i = 0; i <= n; ++i) {
    if (form[i].is_zero()) continue;
    acc += pn[i] * pd[n - i] * form[i];
  }
  FormAction out;
  out.form.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.form.push_back(acc.coeff(i));
  int k = n;
  while (k >= 0 && form[k].is_zero()) --k;
  if (k < 0) return out;
  const FqElem c = out.form[k] / form[k];
  for (int i = 0; i <= n; ++i) {
    if (!(out.form[i] == c * form[i])) return out;
  }
  out.multiplier = c;
  return out;
}

std::uint64_t pgl_element_order(const Moebius& h) {
  Moebius x = h;
  for (std::uint64_t n = 1; n <= (1ULL << 32); ++n) {
    if (x.is_identity()) return n;
    x = x * h;
  }
  throw InternalError("element order exceeds the PGL_2 bound");
}

namespace {

// Homogeneous coordinates of a P^1 point.
std::pair<FqElem, FqElem> homog(const P1Point& pt, const FqCtxPtr& ctx) {
  if (pt.infinity) return {FqElem::one(ctx), FqElem::zero(ctx)};
  return {pt.x, FqElem::one(ctx)};
}

struct Mat {
  FqElem a, b, c, d;
};

// Columns alpha*u0, beta*u1 with alpha*u0 + beta*u1 = u2: sends
// (1:0), (0:1), (1:1) to u0, u1, u2.
Mat frame(const P1Point& p0, const P1Point& p1, const P1Point& p2, const FqCtxPtr& ctx) {
  const auto [x0, z0] = homog(p0, ctx);
  const auto [x1, z1] = homog(p1, ctx);
  const auto [x2, z2] = homog(p2, ctx);
  const FqElem det = x0 * z1 - x1 * z0;
  const FqElem alpha = (x2 * z1 - x1 * z2) / det;
  const FqElem beta = (x0 * z2 - x2 * z0) / det;
  return {alpha * x0, beta * x1, alpha * z0, beta * z1};
}

}  // namespace

std::vector<Moebius> reduced_autgroup(const HyperCurve& curve, int max_degree) {
  return reduced_autgroup(curve, branch_locus(curve, max_degree));
}

std::vector<Moebius> reduced_autgroup(const HyperCurve&, const BranchLocus& locus) {
  const FqCtxPtr& k = locus.field;
  std::vector<P1Point> pts = locus.points;
  std::sort(pts.begin(), pts.end());
  const std::size_t n = pts.size();
  const Mat src = frame(pts[0], pts[1], pts[2], k);
  // adjugate of the source frame
  const Mat src_adj{src.d, -src.b, -src.c, src.a};
  std::vector<Moebius> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        const Mat t = frame(pts[i], pts[j], pts[l], k);
        const Moebius h(t.a * src_adj.a + t.b * src_adj.c, t.a * src_adj.b + t.b * src_adj.d,
                        t.c * src_adj.a + t.d * src_adj.c, t.c * src_adj.b + t.d * src_adj.d);
        bool ok = true;
        for (std::size_t r = 3; r < n && ok; ++r) ok = std::binary_search(pts.begin(), pts.end(), h(pts[r]));
        if (ok) out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Moebius> pgl2_elements(const FqCtxPtr& ctx, std::uint64_t limit) {
  const auto q = ctx->order_u64();
  if (!q || *q > 2048 || (*q) * (*q) * (*q) > limit) throw BoundExceeded("PGL_2 too large to enumerate");
  const auto els = fq_elements(ctx);
  const FqElem zero = FqElem::zero(ctx), one = FqElem::one(ctx);
  std::vector<Moebius> out;
  // a = 1
  for (const auto& b : els)
    for (const auto& c : els)
      for (const auto& d : els)
        if (!(d == b * c)) out.emplace_back(one, b, c, d);
  // a = 0, b = 1
  for (const auto& c : els) {
    if (c.is_zero()) continue;
    for (const auto& d : els) out.emplace_back(zero, one, c, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool operator<(const CurveAut& x, const CurveAut& y) {
  if (!(x.h == y.h)) return x.h < y.h;
  return x.e < y.e;
}

std::string CurveAut::to_string() const { return "(" + h.to_string() + ", " + e.to_string() + ")"; }

CurveAut compose(const CurveAut& first, const CurveAut& second, int genus) {
  const Moebius& m1 = first.h;
  const Moebius& m2 = second.h;
  const FqElem a = m1.a() * m2.a() + m1.b() * m2.c();
  const FqElem b = m1.a() * m2.b() + m1.b() * m2.d();
  const FqElem c = m1.c() * m2.a() + m1.d() * m2.c();
  const FqElem lambda = !a.is_zero() ? a : (!b.is_zero() ? b : c);
  return {m1 * m2, first.e * second.e / lambda.pow(static_cast<std::uint64_t>(genus + 1))};
}

std::optional<std::pair<FqElem, FqElem>> apply(const CurveAut& s, const FqElem& x, const FqElem& y, int genus) {
  const FqElem den = s.h.c() * x + s.h.d();
  if (den.is_zero()) return std::nullopt;
  const FqElem xn = (s.h.a() * x + s.h.b()) / den;
  const FqElem yn = s.e * y / den.pow(static_cast<std::uint64_t>(genus + 1));
  return std::make_pair(xn, yn);
}

FullAutGroup lift_to_full(const HyperCurve& curve, const std::vector<Moebius>& reduced) {
  if (reduced.empty()) throw InvalidInput("empty reduced group");
  FqCtxPtr k = reduced.front().ctx();
  const FieldEmbedding to_k(curve.ctx, k);
  std::vector<FqElem> form;
  for (const auto& c : curve.form) form.push_back(to_k(c));
  std::vector<FqElem> mult;
  bool all_squares = true;
  for (const auto& h : reduced) {
    const FormAction act = moebius_act_form(h, form);
    if (!act.multiplier) throw InvalidInput("element " + h.to_string() + " does not preserve the curve");
    if (!is_square(*act.multiplier)) all_squares = false;
    mult.push_back(*act.multiplier);
  }
  std::vector<Moebius> hs = reduced;
  if (!all_squares) {
    const FqCtxPtr k2 = fq_ctx_new(k->p(), 2 * k->m());
    const FieldEmbedding up(k, k2);
    for (auto& h : hs) h = h.embed(up);
    for (auto& c : mult) c = up(c);
    k = k2;
  }
  FullAutGroup g{k, curve.genus, {}};
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto roots = fq_sqrt(mult[i]);
    if (!roots) throw InternalError("multiplier has no square root after extension");
    g.elements.push_back({hs[i], roots->first});
    g.elements.push_back({hs[i], roots->second});
  }
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

}  // namespace hyperlift
