#include "hyperlift/fq_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hyperlift/error.hpp"

namespace hyperlift {

FqPoly::FqPoly(FqCtxPtr ctx, std::vector<FqElem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!c.valid() || !c.ctx()->same_field(*ctx_)) throw InvalidInput("coefficient outside the polynomial's field");
  }
  normalize();
}

FqPoly FqPoly::from_ints(const FqCtxPtr& ctx, const std::vector<std::int64_t>& coeffs) {
  std::vector<FqElem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.emplace_back(ctx, v);
  return FqPoly(ctx, std::move(c));
}

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.ctx(), {c}); }

FqPoly FqPoly::monomial(const FqElem& c, std::size_t k) {
  std::vector<FqElem> v(k + 1, FqElem::zero(c.ctx()));
  v[k] = c;
  return FqPoly(c.ctx(), std::move(v));
}

void FqPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void FqPoly::check_same(const FqPoly& o) const {
  if (!ctx_->same_field(*o.ctx_)) throw InvalidInput("polynomials over different fields");
}

FqElem FqPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FqElem::zero(ctx_); }

const FqElem& FqPoly::leading() const {
  if (c_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return c_.back();
}

FqElem FqPoly::operator()(const FqElem& x) const {
  FqElem r = FqElem::zero(ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(ctx_);
  std::vector<FqElem> d;
  d.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * FqElem(ctx_, static_cast<std::int64_t>(i % ctx_->p())));
  return FqPoly(ctx_, std::move(d));
}

FqPoly FqPoly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inv();
}

FqPoly FqPoly::pow(std::uint64_t e) const {
  FqPoly r = one(ctx_);
  FqPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FqElem::zero(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FqElem::zero(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

FqPoly& FqPoly::operator*=(const FqPoly& o) {
  check_same(o);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1, FqElem::zero(ctx_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

FqPoly& FqPoly::operator*=(const FqElem& c) {
  for (auto& v : c_) v *= c;
  normalize();
  return *this;
}

bool operator==(const FqPoly& a, const FqPoly& b) { return a.ctx_->same_field(*b.ctx_) && a.c_ == b.c_; }

namespace {

std::string coeff_text(const FqElem& c) {
  std::string s = c.to_string();
  if (c.ctx()->m() > 1 && s.find('+') != std::string::npos) return "(" + s + ")";
  return s;
}

}  // namespace

std::string FqPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[i].is_one();
    if (i == 0) {
      os << coeff_text(c_[i]);
    } else {
      if (!unit) os << coeff_text(c_[i]);
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  const FqCtxPtr& ctx = a.ctx();
  if (a.degree() < b.degree()) return {FqPoly(ctx), a};
  std::vector<FqElem> r = a.coeffs();
  std::vector<FqElem> q(a.degree() - b.degree() + 1, FqElem::zero(ctx));
  const FqElem li = b.leading().inv();
  const int db = b.degree();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    const FqElem c = r[k] * li;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) r[k - db + i] -= c * bc[i];
  }
  r.resize(db);
  return {FqPoly(ctx, std::move(q)), FqPoly(ctx, std::move(r))};
}

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m) {
  FqPoly r = divmod(FqPoly::one(base.ctx()), m).second;
  const FqPoly b = divmod(base, m).second;
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    r = divmod(r * r, m).second;
    if (e.bit(i)) r = divmod(r * b, m).second;
  }
  return r;
}

FqPoly compose(const FqPoly& f, const FqPoly& g) {
  if (!f.ctx()->same_field(*g.ctx())) throw InvalidInput("compose: polynomials over different fields");
  FqPoly r(f.ctx());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    r *= g;
    r += FqPoly::constant(f.coeffs()[i]);
  }
  return r;
}

FqPoly embed_poly(const FieldEmbedding& emb, const FqPoly& f) {
  std::vector<FqElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(emb(v));
  return FqPoly(emb.dst(), std::move(c));
}

bool is_squarefree(const FqPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

FqPoly FactoredForm::expand() const {
  FqPoly r = FqPoly::constant(unit);
  if (!unit.valid()) throw InvalidInput("factored form without a unit");
  for (const auto& [g, e] : factors) r *= g.pow(static_cast<std::uint64_t>(e));
  return r;
}

std::string FactoredForm::to_string() const {
  std::ostringstream os;
  const bool show_unit = !unit.is_one() || factors.empty();
  if (show_unit) os << coeff_text(unit);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0 || show_unit) os << "*";
    const auto& [g, e] = factors[i];
    const bool wrap = factors.size() > 1 || e > 1 || show_unit;
    if (wrap) os << "(";
    os << g.to_string();
    if (wrap) os << ")";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

// g(x) with g(x)^p = f(x); f must be a polynomial in x^p.
FqPoly pth_root(const FqPoly& f) {
  const FqCtxPtr& ctx = f.ctx();
  const auto p = static_cast<std::size_t>(ctx->p());
  std::vector<FqElem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i].frobenius(ctx->m() - 1));
  return FqPoly(ctx, std::move(r));
}

void sff(const FqPoly& f, int scale, std::vector<std::pair<FqPoly, int>>& out) {
  const FqCtxPtr& ctx = f.ctx();
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = gcd(w, c);
    FqPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) sff(pth_root(c.monic()), scale * static_cast<int>(ctx->p()), out);
}

}  // namespace

FactoredForm squarefree_decompose(const FqPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of the zero polynomial");
  FactoredForm ff{f.leading(), {}};
  sff(f.monic(), 1, ff.factors);
  std::sort(ff.factors.begin(), ff.factors.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return ff;
}

FqPoly odd_multiplicity_part(const FactoredForm& ff) {
  FqPoly r = FqPoly::one(ff.unit.ctx());
  for (const auto& [g, e] : ff.factors) {
    if (e % 2 == 1) r *= g;
  }
  return r;
}

FqPoly squarefree_part(const FactoredForm& ff) {
  FqPoly r = FqPoly::one(ff.unit.ctx());
  for (const auto& [g, e] : ff.factors) r *= g;
  return r;
}

std::vector<std::pair<FqPoly, int>> distinct_degree_factor(const FqPoly& squarefree) {
  if (squarefree.is_zero()) throw InvalidInput("distinct-degree factorization of zero");
  const FqCtxPtr& ctx = squarefree.ctx();
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = squarefree.monic();
  const FqPoly x = FqPoly::x(ctx);
  FqPoly h = divmod(x, f.degree() > 0 ? f : FqPoly::one(ctx)).second;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = powmod(h, ctx->order(), f);
    FqPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

int splitting_degree(const FqPoly& f) {
  const int m = f.ctx()->m();
  if (f.degree() <= 0) return m;
  const FqPoly s = squarefree_part(squarefree_decompose(f));
  int l = 1;
  for (const auto& [g, k] : distinct_degree_factor(s)) l = std::lcm(l, k);
  return m * l;
}

std::vector<FqElem> roots_by_enumeration(const FqPoly& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  std::vector<FqElem> out;
  for (const auto& a : fq_elements(f.ctx())) {
    if (f(a).is_zero()) out.push_back(a);
  }
  return out;
}

namespace {

void split_linear(const FqPoly& g, std::vector<FqElem>& out) {
  const FqCtxPtr& ctx = g.ctx();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeffs()[0] / g.coeffs()[1]));
    return;
  }
  const FqPoly x = FqPoly::x(ctx);
  const BigInt q = ctx->order();
  for (std::uint64_t n = 0;; ++n) {
    const FqElem delta = FqElem::from_index(ctx, n);
    FqPoly probe(ctx);
    if (ctx->p() == 2) {
      // Absolute trace of delta*x, a map onto F_2 that separates roots.
      const FqPoly base = FqPoly::constant(delta) * x;
      FqPoly term = divmod(base, g).second;
      probe = term;
      for (int i = 1; i < ctx->m(); ++i) {
        term = divmod(term * term, g).second;
        probe += term;
      }
    } else {
      probe = powmod(x + FqPoly::constant(delta), (q - BigInt(1)) / BigInt(2), g) - FqPoly::one(ctx);
    }
    FqPoly d = gcd(g, probe);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, out);
      split_linear(divmod(g, d).first, out);
      return;
    }
  }
}

}  // namespace

std::vector<FqElem> roots_in_field(const FqPoly& f) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  const FqCtxPtr& ctx = f.ctx();
  if (f.degree() == 0) return {};
  const auto q = ctx->order_u64();
  if (q && *q <= 256) return roots_by_enumeration(f);
  const FqPoly x = FqPoly::x(ctx);
  const FqPoly xq = powmod(x, ctx->order(), f.monic());
  FqPoly g = gcd(f, xq - x);
  std::vector<FqElem> out;
  split_linear(g, out);
  std::sort(out.begin(), out.end());
  return out;
}

RootSet roots_over_extensions(const FqPoly& f, int max_total_degree) {
  if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
  if (max_total_degree > FqCtx::kMaxDegree) throw InvalidInput("extension bound must not exceed 24");
  const FactoredForm ff = squarefree_decompose(f);
  const int m_total = splitting_degree(squarefree_part(ff));
  if (m_total > max_total_degree) {
    throw BoundExceeded("splitting field degree " + std::to_string(m_total) + " exceeds bound " +
                        std::to_string(max_total_degree));
  }
  RootSet rs;
  rs.degree = m_total;
  rs.field = m_total == f.ctx()->m() ? f.ctx() : fq_ctx_new(f.ctx()->p(), m_total);
  const FieldEmbedding emb(f.ctx(), rs.field);
  for (const auto& [g, e] : ff.factors) {
    for (auto& r : roots_in_field(embed_poly(emb, g))) rs.roots.push_back({std::move(r), e});
  }
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return rs;
}

ClaimMatch expand_claimed_factorization(const FactoredForm& claim, const FqPoly& target) {
  ClaimMatch m{false, claim.expand(), FqPoly(target.ctx())};
  m.difference = target - m.expanded;
  m.equal = m.difference.is_zero();
  return m;
}

}  // namespace hyperlift
