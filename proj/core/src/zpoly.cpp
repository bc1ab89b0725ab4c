#include "hyperlift/zpoly.hpp"

#include <ostream>
#include <sstream>

#include "hyperlift/error.hpp"

namespace hyperlift {

CharZeroPoly::CharZeroPoly(std::vector<QuadInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

CharZeroPoly CharZeroPoly::from_ints(const std::vector<std::int64_t>& coeffs) {
  std::vector<QuadInt> c(coeffs.begin(), coeffs.end());
  return CharZeroPoly(std::move(c));
}

CharZeroPoly CharZeroPoly::monomial(const QuadInt& c, std::size_t k) {
  std::vector<QuadInt> v(k + 1);
  v[k] = c;
  return CharZeroPoly(std::move(v));
}

void CharZeroPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  d_ = 0;
  for (const auto& c : c_) {
    if (c.is_integer()) continue;
    if (d_ != 0 && d_ != c.d()) throw InvalidInput("coefficients with different radicands");
    d_ = c.d();
  }
}

const QuadInt& CharZeroPoly::leading() const {
  if (c_.empty()) throw InvalidInput("zero polynomial has no leading coefficient");
  return c_.back();
}

CharZeroPoly CharZeroPoly::derivative() const {
  std::vector<QuadInt> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * QuadInt(static_cast<std::int64_t>(i)));
  return CharZeroPoly(std::move(d));
}

CharZeroPoly CharZeroPoly::pow(unsigned e) const {
  CharZeroPoly r = constant(QuadInt(1));
  CharZeroPoly b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

CharZeroPoly CharZeroPoly::operator-() const {
  CharZeroPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CharZeroPoly& CharZeroPoly::operator+=(const CharZeroPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

CharZeroPoly& CharZeroPoly::operator-=(const CharZeroPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

CharZeroPoly& CharZeroPoly::operator*=(const CharZeroPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    d_ = 0;
    return *this;
  }
  std::vector<QuadInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

std::string CharZeroPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const QuadInt& c = c_[i];
    if (c.is_zero()) continue;
    std::string s = c.to_string();
    const bool compound = !c.is_integer() && !c.a().is_zero();
    bool negative = false;
    if (!compound && s.front() == '-') {
      negative = true;
      s.erase(0, 1);
    }
    if (compound) s = "(" + s + ")";
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << s;
    } else {
      if (s != "1") os << s << (c.is_integer() ? "" : "*");
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CharZeroPoly& f) { return os << f.to_string(); }

CharZeroPoly compose(const CharZeroPoly& f, const CharZeroPoly& g) {
  CharZeroPoly r;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    r *= g;
    r += CharZeroPoly::constant(f.coeffs()[i]);
  }
  return r;
}

FqPoly reduce_mod_p(const CharZeroPoly& f, const FqCtxPtr& ctx) {
  std::vector<FqElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(quad_reduce_mod_p(v, ctx));
  return FqPoly(ctx, std::move(c));
}

FqCtxPtr reduction_field(const CharZeroPoly& f, std::uint64_t p) {
  auto base = fq_ctx_new(p, 1);
  const std::int64_t d = f.radicand();
  if (d == 0 || is_square(FqElem(base, d))) return base;
  return fq_ctx_new(p, 2);
}

namespace {

// Sum over coefficients of (|a| + |b| * ceil(sqrt|d|))^2, an upper bound for
// the squared 2-norm of the coefficient vector under either embedding.
BigInt norm2_bound(const CharZeroPoly& f) {
  const std::int64_t d = f.radicand();
  std::int64_t root = 0;
  while (root * root < (d < 0 ? -d : d)) ++root;
  BigInt s(0);
  for (const auto& c : f.coeffs()) {
    const BigInt t = c.a().abs() + c.b().abs() * BigInt(root);
    s += t * t;
  }
  return s;
}

}  // namespace

bool is_squarefree_char0(const CharZeroPoly& f) {
  if (f.is_zero()) throw InvalidInput("squarefree test of the zero polynomial");
  if (f.degree() <= 1) return true;
  const CharZeroPoly df = f.derivative();
  const auto n = static_cast<unsigned>(f.degree());
  // |N(disc-resultant)| <= H^2 by Hadamard on the Sylvester matrix.
  const BigInt bound = BigInt(2) * norm2_bound(f).pow(n - 1) * norm2_bound(df).pow(n);
  const BigInt lc_norm = f.leading().norm();
  BigInt product(1);
  for (std::uint64_t p = FqCtx::kMaxPrime; p > 2; p -= 2) {
    if (!is_prime_u64(p)) continue;
    if (lc_norm.mod_u64(p) == 0) continue;
    const FqPoly fp = reduce_mod_p(f, reduction_field(f, p));
    if (fp.degree() != f.degree()) continue;
    if (is_squarefree(fp)) return true;
    product *= BigInt(static_cast<std::int64_t>(p));
    if (product > bound) return false;
  }
  throw InternalError("ran out of primes in the squarefree test");
}

}  // namespace hyperlift
