#include "hyperlift/fq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hyperlift/error.hpp"

namespace hyperlift {

namespace {

using Coeffs = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Dense polynomials over F_p used for modulus selection and inversion.
namespace fp {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
Coeffs rem(Coeffs a, const Coeffs& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
    trim(a);
  }
  return a;
}

Coeffs gcd(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs powmod_poly(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint64_t p) {
  Coeffs r{1};
  base = rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    e >>= 1;
    if (e) base = rem(mul(base, base, p), f, p);
  }
  return r;
}

}  // namespace fp

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p) {
  Coeffs f(monic.begin(), monic.end());
  fp::trim(f);
  if (f.size() < 2) return false;
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  const Coeffs x{0, 1};
  // h[k] = x^(p^k) mod f
  std::vector<Coeffs> h(m + 1);
  h[0] = x;
  for (int k = 1; k <= m; ++k) h[k] = fp::powmod_poly(h[k - 1], p, f, p);
  auto minus_x = [&](Coeffs a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    fp::trim(a);
    return a;
  };
  if (!minus_x(h[m]).empty()) return false;
  for (int r : prime_factors(m)) {
    Coeffs g = fp::gcd(f, minus_x(h[m / r]), p);
    if (g.size() != 1) return false;
  }
  return true;
}

FqCtx::FqCtx(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)), order_(BigInt(static_cast<std::int64_t>(p)).pow(m_)) {}

std::optional<std::uint64_t> FqCtx::order_u64() const {
  if (order_.bit_length() > 63) return std::nullopt;
  return static_cast<std::uint64_t>(order_.to_i64());
}

std::string FqCtx::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (m_ > 1) os << "^" << m_;
  return os.str();
}

FqCtxPtr fq_ctx_new(std::uint64_t p, int m) {
  if (p > FqCtx::kMaxPrime || !is_prime_u64(p)) throw InvalidInput(std::to_string(p) + " is not a supported prime");
  if (m < 1 || m > FqCtx::kMaxDegree) throw InvalidInput("extension degree must lie in [1, 24]");
  Coeffs f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return FqCtxPtr(new FqCtx(p, f));
  constexpr std::uint64_t kSearchLimit = 50'000'000;
  for (std::uint64_t n = 0; n < kSearchLimit; ++n) {
    std::uint64_t k = n;
    for (int i = 0; i < m; ++i) {
      f[i] = k % p;
      k /= p;
    }
    if (k != 0) break;
    if (f[0] == 0) continue;
    if (is_irreducible_mod_p(f, p)) return FqCtxPtr(new FqCtx(p, f));
  }
  throw InternalError("no irreducible polynomial found for F_" + std::to_string(p) + "^" + std::to_string(m));
}

FqCtxPtr fq_ctx_from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (p > FqCtx::kMaxPrime || !is_prime_u64(p)) throw InvalidInput(std::to_string(p) + " is not a supported prime");
  for (auto& c : modulus) c %= p;
  fp::trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw InvalidInput("modulus must be monic of degree >= 1");
  if (static_cast<int>(modulus.size()) - 1 > FqCtx::kMaxDegree) throw InvalidInput("extension degree must lie in [1, 24]");
  if (!is_irreducible_mod_p(modulus, p)) throw InvalidInput("modulus is reducible");
  return FqCtxPtr(new FqCtx(p, std::move(modulus)));
}

// ---------------------------------------------------------------------------

FqElem::FqElem(FqCtxPtr ctx, std::int64_t v) : ctx_(std::move(ctx)), c_(ctx_->m(), 0) {
  const auto p = static_cast<std::int64_t>(ctx_->p());
  std::int64_t r = v % p;
  if (r < 0) r += p;
  c_[0] = static_cast<std::uint64_t>(r);
}

FqElem::FqElem(FqCtxPtr ctx, const BigInt& v) : ctx_(std::move(ctx)), c_(ctx_->m(), 0) {
  c_[0] = v.mod_u64(ctx_->p());
}

FqElem::FqElem(FqCtxPtr ctx, std::vector<std::uint64_t> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
  const auto m = static_cast<std::size_t>(ctx_->m());
  if (c_.size() > m) {
    // Reduce a longer representative modulo the field polynomial.
    Coeffs r = c_;
    for (auto& v : r) v %= ctx_->p();
    r = fp::rem(std::move(r), ctx_->modulus(), ctx_->p());
    c_ = std::move(r);
  }
  c_.resize(m, 0);
  for (auto& v : c_) v %= ctx_->p();
}

FqElem FqElem::generator(const FqCtxPtr& ctx) {
  if (ctx->m() == 1) return zero(ctx);
  Coeffs c(ctx->m(), 0);
  c[1] = 1;
  return FqElem(ctx, std::move(c));
}

FqElem FqElem::from_index(const FqCtxPtr& ctx, std::uint64_t index) {
  Coeffs c(ctx->m(), 0);
  for (int i = 0; i < ctx->m(); ++i) {
    c[i] = index % ctx->p();
    index /= ctx->p();
  }
  if (index != 0) throw InvalidInput("index exceeds field order");
  return FqElem(ctx, std::move(c));
}

std::uint64_t FqElem::index() const {
  if (!ctx_->order_u64()) throw BoundExceeded("field too large for 64-bit indices");
  std::uint64_t r = 0;
  for (int i = ctx_->m() - 1; i >= 0; --i) r = r * ctx_->p() + c_[i];
  return r;
}

bool FqElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool FqElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t v) { return v == 0; });
}

bool FqElem::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint64_t v) { return v == 0; });
}

void FqElem::check_same(const FqElem& o) const {
  if (!ctx_ || !o.ctx_) throw InvalidInput("operation on a placeholder field element");
  if (!ctx_->same_field(*o.ctx_)) throw InvalidInput("field mismatch: " + ctx_->describe() + " vs " + o.ctx_->describe());
}

FqElem FqElem::operator-() const {
  FqElem r = *this;
  const auto p = ctx_->p();
  for (auto& v : r.c_) v = v == 0 ? 0 : p - v;
  return r;
}

FqElem& FqElem::operator+=(const FqElem& o) {
  check_same(o);
  const auto p = ctx_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p) c_[i] -= p;
  }
  return *this;
}

FqElem& FqElem::operator-=(const FqElem& o) {
  check_same(o);
  const auto p = ctx_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return *this;
}

FqElem& FqElem::operator*=(const FqElem& o) {
  check_same(o);
  const auto p = ctx_->p();
  const int m = ctx_->m();
  if (m == 1) {
    c_[0] = c_[0] * o.c_[0] % p;
    return *this;
  }
  Coeffs prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
  }
  const auto& f = ctx_->modulus();
  for (int k = 2 * m - 2; k >= m; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    const std::uint64_t neg = p - c;
    for (int i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + neg * f[i]) % p;
    prod[k] = 0;
  }
  prod.resize(m);
  c_ = std::move(prod);
  return *this;
}

FqElem FqElem::inv() const {
  if (!ctx_) throw InvalidInput("operation on a placeholder field element");
  if (is_zero()) throw InvalidInput("zero has no inverse");
  const auto p = ctx_->p();
  if (ctx_->m() == 1) return FqElem(ctx_, Coeffs{invmod(c_[0], p)});
  // Extended Euclid in F_p[t]: track s with s*a = r (mod f).
  Coeffs r0 = ctx_->modulus(), r1 = c_;
  fp::trim(r1);
  Coeffs s0{}, s1{1};
  while (r1.size() > 1) {
    // q, r = divmod(r0, r1)
    Coeffs r = r0;
    Coeffs q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    const std::uint64_t li = invmod(r1.back(), p);
    while (r.size() >= r1.size()) {
      const std::uint64_t c = r.back() * li % p;
      const std::size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) r[shift + i] = (r[shift + i] + (p - c) * r1[i]) % p;
      fp::trim(r);
    }
    Coeffs qs = fp::mul(q, s1, p);
    Coeffs s(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::uint64_t a = i < s0.size() ? s0[i] : 0;
      const std::uint64_t b = i < qs.size() ? qs[i] : 0;
      s[i] = (a + p - b) % p;
    }
    fp::trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant.
  const std::uint64_t ci = invmod(r1[0], p);
  for (auto& v : s1) v = v * ci % p;
  return FqElem(ctx_, std::move(s1));
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r = one(ctx_);
  FqElem b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FqElem FqElem::pow(const BigInt& e) const {
  if (e.sign() < 0) return inv().pow(-e);
  FqElem r = one(ctx_);
  const std::size_t n = e.bit_length();
  for (std::size_t i = n; i-- > 0;) {
    r *= r;
    if (e.bit(i)) r *= *this;
  }
  return r;
}

FqElem FqElem::frobenius(int k) const {
  FqElem r = *this;
  for (int i = 0; i < k; ++i) r = r.pow(ctx_->p());
  return r;
}

bool operator==(const FqElem& a, const FqElem& b) {
  if (!a.ctx_ || !b.ctx_) return !a.ctx_ && !b.ctx_;
  return a.ctx_->same_field(*b.ctx_) && a.c_ == b.c_;
}

bool operator<(const FqElem& a, const FqElem& b) {
  a.check_same(b);
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string FqElem::to_string() const {
  if (!ctx_) return "<none>";
  if (ctx_->m() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i];
    os << "t";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FqElem& x) { return os << x.to_string(); }

std::vector<FqElem> fq_elements(const FqCtxPtr& ctx, std::uint64_t limit) {
  const auto q = ctx->order_u64();
  if (!q || *q > limit) throw BoundExceeded("field " + ctx->describe() + " too large to enumerate");
  std::vector<FqElem> out;
  out.reserve(*q);
  for (std::uint64_t i = 0; i < *q; ++i) out.push_back(FqElem::from_index(ctx, i));
  return out;
}

bool is_square(const FqElem& x) {
  if (x.is_zero() || x.ctx()->p() == 2) return true;
  return x.pow((x.ctx()->order() - BigInt(1)) / BigInt(2)).is_one();
}

std::optional<std::pair<FqElem, FqElem>> fq_sqrt(const FqElem& x) {
  const FqCtxPtr& ctx = x.ctx();
  if (x.is_zero()) return std::make_pair(x, x);
  const BigInt q = ctx->order();
  if (ctx->p() == 2) {
    FqElem r = x.pow(q / BigInt(2));
    return std::make_pair(r, r);
  }
  if (!is_square(x)) return std::nullopt;
  // q - 1 = 2^s * t with t odd
  BigInt t = q - BigInt(1);
  int s = 0;
  while (!t.bit(0)) {
    t = t / BigInt(2);
    ++s;
  }
  // Any non-residue works; the returned pair is sorted. For even m every
  // prime-field element is a square, so start past the prime field.
  FqElem z;
  for (std::uint64_t n = ctx->m() % 2 == 0 ? ctx->p() : 2;; ++n) {
    FqElem cand = FqElem::from_index(ctx, n);
    if (!is_square(cand)) {
      z = cand;
      break;
    }
  }
  int mm = s;
  FqElem c = z.pow(t);
  FqElem tt = x.pow(t);
  FqElem r = x.pow((t + BigInt(1)) / BigInt(2));
  while (!tt.is_one()) {
    int i = 0;
    FqElem probe = tt;
    while (!probe.is_one()) {
      probe *= probe;
      ++i;
    }
    FqElem b = c;
    for (int k = 0; k < mm - i - 1; ++k) b *= b;
    mm = i;
    c = b * b;
    tt *= c;
    r *= b;
  }
  FqElem other = -r;
  if (other < r) std::swap(r, other);
  return std::make_pair(r, other);
}

FqElem quad_reduce_mod_p(const QuadInt& x, const FqCtxPtr& ctx) {
  FqElem a(ctx, x.a());
  if (x.b().is_zero()) return a;
  auto roots = fq_sqrt(FqElem(ctx, x.d()));
  if (!roots) {
    throw InvalidInput("sqrt(" + std::to_string(x.d()) + ") has no residue in " + ctx->describe());
  }
  return a + FqElem(ctx, x.b()) * roots->first;
}

}  // namespace hyperlift
