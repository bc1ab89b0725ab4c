#include "hyperlift/quadint.hpp"

#include <ostream>
#include <sstream>

#include "hyperlift/error.hpp"

namespace hyperlift {

bool is_squarefree_integer(std::int64_t d) {
  if (d == 0) return true;
  std::uint64_t n = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) return false;
    while (n % k == 0) n /= k;
  }
  return true;
}

QuadInt::QuadInt(BigInt a, BigInt b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 1) throw InvalidInput("sqrt(1) is not a valid radicand");
  if (!is_squarefree_integer(d_)) throw InvalidInput("radicand " + std::to_string(d_) + " is not squarefree");
  if (d_ == 0) b_ = BigInt(0);
}

std::int64_t QuadInt::merge_radicand(const QuadInt& x, const QuadInt& y) {
  if (x.b_.is_zero()) return y.b_.is_zero() ? (x.d_ != 0 ? x.d_ : y.d_) : y.d_;
  if (y.b_.is_zero() || x.d_ == y.d_) return x.d_;
  throw InvalidInput("mixing sqrt(" + std::to_string(x.d_) + ") and sqrt(" + std::to_string(y.d_) + ")");
}

QuadInt QuadInt::conjugate() const { return QuadInt(a_, -b_, d_); }

BigInt QuadInt::norm() const { return a_ * a_ - BigInt(d_) * b_ * b_; }

QuadInt QuadInt::operator-() const {
  QuadInt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
  d_ = merge_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
  d_ = merge_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
  const std::int64_t d = merge_radicand(*this, o);
  BigInt a = a_ * o.a_ + BigInt(d) * b_ * o.b_;
  BigInt b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

bool operator==(const QuadInt& x, const QuadInt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_.is_zero() || x.d_ == y.d_;
}

std::string QuadInt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::ostringstream os;
  if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? "+" : "-");
  else if (b_.sign() < 0) os << "-";
  const BigInt mag = b_.abs();
  if (mag != BigInt(1)) os << mag << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& v) { return os << v.to_string(); }

}  // namespace hyperlift
