#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hyperlift/bigint.hpp"

namespace hyperlift {

/// Element a + b*sqrt(d) of the quadratic ring Z[sqrt d].
///
/// d must be squarefree and different from 1. d = 0 denotes the plain
/// integers; any value with b = 0 is treated as an integer and combines
/// with any radicand. Mixing two genuinely irrational values with
/// different radicands throws InvalidInput.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadInt(BigInt a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadInt(BigInt a, BigInt b, std::int64_t d);

  /// sqrt(d) itself.
  static QuadInt sqrt_of(std::int64_t d) { return QuadInt(BigInt(0), BigInt(1), d); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_integer() const { return b_.is_zero(); }
  /// a - b*sqrt(d).
  QuadInt conjugate() const;
  /// a^2 - d*b^2.
  BigInt norm() const;

  QuadInt operator-() const;
  QuadInt& operator+=(const QuadInt& o);
  QuadInt& operator-=(const QuadInt& o);
  QuadInt& operator*=(const QuadInt& o);
  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadInt& v);

 private:
  static std::int64_t merge_radicand(const QuadInt& x, const QuadInt& y);

  BigInt a_;
  BigInt b_;
  std::int64_t d_ = 0;
};

/// True when d has no square factor > 1 (0 and -1 count as squarefree).
bool is_squarefree_integer(std::int64_t d);

}  // namespace hyperlift
