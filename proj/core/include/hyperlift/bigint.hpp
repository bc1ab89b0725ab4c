#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlift {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over boost::multiprecision::cpp_int so the rest of the
/// library depends on one small interface. Zero is always stored with a
/// non-negative sign.
class BigInt {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(Rep v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws InvalidInput.
  static BigInt from_string(std::string_view s);

  std::string to_string() const;
  const Rep& rep() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  BigInt abs() const { return BigInt(boost::multiprecision::abs(v_)); }

  /// Residue in [0, m). m must be positive.
  std::uint64_t mod_u64(std::uint64_t m) const;
  /// Exact conversion, throws InvalidInput when out of range.
  std::int64_t to_i64() const;
  bool fits_i64() const;

  /// Truncating division; throws InvalidInput on division by zero.
  BigInt divexact(const BigInt& d) const;
  bool divisible_by(const BigInt& d) const;
  BigInt pow(unsigned e) const;
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;

  BigInt operator-() const { return BigInt(Rep(-v_)); }
  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  /// Floor-free truncating quotient and remainder, as in C++ integers.
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  Rep v_;
};

}  // namespace hyperlift
