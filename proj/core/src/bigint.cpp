#include "hyperlift/bigint.hpp"

#include <limits>
#include <ostream>

#include "hyperlift/error.hpp"

namespace hyperlift {

BigInt BigInt::from_string(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw InvalidInput("empty integer literal");
  Rep v = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') throw InvalidInput("malformed integer literal: " + std::string(s));
    v = v * 10 + (c - '0');
  }
  return BigInt(neg ? Rep(-v) : v);
}

std::string BigInt::to_string() const { return v_.str(); }

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  if (m == 0) throw InvalidInput("modulus must be positive");
  Rep r = v_ % m;
  if (r.sign() < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

bool BigInt::fits_i64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t BigInt::to_i64() const {
  if (!fits_i64()) throw InvalidInput("integer does not fit in 64 bits: " + to_string());
  return v_.convert_to<std::int64_t>();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return BigInt(BigInt::Rep(a.v_ / b.v_));
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return BigInt(BigInt::Rep(a.v_ % b.v_));
}

BigInt BigInt::divexact(const BigInt& d) const {
  if (!divisible_by(d)) throw InvalidInput(to_string() + " is not divisible by " + d.to_string());
  return *this / d;
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) return is_zero();
  return Rep(v_ % d.v_).is_zero();
}

BigInt BigInt::pow(unsigned e) const { return BigInt(Rep(boost::multiprecision::pow(v_, e))); }

std::size_t BigInt::bit_length() const {
  if (v_.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v_)) + 1;
}

bool BigInt::bit(std::size_t i) const { return boost::multiprecision::bit_test(boost::multiprecision::abs(v_), i); }

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.v_; }

}  // namespace hyperlift
