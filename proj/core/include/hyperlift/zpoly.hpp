#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlift/fq_poly.hpp"
#include "hyperlift/quadint.hpp"

namespace hyperlift {

/// Polynomial with coefficients in Z or Z[sqrt d], low-to-high, no
/// trailing zeros. The radicand is shared by every coefficient; integer
/// polynomials have radicand 0.
class CharZeroPoly {
 public:
  CharZeroPoly() = default;
  explicit CharZeroPoly(std::vector<QuadInt> coeffs);

  static CharZeroPoly from_ints(const std::vector<std::int64_t>& coeffs);
  static CharZeroPoly constant(const QuadInt& c) { return CharZeroPoly({c}); }
  /// c * x^k
  static CharZeroPoly monomial(const QuadInt& c, std::size_t k);
  static CharZeroPoly x() { return monomial(QuadInt(1), 1); }

  const std::vector<QuadInt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// 0 when every coefficient is an integer.
  std::int64_t radicand() const { return d_; }
  QuadInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadInt(); }
  const QuadInt& leading() const;

  CharZeroPoly derivative() const;
  CharZeroPoly pow(unsigned e) const;

  CharZeroPoly operator-() const;
  CharZeroPoly& operator+=(const CharZeroPoly& o);
  CharZeroPoly& operator-=(const CharZeroPoly& o);
  CharZeroPoly& operator*=(const CharZeroPoly& o);
  friend CharZeroPoly operator+(CharZeroPoly a, const CharZeroPoly& b) { return a += b; }
  friend CharZeroPoly operator-(CharZeroPoly a, const CharZeroPoly& b) { return a -= b; }
  friend CharZeroPoly operator*(CharZeroPoly a, const CharZeroPoly& b) { return a *= b; }
  friend bool operator==(const CharZeroPoly& a, const CharZeroPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CharZeroPoly& f);

 private:
  void normalize();

  std::vector<QuadInt> c_;
  std::int64_t d_ = 0;
};

CharZeroPoly compose(const CharZeroPoly& f, const CharZeroPoly& g);

/// Coefficient-wise reduction into ctx. Throws InvalidInput when a
/// coefficient involves sqrt(d) and t^2 - d has no root in ctx.
FqPoly reduce_mod_p(const CharZeroPoly& f, const FqCtxPtr& ctx);

/// Smallest canonical field F_p or F_{p^2} in which f can be reduced.
FqCtxPtr reduction_field(const CharZeroPoly& f, std::uint64_t p);

/// Squarefreeness over Q(sqrt d), decided by reductions modulo large
/// primes: one squarefree reduction certifies it, and a run of failing
/// primes whose product exceeds the Hadamard bound on the discriminant's
/// norm certifies the converse. Constants count as squarefree.
bool is_squarefree_char0(const CharZeroPoly& f);

}  // namespace hyperlift
