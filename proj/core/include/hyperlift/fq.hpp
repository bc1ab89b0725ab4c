#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperlift/bigint.hpp"
#include "hyperlift/quadint.hpp"

namespace hyperlift {

bool is_prime_u64(std::uint64_t n);

class FqCtx;
using FqCtxPtr = std::shared_ptr<const FqCtx>;

/// The finite field F_{p^m} = F_p[t] / (modulus).
///
/// Contexts are immutable and shared by every element living in them. Two
/// contexts describe the same field when (p, m, modulus) agree, even if they
/// are distinct objects.
class FqCtx {
 public:
  /// Largest supported characteristic; keeps coefficient products in 64 bits.
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31) - 1;
  static constexpr int kMaxDegree = 24;

  std::uint64_t p() const { return p_; }
  int m() const { return m_; }
  /// Monic modulus, coefficients low-to-high, size m + 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  /// p^m.
  const BigInt& order() const { return order_; }
  /// p^m when it fits in 64 bits.
  std::optional<std::uint64_t> order_u64() const;

  bool same_field(const FqCtx& o) const {
    return this == &o || (p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_);
  }

  std::string describe() const;

 private:
  friend FqCtxPtr fq_ctx_new(std::uint64_t p, int m);
  friend FqCtxPtr fq_ctx_from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);
  FqCtx(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t p_;
  int m_;
  std::vector<std::uint64_t> modulus_;
  BigInt order_;
};

/// Canonical context for F_{p^m}: the modulus is the smallest monic
/// irreducible of degree m, where candidates are ordered by the integer
/// sum c_i p^i of their lower coefficients (c_0 least significant). For
/// m = 1 the modulus is t. Deterministic.
FqCtxPtr fq_ctx_new(std::uint64_t p, int m);

/// Context with an explicit modulus (monic, low-to-high). The modulus is
/// checked for irreducibility.
FqCtxPtr fq_ctx_from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus);

/// Rabin irreducibility test for a monic polynomial over F_p.
bool is_irreducible_mod_p(std::span<const std::uint64_t> monic, std::uint64_t p);

/// Element of F_{p^m}, stored as its coefficient vector in the polynomial
/// basis 1, t, ..., t^{m-1}.
///
/// A default-constructed element has no field and is only a placeholder;
/// every arithmetic operation requires both operands to share a field.
class FqElem {
 public:
  FqElem() = default;
  FqElem(FqCtxPtr ctx, std::int64_t v);
  FqElem(FqCtxPtr ctx, const BigInt& v);
  FqElem(FqCtxPtr ctx, std::vector<std::uint64_t> coeffs);

  static FqElem zero(const FqCtxPtr& ctx) { return FqElem(ctx, 0); }
  static FqElem one(const FqCtxPtr& ctx) { return FqElem(ctx, 1); }
  /// The class of t. For m = 1 this is 0, the root of the modulus t.
  static FqElem generator(const FqCtxPtr& ctx);
  /// Inverse of index().
  static FqElem from_index(const FqCtxPtr& ctx, std::uint64_t index);

  const FqCtxPtr& ctx() const { return ctx_; }
  bool valid() const { return ctx_ != nullptr; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  /// sum c_i p^i; the canonical order on a field is the order of indices.
  /// Requires the field order to fit in 64 bits.
  std::uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field.
  bool in_prime_field() const;

  FqElem operator-() const;
  FqElem& operator+=(const FqElem& o);
  FqElem& operator-=(const FqElem& o);
  FqElem& operator*=(const FqElem& o);
  FqElem& operator/=(const FqElem& o) { return *this *= o.inv(); }
  friend FqElem operator+(FqElem a, const FqElem& b) { return a += b; }
  friend FqElem operator-(FqElem a, const FqElem& b) { return a -= b; }
  friend FqElem operator*(FqElem a, const FqElem& b) { return a *= b; }
  friend FqElem operator/(FqElem a, const FqElem& b) { return a /= b; }

  /// Throws InvalidInput for zero.
  FqElem inv() const;
  FqElem pow(std::uint64_t e) const;
  FqElem pow(const BigInt& e) const;
  /// x^(p^k).
  FqElem frobenius(int k = 1) const;

  friend bool operator==(const FqElem& a, const FqElem& b);
  /// Canonical (index) order; both operands must share a field.
  friend bool operator<(const FqElem& a, const FqElem& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const FqElem& x);

 private:
  void check_same(const FqElem& o) const;

  FqCtxPtr ctx_;
  std::vector<std::uint64_t> c_;
};

/// Every element of a small field in canonical order. Throws BoundExceeded
/// when the field has more than `limit` elements.
std::vector<FqElem> fq_elements(const FqCtxPtr& ctx, std::uint64_t limit = 1u << 22);

/// Both square roots of x, smaller index first, or nullopt for non-squares.
/// Uses Tonelli-Shanks for odd p and the inverse Frobenius for p = 2.
std::optional<std::pair<FqElem, FqElem>> fq_sqrt(const FqElem& x);

bool is_square(const FqElem& x);

/// Reduces a + b*sqrt(d) into ctx, sending sqrt(d) to the canonical
/// (smallest-index) root of t^2 - d. Throws InvalidInput when t^2 - d has no
/// root in ctx.
FqElem quad_reduce_mod_p(const QuadInt& x, const FqCtxPtr& ctx);

/// Ring embedding F_{p^a} -> F_{p^b} for a | b. The generator of the source
/// is sent to the smallest-index root of the source modulus in the target.
class FieldEmbedding {
 public:
  FieldEmbedding(FqCtxPtr src, FqCtxPtr dst);

  const FqCtxPtr& src() const { return src_; }
  const FqCtxPtr& dst() const { return dst_; }
  const FqElem& generator_image() const { return gen_image_; }

  FqElem operator()(const FqElem& x) const;

 private:
  FqCtxPtr src_;
  FqCtxPtr dst_;
  FqElem gen_image_;
  std::vector<FqElem> powers_;
};

FqElem fq_embed(const FqCtxPtr& src, const FqCtxPtr& dst, const FqElem& x);

}  // namespace hyperlift
