#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hyperlift/error.hpp"
#include "hyperlift/fq.hpp"

using namespace hyperlift;

namespace {

// Naive F_p[t] remainder, low-to-high, no trailing zeros in b.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b, std::uint64_t p) {
  const std::uint64_t lead_inv = [&] {
    for (std::uint64_t x = 1; x < p; ++x)
      if (x * b.back() % p == 1) return x;
    return std::uint64_t{0};
  }();
  while (a.size() >= b.size()) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p * p - c * b[i] % p) % p;
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool brute_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint64_t> g(d + 1);
      std::uint64_t r = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = r % p;
        r /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> first_irreducible(std::uint64_t p, int m) {
  std::uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> f(m + 1);
    std::uint64_t r = idx;
    for (int i = 0; i < m; ++i) {
      f[i] = r % p;
      r /= p;
    }
    f[m] = 1;
    if (brute_irreducible(f, p)) return f;
  }
  return {};
}

FqElem random_elem(const FqCtxPtr& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, k->p() - 1);
  std::vector<std::uint64_t> c(k->m());
  for (auto& x : c) x = d(rng);
  return FqElem(k, c);
}

}  // namespace

TEST(FqCtx, CanonicalModulusIsFirstIrreducible) {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4},
                                                                {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {3, 6}}) {
    EXPECT_EQ(fq_ctx_new(p, m)->modulus(), first_irreducible(p, m)) << "F_" << p << "^" << m;
  }
}

TEST(FqCtx, RabinAgreesWithTrialDivision) {
  std::mt19937_64 rng(3);
  for (std::uint64_t p : {2, 3, 5}) {
    for (int m = 2; m <= 6; ++m) {
      for (int i = 0; i < 40; ++i) {
        std::vector<std::uint64_t> f(m + 1);
        for (auto& c : f) c = rng() % p;
        f[m] = 1;
        EXPECT_EQ(is_irreducible_mod_p(f, p), brute_irreducible(f, p));
      }
    }
  }
}

TEST(FqCtx, RejectsBadParameters) {
  EXPECT_THROW(fq_ctx_new(4, 1), InvalidInput);
  EXPECT_THROW(fq_ctx_new(1, 1), InvalidInput);
  EXPECT_THROW(fq_ctx_new(3, 0), InvalidInput);
  EXPECT_THROW(fq_ctx_new(3, FqCtx::kMaxDegree + 1), InvalidInput);
  EXPECT_THROW(fq_ctx_from_modulus(3, {2, 0, 1}), InvalidInput);
  EXPECT_NO_THROW(fq_ctx_from_modulus(3, {1, 0, 1}));
}

TEST(FqCtx, SameFieldByValue) {
  EXPECT_TRUE(fq_ctx_new(3, 2)->same_field(*fq_ctx_new(3, 2)));
  EXPECT_FALSE(fq_ctx_new(3, 2)->same_field(*fq_ctx_new(3, 1)));
  EXPECT_EQ(fq_ctx_new(3, 2)->describe(), "F_3^2");
  EXPECT_EQ(fq_ctx_new(7, 1)->order(), BigInt(7));
}

TEST(FqElem, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 2}, {3, 3}, {7, 3}, {2, 5}, {13, 1}}) {
    const auto k = fq_ctx_new(p, m);
    for (int i = 0; i < 200; ++i) {
      const FqElem a = random_elem(k, rng), b = random_elem(k, rng), c = random_elem(k, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, FqElem::zero(k));
      if (!a.is_zero()) EXPECT_EQ(a * a.inv(), FqElem::one(k));
      EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
      EXPECT_EQ((a * b).frobenius(), a.frobenius() * b.frobenius());
      EXPECT_EQ(a.frobenius(m), a);
      EXPECT_EQ(a.pow(*k->order_u64()), a);
    }
  }
}

TEST(FqElem, EnumerationAndIndexRoundTrip) {
  const auto k = fq_ctx_new(3, 3);
  const auto all = fq_elements(k);
  ASSERT_EQ(all.size(), 27u);
  std::set<std::uint64_t> seen;
  for (const auto& x : all) {
    seen.insert(x.index());
    EXPECT_EQ(FqElem::from_index(k, x.index()), x);
  }
  EXPECT_EQ(seen.size(), 27u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(FqElem, SquaresAndRoots) {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {5, 1}, {7, 2}, {13, 1}, {17, 2}, {2, 3}}) {
    const auto k = fq_ctx_new(p, m);
    std::set<FqElem> squares;
    for (const auto& x : fq_elements(k)) squares.insert(x * x);
    for (const auto& x : fq_elements(k)) {
      EXPECT_EQ(is_square(x), squares.count(x) == 1);
      const auto r = fq_sqrt(x);
      ASSERT_EQ(r.has_value(), squares.count(x) == 1);
      if (r) {
        EXPECT_EQ(r->first * r->first, x);
        EXPECT_EQ(r->second, -r->first);
      }
    }
  }
}

TEST(FqElem, MismatchedFieldsRejected) {
  const FqElem a(fq_ctx_new(3, 2), 1), b(fq_ctx_new(5, 1), 1);
  EXPECT_THROW(a + b, InvalidInput);
  EXPECT_THROW(FqElem::zero(fq_ctx_new(5, 1)).inv(), InvalidInput);
}

TEST(FieldEmbedding, IsAnInjectiveHomomorphism) {
  std::mt19937_64 rng(9);
  for (auto [p, m, n] : std::vector<std::tuple<std::uint64_t, int, int>>{{3, 2, 4}, {3, 2, 6}, {5, 2, 4}, {2, 2, 4},
                                                                         {7, 1, 2}, {3, 3, 6}}) {
    const auto src = fq_ctx_new(p, m), dst = fq_ctx_new(p, n);
    const FieldEmbedding e(src, dst);
    std::set<FqElem> image;
    for (const auto& x : fq_elements(src)) image.insert(e(x));
    EXPECT_EQ(image.size(), fq_elements(src).size());
    for (int i = 0; i < 100; ++i) {
      const FqElem a = random_elem(src, rng), b = random_elem(src, rng);
      EXPECT_EQ(e(a + b), e(a) + e(b));
      EXPECT_EQ(e(a * b), e(a) * e(b));
    }
  }
}

TEST(FieldEmbedding, RejectsNonSubfield) {
  EXPECT_THROW(FieldEmbedding(fq_ctx_new(3, 2), fq_ctx_new(3, 3)), InvalidInput);
  EXPECT_THROW(FieldEmbedding(fq_ctx_new(3, 2), fq_ctx_new(5, 4)), InvalidInput);
}

TEST(QuadReduce, SqrtResidues) {
  const auto f5 = fq_ctx_new(5, 1);
  const FqElem i = quad_reduce_mod_p(QuadInt::sqrt_of(-1), f5);
  EXPECT_EQ(i * i, FqElem(f5, -1));
  EXPECT_THROW(quad_reduce_mod_p(QuadInt::sqrt_of(-1), fq_ctx_new(3, 1)), InvalidInput);
  const auto f9 = fq_ctx_new(3, 2);
  const FqElem j = quad_reduce_mod_p(QuadInt::sqrt_of(-1), f9);
  EXPECT_EQ(j * j, FqElem(f9, -1));
  EXPECT_EQ(quad_reduce_mod_p(QuadInt(BigInt(1), BigInt(2), -3), fq_ctx_new(3, 1)), FqElem(fq_ctx_new(3, 1), 1));
}
