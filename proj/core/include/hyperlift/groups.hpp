#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperlift/error.hpp"

namespace hyperlift {

/// Finite group given by its full multiplication table on indices 0..n-1.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 512;

  /// Validates the table (Latin square, identity, inverses). Associativity
  /// is checked separately by is_associative().
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const { return order_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;

  bool is_abelian() const;
  bool is_associative() const;
  /// Smallest subgroup containing gens, as a sorted element list.
  std::vector<int> generated(const std::vector<int>& gens) const;
  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;
  /// Induced group on a subset closed under the product.
  FiniteGroup restrict_to(const std::vector<int>& elems) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<int> order_;
};

/// Cayley table of a finite set closed under op. T needs operator< and
/// operator==. Throws InvalidInput when the set is not closed or has no
/// identity.
template <class T, class Op>
FiniteGroup cayley_from_elements(std::vector<T> elems, Op op, std::vector<std::string> labels = {}) {
  const std::size_t n = elems.size();
  if (n == 0) throw InvalidInput("empty element set");
  if (n > static_cast<std::size_t>(FiniteGroup::kMaxOrder)) throw BoundExceeded("group too large for a Cayley table");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  std::vector<T> sorted;
  std::vector<std::string> sorted_labels;
  sorted.reserve(n);
  for (auto i : perm) {
    sorted.push_back(elems[i]);
    if (!labels.empty()) sorted_labels.push_back(labels[i]);
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (sorted[i] == sorted[i - 1]) throw InvalidInput("duplicate group elements");
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T z = op(sorted[i], sorted[j]);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), z);
      if (it == sorted.end() || !(*it == z)) throw InvalidInput("element set is not closed under the operation");
      table[i][j] = static_cast<int>(it - sorted.begin());
    }
  }
  return FiniteGroup(std::move(table), std::move(sorted_labels));
}

FiniteGroup cyclic_group(int n);
/// Dihedral group of order 2n (n >= 1).
FiniteGroup dihedral_group(int n);
/// Group of all permutations of {0..k-1} with the given parity filter.
FiniteGroup symmetric_group(int k);
FiniteGroup alternating_group(int k);
/// SL_2(F_p) or GL_2(F_p) for a small prime p.
FiniteGroup matrix_group(int p, bool special);
/// Quaternion group of order 8.
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// g / N for a normal subgroup N (sorted element list). Throws InvalidInput
/// when N is not a normal subgroup.
FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal);

struct Fingerprint {
  int order = 0;
  bool abelian = false;
  std::map<int, int> order_histogram;
  int center_order = 0;
  int derived_order = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const FiniteGroup& g);

/// An isomorphism g1 -> g2 as an index map, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2);
bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2);
/// True when phi is a bijective homomorphism g1 -> g2.
bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& phi);

/// Every subgroup as a sorted element list, ordered by size then elements.
std::vector<std::vector<int>> subgroups(const FiniteGroup& g);
/// Subgroups H with p | |H|, normal Sylow p-subgroup and cyclic quotient.
std::vector<std::vector<int>> cyclic_by_p_subgroups(const FiniteGroup& g, int p);

}  // namespace hyperlift
