#include "hyperlift/groups.hpp"

#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace hyperlift {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw InvalidInput("empty group table");
  if (n > kMaxOrder) throw BoundExceeded("group order above " + std::to_string(kMaxOrder));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) throw InvalidInput("label count mismatch");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("table is not square");
    std::vector<char> seen(n, 0);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) throw InvalidInput("table is not a Latin square");
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[table_[i][j]]) throw InvalidInput("table is not a Latin square");
      seen[table_[i][j]] = 1;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidInput("table has no identity");
  inv_.assign(n, -1);
  order_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) {
        if (table_[b][a] != identity_) throw InvalidInput("one-sided inverse");
        inv_[a] = b;
        break;
      }
    }
    int k = 1;
    for (int x = a; x != identity_; x = table_[x][a]) {
      if (++k > n + 1) throw InvalidInput("element of infinite order in table");
    }
    order_[a] = k;
  }
}

std::string FiniteGroup::label(int a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

bool FiniteGroup::is_associative() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = table_[a][b];
      for (int c = 0; c < n; ++c)
        if (table_[ab][c] != table_[a][table_[b][c]]) return false;
    }
  return true;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<char> in(order(), 0);
  std::vector<int> out{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int g : gens) {
      const int x = table_[out[i]][g];
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  std::set<int> comms;
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) comms.insert(table_[table_[inv_[a]][inv_[b]]][table_[a][b]]);
  return generated(std::vector<int>(comms.begin(), comms.end()));
}

FiniteGroup FiniteGroup::restrict_to(const std::vector<int>& elems) const {
  std::vector<int> pos(order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!labels_.empty()) labels.push_back(labels_[elems[i]]);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const int v = pos[table_[elems[i]][elems[j]]];
      if (v < 0) throw InvalidInput("subset is not closed");
      t[i][j] = v;
    }
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw InvalidInput("dihedral parameter must be positive");
  // r^i s^e -> index i + n*e; s r = r^-1 s.
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int i = a % n, e = a / n, j = b % n, f = b / n;
      const int k = e == 0 ? (i + j) % n : ((i - j) % n + n) % n;
      t[a][b] = k + n * (e ^ f);
    }
  return FiniteGroup(std::move(t));
}

namespace {

using Perm = std::vector<int>;

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool even_perm(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 == 0;
}

std::string perm_label(const Perm& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('1' + v);
  return s;
}

FiniteGroup perm_group(int k, bool only_even) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> els;
  std::vector<std::string> labels;
  do {
    if (!only_even || even_perm(p)) {
      els.push_back(p);
      labels.push_back(perm_label(p));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return cayley_from_elements(els, compose_perm, labels);
}

}  // namespace

FiniteGroup symmetric_group(int k) { return perm_group(k, false); }
FiniteGroup alternating_group(int k) { return perm_group(k, true); }

FiniteGroup matrix_group(int p, bool special) {
  using M = std::array<int, 4>;
  std::vector<M> els;
  std::vector<std::string> labels;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          const int det = ((a * d - b * c) % p + p) % p;
          if (det == 0 || (special && det != 1)) continue;
          els.push_back({a, b, c, d});
          labels.push_back("[" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
                           std::to_string(d) + "]");
        }
  auto op = [p](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
             (x[2] * y[1] + x[3] * y[3]) % p};
  };
  return cayley_from_elements(els, op, labels);
}

FiniteGroup quaternion_group() {
  // +-1, +-i, +-j, +-k as (sign, unit) with unit in {1,i,j,k} = 0..3.
  using Q = std::array<int, 2>;
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Q> els;
  std::vector<std::string> labels;
  const char* names = "1ijk";
  for (int s : {1, -1})
    for (int u = 0; u < 4; ++u) {
      els.push_back({s, u});
      labels.push_back(std::string(s < 0 ? "-" : "") + names[u]);
    }
  auto op = [](const Q& x, const Q& y) { return Q{x[0] * y[0] * kSign[x[1]][y[1]], kUnit[x[1]][y[1]]}; };
  return cayley_from_elements(els, op, labels);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order(), m = b.order();
  if (n * m > FiniteGroup::kMaxOrder) throw BoundExceeded("direct product too large");
  std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
  std::vector<std::string> labels;
  for (int x = 0; x < n * m; ++x) {
    labels.push_back("(" + a.label(x / m) + "," + b.label(x % m) + ")");
    for (int y = 0; y < n * m; ++y) t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  const int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : normal) {
      const int x = g.mul(a, h);
      if (coset[x] >= 0) throw InvalidInput("not a subgroup");
      coset[x] = id;
    }
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = coset[g.mul(reps[i], reps[j])];
  // Well-definedness: left cosets must equal right cosets.
  for (int a = 0; a < n; ++a)
    for (int h : normal)
      if (coset[g.mul(h, a)] != coset[a]) throw InvalidInput("subgroup is not normal");
  return FiniteGroup(std::move(t));
}

// ---------------------------------------------------------------------------

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << order << ";" << (abelian ? "ab" : "nab") << ";";
  bool first = true;
  for (const auto& [k, v] : order_histogram) {
    os << (first ? "" : ",") << k << ":" << v;
    first = false;
  }
  os << ";Z" << center_order << ";D" << derived_order;
  return os.str();
}

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  f.abelian = g.is_abelian();
  for (int a = 0; a < g.order(); ++a) ++f.order_histogram[g.element_order(a)];
  f.center_order = static_cast<int>(g.center().size());
  f.derived_order = f.abelian ? 1 : static_cast<int>(g.derived_subgroup().size());
  return f;
}

bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2, const std::vector<int>& phi) {
  const int n = g1.order();
  if (n != g2.order() || static_cast<int>(phi.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[g1.mul(a, b)] != g2.mul(phi[a], phi[b])) return false;
  return true;
}

namespace {

// A small generating set: one element if cyclic, else a pair, else greedy.
// Elements of rarer order are preferred to shrink the image search.
std::vector<int> small_generating_set(const FiniteGroup& g) {
  const int n = g.order();
  std::map<int, int> hist;
  for (int a = 0; a < n; ++a) ++hist[g.element_order(a)];
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    const int ha = hist[g.element_order(a)], hb = hist[g.element_order(b)];
    if (ha != hb) return ha < hb;
    return g.element_order(a) > g.element_order(b);
  });
  if (n == 1) return {};
  for (int a : cand)
    if (g.element_order(a) == n) return {a};
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j)
      if (static_cast<int>(g.generated({cand[i], cand[j]}).size()) == n) return {cand[i], cand[j]};
  std::vector<int> gens;
  std::vector<int> cur = {g.identity()};
  for (int a : cand) {
    if (std::binary_search(cur.begin(), cur.end(), a)) continue;
    gens.push_back(a);
    cur = g.generated(gens);
    if (static_cast<int>(cur.size()) == n) break;
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n = g1.order();
  if (n != g2.order()) return std::nullopt;
  if (!(fingerprint(g1) == fingerprint(g2))) return std::nullopt;
  const std::vector<int> gens = small_generating_set(g1);
  const int k = static_cast<int>(gens.size());
  // Spanning tree: element = parent * gens[via].
  std::vector<int> parent(n, -1), via(n, -1), bfs{g1.identity()};
  std::vector<char> seen(n, 0);
  seen[g1.identity()] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int s = 0; s < k; ++s) {
      const int x = g1.mul(bfs[i], gens[s]);
      if (!seen[x]) {
        seen[x] = 1;
        parent[x] = bfs[i];
        via[x] = s;
        bfs.push_back(x);
      }
    }
  std::vector<std::vector<int>> cands(k);
  for (int s = 0; s < k; ++s)
    for (int b = 0; b < n; ++b)
      if (g2.element_order(b) == g1.element_order(gens[s])) cands[s].push_back(b);
  std::vector<int> img(k);
  std::vector<int> phi(n);
  auto try_images = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), -1);
    std::vector<char> used(n, 0);
    phi[g1.identity()] = g2.identity();
    used[g2.identity()] = 1;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const int x = bfs[i];
      const int v = g2.mul(phi[parent[x]], img[via[x]]);
      if (used[v]) return false;
      used[v] = 1;
      phi[x] = v;
    }
    for (int a = 0; a < n; ++a)
      for (int s = 0; s < k; ++s)
        if (phi[g1.mul(a, gens[s])] != g2.mul(phi[a], img[s])) return false;
    return true;
  };
  // Depth-first over generator images, pruning pairs by product order.
  std::vector<std::size_t> idx(k, 0);
  int depth = 0;
  if (k == 0) return std::vector<int>{g2.identity()};
  while (depth >= 0) {
    if (idx[depth] >= cands[depth].size()) {
      idx[depth] = 0;
      --depth;
      if (depth >= 0) ++idx[depth];
      continue;
    }
    img[depth] = cands[depth][idx[depth]];
    bool ok = true;
    for (int s = 0; s < depth && ok; ++s)
      ok = g2.element_order(g2.mul(img[s], img[depth])) == g1.element_order(g1.mul(gens[s], gens[depth]));
    if (!ok) {
      ++idx[depth];
      continue;
    }
    if (depth + 1 < k) {
      ++depth;
      continue;
    }
    if (try_images()) return phi;
    ++idx[depth];
  }
  return std::nullopt;
}

bool is_isomorphic(const FiniteGroup& g1, const FiniteGroup& g2) { return find_isomorphism(g1, g2).has_value(); }

// ---------------------------------------------------------------------------

namespace {

using Bits = std::array<std::uint64_t, FiniteGroup::kMaxOrder / 64>;

Bits to_bits(const std::vector<int>& elems) {
  Bits b{};
  for (int x : elems) b[x / 64] |= 1ULL << (x % 64);
  return b;
}

bool has(const Bits& b, int x) { return (b[x / 64] >> (x % 64)) & 1ULL; }

}  // namespace

std::vector<std::vector<int>> subgroups(const FiniteGroup& g) {
  if (g.order() > 256) throw BoundExceeded("subgroup enumeration limited to order 256");
  struct Sub {
    std::vector<int> elems;
    std::vector<int> gens;
    Bits bits;
  };
  std::set<Bits> known;
  std::vector<Sub> all;
  std::vector<int> cyclic_gens;
  for (int a = 0; a < g.order(); ++a) {
    auto elems = g.generated({a});
    Bits b = to_bits(elems);
    if (known.insert(b).second) {
      all.push_back({std::move(elems), {a}, b});
      cyclic_gens.push_back(a);
    }
  }
  std::size_t lo = 0, hi = all.size();
  while (lo < hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (int c : cyclic_gens) {
        if (has(all[i].bits, c)) continue;
        std::vector<int> gens = all[i].gens;
        gens.push_back(c);
        auto elems = g.generated(gens);
        Bits b = to_bits(elems);
        if (known.insert(b).second) all.push_back({std::move(elems), std::move(gens), b});
      }
    }
    lo = hi;
    hi = all.size();
  }
  std::vector<std::vector<int>> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back(std::move(s.elems));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

namespace {

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<std::vector<int>> cyclic_by_p_subgroups(const FiniteGroup& g, int p) {
  std::vector<std::vector<int>> out;
  for (auto& h : subgroups(g)) {
    const int n = static_cast<int>(h.size());
    if (n % p != 0) continue;
    int ppart = 1;
    while (n % (ppart * p) == 0) ppart *= p;
    std::vector<int> sylow;
    for (int x : h)
      if (is_p_power(g.element_order(x), p)) sylow.push_back(x);
    // A unique Sylow subgroup is exactly the set of p-elements.
    if (static_cast<int>(sylow.size()) != ppart) continue;
    const Bits sb = to_bits(sylow);
    const int want = n / ppart;
    bool cyclic_quotient = want == 1;
    for (std::size_t i = 0; i < h.size() && !cyclic_quotient; ++i) {
      int k = 1;
      for (int y = h[i]; !has(sb, y); y = g.mul(y, h[i])) ++k;
      cyclic_quotient = k == want;
    }
    if (cyclic_quotient) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace hyperlift
