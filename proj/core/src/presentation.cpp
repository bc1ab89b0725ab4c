#include "hyperlift/presentation.hpp"

#include <array>
#include <cctype>

#include "hyperlift/error.hpp"

namespace hyperlift {

namespace {

int inverse_letter(int c) { return c ^ 1; }

Word invert(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(inverse_letter(*it));
  return r;
}

class WordParser {
 public:
  explicit WordParser(std::string_view s) : s_(s) {}

  Word parse() {
    Word w = word();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("bad word \"" + std::string(s_) + "\": " + why);
  }

  Word word() {
    Word w;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return w;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
  }

  Word factor() {
    Word a = atom();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("missing exponent");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 100000) fail("exponent too large");
      }
      if (neg) a = invert(a);
      Word r;
      for (long i = 0; i < e; ++i) r.insert(r.end(), a.begin(), a.end());
      return r;
    }
    return a;
  }

  Word atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_++];
    switch (c) {
      case 'x': return {0};
      case 'X': return {1};
      case 'y': return {2};
      case 'Y': return {3};
      case '1': return {};
      case '(': {
        Word w = word();
        if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
        ++pos_;
        return w;
      }
      default: fail("unexpected '" + std::string(1, c) + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

std::vector<Word> parse_relators(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_word(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string word_to_string(const Word& w) {
  static constexpr const char* kNames = "xXyY";
  std::string s;
  for (int c : w) s += kNames[c];
  return s.empty() ? "1" : s;
}

int evaluate(const FiniteGroup& g, const Word& w, int gx, int gy) {
  const std::array<int, 4> img{gx, g.inv(gx), gy, g.inv(gy)};
  int r = g.identity();
  for (int c : w) r = g.mul(r, img[c]);
  return r;
}

std::optional<std::pair<int, int>> presentation_witness(const FiniteGroup& g, const std::vector<Word>& relators,
                                                        int required_order) {
  if (g.order() != required_order) return std::nullopt;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      bool ok = true;
      for (const auto& r : relators) {
        if (evaluate(g, r, a, b) != g.identity()) {
          ok = false;
          break;
        }
      }
      if (ok && static_cast<int>(g.generated({a, b}).size()) == g.order()) return std::make_pair(a, b);
    }
  return std::nullopt;
}

bool presentation_holds(const FiniteGroup& g, const std::vector<Word>& relators, int required_order) {
  return presentation_witness(g, relators, required_order).has_value();
}

// ---------------------------------------------------------------------------

namespace {

// Coset enumeration (HLT with coincidence processing) over the trivial
// subgroup, on columns x, X, y, Y.
class CosetTable {
 public:
  CosetTable(std::vector<Word> relators, int max_cosets) : rels_(std::move(relators)), max_(max_cosets) {
    add_coset();
  }

  void run() {
    for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        scan_and_fill(c, r);
      }
      for (int x = 0; x < 4 && alive(c); ++x)
        if (table_[c][x] < 0) define(c, x);
    }
  }

  // Live cosets renumbered in order; rows give the four column images.
  std::vector<std::array<int, 4>> compact() {
    std::vector<int> id(table_.size(), -1);
    int k = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (alive(static_cast<int>(c))) id[c] = k++;
    std::vector<std::array<int, 4>> out;
    out.reserve(k);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      std::array<int, 4> row{};
      for (int x = 0; x < 4; ++x) row[x] = id[rep(table_[c][x])];
      out.push_back(row);
    }
    return out;
  }

 private:
  bool alive(int c) const { return parent_[c] == c; }

  int add_coset() {
    if (live_ >= max_) throw BoundExceeded("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int x) {
    const int k = add_coset();
    table_[c][x] = k;
    table_[k][inverse_letter(x)] = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    const int lo = std::min(k, l), hi = std::max(k, l);
    parent_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (int x = 0; x < 4; ++x) {
        const int f = table_[e][x];
        if (f < 0) continue;
        const int xi = inverse_letter(x);
        if (table_[f][xi] == e) table_[f][xi] = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] >= 0) {
          merge(f1, table_[e1][x], queue);
        } else if (table_[f1][xi] >= 0) {
          merge(e1, table_[f1][xi], queue);
        } else {
          table_[e1][x] = f1;
          table_[f1][xi] = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[i]] >= 0) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inverse_letter(w[j])] >= 0) b = table_[b][inverse_letter(w[j--])];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][inverse_letter(w[i])] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::vector<Word> rels_;
  int max_;
  int live_ = 0;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
};

}  // namespace

int presented_order(const std::vector<Word>& relators, int max_cosets) {
  CosetTable t(relators, max_cosets);
  t.run();
  return static_cast<int>(t.compact().size());
}

FiniteGroup presented_group(const std::vector<Word>& relators, int max_cosets) {
  CosetTable t(relators, max_cosets);
  t.run();
  const auto rows = t.compact();
  const int n = static_cast<int>(rows.size());
  if (n > FiniteGroup::kMaxOrder) throw BoundExceeded("presented group too large for a Cayley table");
  // Shortest word reaching each coset from the identity coset 0.
  std::vector<Word> words(n);
  std::vector<char> seen(n, 0);
  std::vector<int> bfs{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int x = 0; x < 4; ++x) {
      const int c = rows[bfs[i]][x];
      if (!seen[c]) {
        seen[c] = 1;
        words[c] = words[bfs[i]];
        words[c].push_back(x);
        bfs.push_back(c);
      }
    }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(word_to_string(words[a]));
    for (int b = 0; b < n; ++b) {
      int c = a;
      for (int x : words[b]) c = rows[c][x];
      table[a][b] = c;
    }
  }
  return FiniteGroup(std::move(table), std::move(labels));
}

}  // namespace hyperlift
