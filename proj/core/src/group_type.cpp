#include "hyperlift/group_type.hpp"

#include <map>
#include <mutex>

#include "hyperlift/error.hpp"

namespace hyperlift {

using Kind = GroupType::Kind;

GroupType GroupType::cyclic(int n) {
  if (n < 1) throw InvalidInput("Z(n) needs n >= 1");
  GroupType t;
  t.kind = Kind::Cyclic;
  t.n = n;
  return t;
}

GroupType GroupType::dihedral(int n) {
  if (n < 2) throw InvalidInput("D(n) needs n >= 2");
  GroupType t;
  t.kind = Kind::Dihedral;
  t.n = n;
  return t;
}

GroupType GroupType::simple(Kind k) {
  GroupType t;
  t.kind = k;
  return t;
}

GroupType GroupType::with_n(Kind k, int n) {
  if (n < 1) throw InvalidInput("presentation parameter must be positive");
  GroupType t;
  t.kind = k;
  t.n = n;
  return t;
}

GroupType GroupType::direct_z2(const GroupType& inner) {
  switch (inner.kind) {
    case Kind::Cyclic:
      if (inner.n % 2 == 1) return cyclic(2 * inner.n);
      break;
    case Kind::Dihedral:
      if (inner.n % 2 == 1) return dihedral(2 * inner.n);
      break;
    case Kind::A4:
    case Kind::S4:
    case Kind::A5:
      break;
    default:
      throw InvalidInput("Z2 x " + inner.to_string() + " is outside the catalog");
  }
  GroupType t;
  t.kind = Kind::DirectZ2;
  t.inner = std::make_shared<const GroupType>(inner);
  return t;
}

GroupType GroupType::unknown(const FiniteGroup& g) {
  GroupType t;
  t.kind = Kind::Unknown;
  t.unknown_order = g.order();
  t.unknown_fingerprint = fingerprint(g).to_string();
  return t;
}

bool GroupType::is_presentation_type() const {
  switch (kind) {
    case Kind::Vn:
    case Kind::Hn:
    case Kind::Un:
    case Kind::Gn:
    case Kind::W2:
    case Kind::W3:
      return true;
    default:
      return false;
  }
}

bool GroupType::constructible() const { return !is_presentation_type() && kind != Kind::Unknown; }

int GroupType::order() const {
  switch (kind) {
    case Kind::Cyclic: return n;
    case Kind::Dihedral: return 2 * n;
    case Kind::A4: return 12;
    case Kind::S4: return 24;
    case Kind::A5: return 60;
    case Kind::DirectZ2: return 2 * inner->order();
    case Kind::SL2_3: return 24;
    case Kind::GL2_3: return 48;
    case Kind::SL2_5: return 120;
    case Kind::Unknown: return unknown_order;
    default: return presentation_info(*this).enumerated_order;
  }
}

std::string GroupType::to_string() const {
  const auto par = [](const char* name, int v) { return std::string(name) + "(" + std::to_string(v) + ")"; };
  switch (kind) {
    case Kind::Cyclic: return par("Z", n);
    case Kind::Dihedral: return par("D", n);
    case Kind::A4: return "A4";
    case Kind::S4: return "S4";
    case Kind::A5: return "A5";
    case Kind::DirectZ2: return "Z2x" + inner->to_string();
    case Kind::SL2_3: return "SL2(3)";
    case Kind::GL2_3: return "GL2(3)";
    case Kind::SL2_5: return "SL2(5)";
    case Kind::Vn: return par("V", n);
    case Kind::Hn: return par("H", n);
    case Kind::Un: return par("U", n);
    case Kind::Gn: return par("G", n);
    case Kind::W2: return "W2";
    case Kind::W3: return "W3";
    case Kind::Unknown: return "Unknown[" + unknown_fingerprint + "]";
  }
  return "?";
}

bool operator==(const GroupType& a, const GroupType& b) { return a.to_string() == b.to_string(); }

namespace {

int parse_paren_int(std::string_view s, std::string_view whole) {
  if (s.size() < 3 || s.front() != '(' || s.back() != ')') {
    throw InvalidInput("bad group type \"" + std::string(whole) + "\"");
  }
  int v = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9' || v > 100000) throw InvalidInput("bad group type \"" + std::string(whole) + "\"");
    v = v * 10 + (s[i] - '0');
  }
  return v;
}

}  // namespace

GroupType parse_group_type(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("Z2x")) return GroupType::direct_z2(parse_group_type(text.substr(3)));
  static const std::map<std::string_view, Kind> kFixed = {
      {"A4", Kind::A4},         {"S4", Kind::S4},         {"A5", Kind::A5}, {"SL2(3)", Kind::SL2_3},
      {"GL2(3)", Kind::GL2_3}, {"SL2(5)", Kind::SL2_5}, {"W2", Kind::W2}, {"W3", Kind::W3}};
  if (auto it = kFixed.find(text); it != kFixed.end()) return GroupType::simple(it->second);
  if (text == "Z2") return GroupType::cyclic(2);
  if (text.empty()) throw InvalidInput("empty group type");
  const std::string_view rest = text.substr(1);
  switch (text.front()) {
    case 'Z': return GroupType::cyclic(parse_paren_int(rest, text));
    case 'D': return GroupType::dihedral(parse_paren_int(rest, text));
    case 'V': return GroupType::with_n(Kind::Vn, parse_paren_int(rest, text));
    case 'H': return GroupType::with_n(Kind::Hn, parse_paren_int(rest, text));
    case 'U': return GroupType::with_n(Kind::Un, parse_paren_int(rest, text));
    case 'G': return GroupType::with_n(Kind::Gn, parse_paren_int(rest, text));
    default: break;
  }
  throw InvalidInput("unknown group type \"" + std::string(text) + "\"");
}

namespace {

std::mutex g_cache_mutex;

const FiniteGroup& cached(const std::string& key, FiniteGroup (*make)(const GroupType&), const GroupType& t) {
  static std::map<std::string, FiniteGroup> cache;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  FiniteGroup g = make(t);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return cache.emplace(key, std::move(g)).first->second;
}

FiniteGroup build_reference(const GroupType& t) {
  switch (t.kind) {
    case Kind::Cyclic: return cyclic_group(t.n);
    case Kind::Dihedral: return dihedral_group(t.n);
    case Kind::A4: return alternating_group(4);
    case Kind::S4: return symmetric_group(4);
    case Kind::A5: return alternating_group(5);
    case Kind::DirectZ2: return direct_product(cyclic_group(2), reference_group(*t.inner));
    case Kind::SL2_3: return matrix_group(3, true);
    case Kind::GL2_3: return matrix_group(3, false);
    case Kind::SL2_5: return matrix_group(5, true);
    default: break;
  }
  throw InvalidInput(t.to_string() + " is identified by presentation only and has no reference table");
}

}  // namespace

const FiniteGroup& reference_group(const GroupType& t) {
  if (!t.constructible()) build_reference(t);
  return cached(t.to_string(), build_reference, t);
}

std::vector<Word> presentation_relators(const GroupType& t) {
  const std::string n = std::to_string(t.n), n2 = std::to_string(2 * t.n), n1 = std::to_string(t.n + 1);
  switch (t.kind) {
    case Kind::Vn: return parse_relators("x^4, y^" + n + ", (xy)^2, (Xy)^2");
    case Kind::Hn: return parse_relators("x^4, (xy)^" + n + ", x^2y^2");
    case Kind::Un: return parse_relators("x^2, y^" + n2 + ", xyxy^" + n1);
    case Kind::Gn: return parse_relators("x^2y^" + n + ", y^" + n2 + ", Xyxy");
    case Kind::W2: return parse_relators("x^4, y^3, yx^2y^-1x^2, (xy)^4");
    case Kind::W3: return parse_relators("x^4, y^3, x^2(xy)^4, (xy)^8");
    default: break;
  }
  throw InvalidInput(t.to_string() + " has no presentation in the catalog");
}

PresentationInfo presentation_info(const GroupType& t) {
  static std::map<std::string, PresentationInfo> memo;
  const std::string key = t.to_string();
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto rels = presentation_relators(t);
  PresentationInfo info{t, "", 0, 0};
  for (std::size_t i = 0; i < rels.size(); ++i) info.relators += (i ? ", " : "") + word_to_string(rels[i]);
  info.catalog_order = t.kind == Kind::W2 || t.kind == Kind::W3 ? 48 : 4 * t.n;
  info.enumerated_order = presented_order(rels);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  memo.emplace(key, info);
  return info;
}

namespace {

bool matches(const FiniteGroup& g, const Fingerprint& fp, const GroupType& t) {
  if (t.order() != g.order()) return false;
  const FiniteGroup& ref = reference_group(t);
  if (!(fingerprint(ref) == fp)) return false;
  return is_isomorphic(ref, g);
}

}  // namespace

GroupType identify(const FiniteGroup& g) {
  const int n = g.order();
  if (n > 256) throw BoundExceeded("identification limited to order 256");
  for (int a = 0; a < n; ++a)
    if (g.element_order(a) == n) return GroupType::cyclic(n);
  const Fingerprint fp = fingerprint(g);
  std::vector<GroupType> cands;
  if (n % 2 == 0 && n >= 4) cands.push_back(GroupType::dihedral(n / 2));
  for (Kind k : {Kind::A4, Kind::S4, Kind::A5, Kind::SL2_3, Kind::GL2_3, Kind::SL2_5}) {
    cands.push_back(GroupType::simple(k));
  }
  if (n % 4 == 0) {
    cands.push_back(GroupType::direct_z2(GroupType::cyclic(n / 2)));
    if (n / 4 >= 2) cands.push_back(GroupType::direct_z2(GroupType::dihedral(n / 4)));
  }
  for (Kind k : {Kind::A4, Kind::S4, Kind::A5}) cands.push_back(GroupType::direct_z2(GroupType::simple(k)));
  for (const auto& t : cands) {
    if (t.order() == n && matches(g, fp, t)) return t;
  }
  std::vector<GroupType> pres;
  if (n == 48) {
    pres.push_back(GroupType::simple(Kind::W2));
    pres.push_back(GroupType::simple(Kind::W3));
  }
  if (n % 4 == 0) {
    for (Kind k : {Kind::Vn, Kind::Hn, Kind::Un, Kind::Gn}) pres.push_back(GroupType::with_n(k, n / 4));
  }
  for (const auto& t : pres) {
    const PresentationInfo info = presentation_info(t);
    if (!info.verified()) continue;
    if (presentation_holds(g, presentation_relators(t), info.enumerated_order)) return t;
  }
  return GroupType::unknown(g);
}

FiniteGroup parse_group_expression(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == 'x' && depth == 0)) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  std::optional<FiniteGroup> acc;
  for (auto part : parts) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    FiniteGroup g = [&] {
      if (part == "Q8") return quaternion_group();
      const GroupType t = parse_group_type(part);
      if (t.is_presentation_type()) return presented_group(presentation_relators(t));
      return reference_group(t);
    }();
    acc = acc ? direct_product(*acc, g) : g;
  }
  if (!acc) throw InvalidInput("empty group expression");
  return *acc;
}

}  // namespace hyperlift
