#include "hyperlift/lift_rules.hpp"

#include <algorithm>
#include <numeric>

#include "hyperlift/error.hpp"
#include "hyperlift/fq.hpp"
#include "hyperlift/presentation.hpp"

namespace hyperlift {

using Kind = GroupType::Kind;

std::string to_string(OortStatus s) {
  switch (s) {
    case OortStatus::Oort: return "OORT";
    case OortStatus::NotOort: return "NOT_OORT";
    case OortStatus::ConjecturalDpn: return "CONJECTURAL_Dpn";
  }
  return "?";
}

EmbedVerdict embeddable_char0(const GroupType& h, int p) {
  if (h.kind == Kind::Unknown) throw InvalidInput("cannot decide embeddability of an unidentified group");
  if (h.order() % p != 0) return {true, "p-regular: p does not divide |H|"};
  switch (h.kind) {
    case Kind::Cyclic:
      if (h.n == p) return {true, "Z/p"};
      break;
    case Kind::Dihedral:
      if (h.n == p && p != 2) return {true, "D_p with p != 2"};
      if (p == 2 && h.n % 2 == 1) return {true, "D_n with n odd when p = 2"};
      break;
    case Kind::A4:
      if (p == 2) return {true, "A4 when p = 2"};
      if (p == 3) return {true, "A4 when p = 3"};
      break;
    case Kind::S4:
      if (p == 3) return {true, "S4 when p = 3"};
      break;
    case Kind::A5:
      if (p <= 5) return {true, "A5 when p <= 5"};
      break;
    default:
      break;
  }
  return {false, "not in the embeddable list"};
}

std::vector<GroupType> quotient_extensions(const GroupType& h) {
  std::vector<GroupType> out;
  switch (h.kind) {
    case Kind::Cyclic:
      out = {GroupType::direct_z2(h), GroupType::cyclic(2 * h.n)};
      break;
    case Kind::Dihedral:
      out = {GroupType::direct_z2(h),          GroupType::with_n(Kind::Vn, h.n), GroupType::dihedral(2 * h.n),
             GroupType::with_n(Kind::Hn, h.n), GroupType::with_n(Kind::Un, h.n), GroupType::with_n(Kind::Gn, h.n)};
      break;
    case Kind::A4:
      out = {GroupType::direct_z2(h), GroupType::simple(Kind::SL2_3)};
      break;
    case Kind::S4:
      out = {GroupType::direct_z2(h), GroupType::simple(Kind::GL2_3), GroupType::simple(Kind::W2),
             GroupType::simple(Kind::W3)};
      break;
    case Kind::A5:
      out = {GroupType::direct_z2(h), GroupType::simple(Kind::SL2_5)};
      break;
    default:
      throw InvalidInput(h.to_string() + " is not a finite subgroup type of PGL_2 in the extension table");
  }
  std::vector<GroupType> unique;
  for (auto& t : out)
    if (std::find(unique.begin(), unique.end(), t) == unique.end()) unique.push_back(std::move(t));
  return unique;
}

namespace {

// A table for t, when one can be built within the order bound.
std::optional<FiniteGroup> realize(const GroupType& t) {
  if (t.kind == Kind::Unknown) return std::nullopt;
  if (t.order() > 256) return std::nullopt;
  if (t.constructible()) return reference_group(t);
  return presented_group(presentation_relators(t));
}

}  // namespace

bool is_quotient_extension(const FiniteGroup& g, const GroupType& h) {
  for (const auto& t : quotient_extensions(h)) {
    if (t.order() != g.order()) continue;
    if (auto r = realize(t); r && is_isomorphic(*r, g)) return true;
  }
  return false;
}

LiftVerdict hyperelliptic_liftable(const GroupType& g, int p, std::optional<int> genus) {
  if (p == 2) throw InvalidInput("characteristic 2 is not supported");
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be an odd prime");
  LiftVerdict v;
  const int n = g.order();
  v.flags.p_divides_order = n % p == 0;
  v.flags.p_squared_divides_order = n % (p * p) == 0;
  if (genus) v.flags.p_le_2g_plus_1 = p <= 2 * *genus + 1;
  const std::string s = g.to_string();
  if (!v.flags.p_divides_order) {
    v.liftable = true;
    v.rule = "tame: p does not divide |G|";
  } else if (g.kind == Kind::Cyclic && g.n == 2 * p) {
    v.liftable = true;
    v.rule = "liftable-list: Z/2p";
  } else if (g.kind == Kind::Dihedral && g.n == 2 * p) {
    v.liftable = true;
    v.rule = "liftable-list: D_2p";
  } else if (p == 5 && (s == "Z2xA5" || s == "SL2(5)")) {
    v.liftable = true;
    v.rule = "liftable-list: p=5 exceptional";
  } else if (p == 3 && (s == "Z2xA4" || s == "Z2xS4" || s == "Z2xA5" || s == "SL2(3)" || s == "GL2(3)")) {
    v.liftable = true;
    v.rule = "liftable-list: p=3 exceptional";
  } else {
    v.liftable = false;
    v.rule = "not in liftable list";
  }
  if (auto table = realize(g)) v.oort = oort_status(*table, p);
  return v;
}

namespace {

bool is_p_power(int n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Dihedral of order 2m: a cyclic subgroup of index 2 whose complement is
// all involutions (m = 2 gives the Klein group).
bool is_dihedral(const FiniteGroup& h, int m) {
  if (h.order() != 2 * m || m < 2) return false;
  for (int r = 0; r < h.order(); ++r) {
    if (h.element_order(r) != m) continue;
    const auto c = h.generated({r});
    bool ok = true;
    for (int x = 0; x < h.order() && ok; ++x)
      if (!std::binary_search(c.begin(), c.end(), x)) ok = h.element_order(x) == 2;
    if (ok) return true;
  }
  if (m == 2) {
    // Klein group: every non-identity element is an involution.
    for (int x = 0; x < h.order(); ++x)
      if (x != h.identity() && h.element_order(x) != 2) return false;
    return true;
  }
  return false;
}

}  // namespace

OortStatus oort_status(const FiniteGroup& g, int p) {
  if (g.order() > 256) throw BoundExceeded("Oort test limited to order 256");
  bool conjectural = false;
  for (const auto& elems : cyclic_by_p_subgroups(g, p)) {
    const FiniteGroup h = g.restrict_to(elems);
    const int n = h.order();
    bool cyclic = false;
    for (int a = 0; a < n && !cyclic; ++a) cyclic = h.element_order(a) == n;
    if (cyclic) continue;
    if (n % 2 == 0 && is_p_power(n / 2, p) && is_dihedral(h, n / 2)) {
      if (n / 2 > p) conjectural = true;
      continue;
    }
    if (p == 2 && n == 12 && is_isomorphic(h, reference_group(GroupType::simple(Kind::A4)))) continue;
    return OortStatus::NotOort;
  }
  return conjectural ? OortStatus::ConjecturalDpn : OortStatus::Oort;
}

LiftVerdict large_p_verdict(int g, int p, int order) {
  if (g < 2) throw InvalidInput("genus must be at least 2");
  if (p <= 2 * g + 1) throw InvalidInput("requires p > 2g+1");
  if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw InvalidInput("p must be prime");
  if (order < 1) throw InvalidInput("group order must be positive");
  LiftVerdict v;
  v.flags.p_divides_order = order % p == 0;
  v.flags.p_squared_divides_order = order % (p * p) == 0;
  v.flags.p_le_2g_plus_1 = false;
  v.liftable = !v.flags.p_divides_order;
  v.rule = "large-p: liftable iff p does not divide |G|";
  return v;
}

std::string QuotientCandidate::to_string() const {
  switch (family) {
    case Family::Exact: return type->to_string();
    case Family::CyclicPrimeTo: return "Z(m), gcd(m,p)=1";
    case Family::DihedralPrimeTo: return "D(m), gcd(m,p)=1";
    case Family::DihedralOdd: return "D(m), m odd";
  }
  return "?";
}

bool QuotientCandidate::contains(const GroupType& t, int p) const {
  switch (family) {
    case Family::Exact: return *type == t;
    case Family::CyclicPrimeTo: return t.kind == Kind::Cyclic && std::gcd(t.n, p) == 1;
    case Family::DihedralPrimeTo: return t.kind == Kind::Dihedral && std::gcd(t.n, p) == 1;
    case Family::DihedralOdd: return t.kind == Kind::Dihedral && t.n % 2 == 1;
  }
  return false;
}

std::vector<QuotientCandidate> quotient_group_candidates(int p, bool p_divides_n) {
  using F = QuotientCandidate::Family;
  std::vector<QuotientCandidate> out;
  const auto exact = [&](GroupType t) { out.push_back({F::Exact, std::move(t)}); };
  exact(GroupType::cyclic(p));
  if (p != 2) exact(GroupType::dihedral(p));
  if (p == 2) {
    exact(GroupType::simple(Kind::A4));
    out.push_back({F::DihedralOdd, std::nullopt});
  }
  if (p <= 5) exact(GroupType::simple(Kind::A5));
  if (p == 3) {
    exact(GroupType::simple(Kind::A4));
    exact(GroupType::simple(Kind::S4));
  }
  if (p_divides_n) {
    out.push_back({F::CyclicPrimeTo, std::nullopt});
    out.push_back({F::DihedralPrimeTo, std::nullopt});
  }
  return out;
}

std::vector<ConsistencyCheck> consistency_checks(const LiftVerdict& verdict, int order, int p,
                                                 std::optional<int> genus) {
  std::vector<ConsistencyCheck> out;
  const std::string ord = std::to_string(order), ps = std::to_string(p);
  if (verdict.liftable && order % p == 0) {
    out.push_back({"p divides |G|", true, ps + " | " + ord});
    const bool sq = order % (p * p) != 0;
    out.push_back({"p^2 does not divide |G|", sq, std::to_string(p * p) + (sq ? " does not divide " : " divides ") + ord});
    if (genus) {
      const bool le = p <= 2 * *genus + 1;
      out.push_back({"p <= 2g+1", le, ps + (le ? " <= " : " > ") + std::to_string(2 * *genus + 1)});
    }
  }
  if (verdict.oort) {
    const bool ok = verdict.liftable ? *verdict.oort == OortStatus::Oort : *verdict.oort != OortStatus::Oort;
    out.push_back({"liftable iff Oort", ok,
                   std::string(verdict.liftable ? "liftable" : "not liftable") + ", " + to_string(*verdict.oort)});
  }
  return out;
}

}  // namespace hyperlift
