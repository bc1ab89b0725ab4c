#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperlift/group_type.hpp"
#include "hyperlift/groups.hpp"

namespace hyperlift {

enum class OortStatus { Oort, NotOort, ConjecturalDpn };

/// "OORT", "NOT_OORT", "CONJECTURAL_Dpn".
std::string to_string(OortStatus s);

struct LiftFlags {
  bool p_divides_order = false;
  bool p_squared_divides_order = false;
  /// Present when the genus is known.
  std::optional<bool> p_le_2g_plus_1;
};

struct LiftVerdict {
  bool liftable = false;
  std::string rule;
  /// Absent when the group has no table to test.
  std::optional<OortStatus> oort;
  LiftFlags flags;
};

struct EmbedVerdict {
  bool embeddable = false;
  std::string clause;
};

/// Whether a finite subgroup h of PGL_2 in characteristic p also embeds in
/// PGL_2 in characteristic 0. Throws InvalidInput for Unknown.
EmbedVerdict embeddable_char0(const GroupType& h, int p);

/// Possible full groups G with G / <sigma> = h. Throws InvalidInput when h
/// is not cyclic, dihedral, A4, S4 or A5.
std::vector<GroupType> quotient_extensions(const GroupType& h);

/// True when g is isomorphic to a realizable member of
/// quotient_extensions(h).
bool is_quotient_extension(const FiniteGroup& g, const GroupType& h);

/// Liftability of a full automorphism group in odd characteristic p. The
/// Oort status is attached when the type has a table of order <= 256.
LiftVerdict hyperelliptic_liftable(const GroupType& g, int p, std::optional<int> genus = std::nullopt);

/// Tests every cyclic-by-p subgroup: cyclic or D_{p^n} passes (A4 too when
/// p = 2); D_{p^n} with n > 1 makes the answer conjectural.
OortStatus oort_status(const FiniteGroup& g, int p);

/// Genus-g curves with p > 2g+1: liftable iff p does not divide the order.
/// Throws InvalidInput when p <= 2g+1 or g < 2.
LiftVerdict large_p_verdict(int g, int p, int order);

struct QuotientCandidate {
  enum class Family { Exact, CyclicPrimeTo, DihedralPrimeTo, DihedralOdd };
  Family family = Family::Exact;
  /// Exact only.
  std::optional<GroupType> type;

  std::string to_string() const;
  bool contains(const GroupType& t, int p) const;
};

/// Possible quotients G/N in characteristic p, split by whether p | |N|.
std::vector<QuotientCandidate> quotient_group_candidates(int p, bool p_divides_n);

struct ConsistencyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Observations that must accompany a verdict: for liftable groups with
/// p | |G|, p^2 does not divide |G| and p <= 2g+1; in every case the
/// verdict agrees with the Oort status.
std::vector<ConsistencyCheck> consistency_checks(const LiftVerdict& verdict, int order, int p,
                                                 std::optional<int> genus = std::nullopt);

}  // namespace hyperlift
