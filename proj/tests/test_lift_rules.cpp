#include <gtest/gtest.h>

#include "hyperlift/error.hpp"
#include "hyperlift/lift_rules.hpp"

using namespace hyperlift;

namespace {

GroupType T(const char* s) { return parse_group_type(s); }

OortStatus oort_of(const char* expr, int p) { return oort_status(parse_group_expression(expr), p); }

}  // namespace

TEST(Embeddable, Table) {
  EXPECT_TRUE(embeddable_char0(T("Z(5)"), 5).embeddable);
  EXPECT_FALSE(embeddable_char0(T("Z(10)"), 5).embeddable);
  EXPECT_TRUE(embeddable_char0(T("D(3)"), 3).embeddable);
  EXPECT_FALSE(embeddable_char0(T("D(6)"), 3).embeddable);
  EXPECT_TRUE(embeddable_char0(T("D(5)"), 2).embeddable);
  EXPECT_TRUE(embeddable_char0(T("A5"), 5).embeddable);
  EXPECT_TRUE(embeddable_char0(T("A5"), 3).embeddable);
  EXPECT_TRUE(embeddable_char0(T("S4"), 3).embeddable);
  EXPECT_FALSE(embeddable_char0(T("S4"), 2).embeddable);
  EXPECT_TRUE(embeddable_char0(T("S4"), 7).embeddable);
  EXPECT_EQ(embeddable_char0(T("S4"), 7).clause, "p-regular: p does not divide |H|");
}

TEST(QuotientExtensions, Columns) {
  const auto names = [](const GroupType& h) {
    std::vector<std::string> out;
    for (const auto& t : quotient_extensions(h)) out.push_back(t.to_string());
    return out;
  };
  EXPECT_EQ(names(T("Z(4)")), (std::vector<std::string>{"Z2xZ(4)", "Z(8)"}));
  EXPECT_EQ(names(T("S4")), (std::vector<std::string>{"Z2xS4", "GL2(3)", "W2", "W3"}));
  EXPECT_EQ(names(T("A5")), (std::vector<std::string>{"Z2xA5", "SL2(5)"}));
  EXPECT_EQ(names(T("D(6)")).size(), 6u);
  EXPECT_THROW(quotient_extensions(T("GL2(3)")), InvalidInput);
}

TEST(QuotientExtensions, IsomorphismMembership) {
  EXPECT_TRUE(is_quotient_extension(reference_group(T("GL2(3)")), T("S4")));
  EXPECT_TRUE(is_quotient_extension(parse_group_expression("W3"), T("S4")));
  EXPECT_FALSE(is_quotient_extension(reference_group(T("SL2(3)")), T("S4")));
  EXPECT_TRUE(is_quotient_extension(reference_group(T("D(6)")), T("D(3)")));
}

TEST(Liftable, ListedPairs) {
  EXPECT_EQ(hyperelliptic_liftable(T("D(14)"), 7).rule, "liftable-list: D_2p");
  EXPECT_EQ(hyperelliptic_liftable(T("Z(10)"), 5).rule, "liftable-list: Z/2p");
  EXPECT_EQ(hyperelliptic_liftable(T("SL2(5)"), 5).rule, "liftable-list: p=5 exceptional");
  EXPECT_EQ(hyperelliptic_liftable(T("GL2(3)"), 3).rule, "liftable-list: p=3 exceptional");
  EXPECT_EQ(hyperelliptic_liftable(T("GL2(3)"), 5).rule, "tame: p does not divide |G|");
  EXPECT_FALSE(hyperelliptic_liftable(T("Z(30)"), 5).liftable);
  EXPECT_FALSE(hyperelliptic_liftable(T("SL2(5)"), 3).liftable);
  EXPECT_FALSE(hyperelliptic_liftable(T("W3"), 3).liftable);
  EXPECT_THROW(hyperelliptic_liftable(T("Z(4)"), 2), InvalidInput);
  EXPECT_THROW(hyperelliptic_liftable(T("Z(4)"), 9), InvalidInput);
}

TEST(Liftable, AtMostTwoTypesForLargeP) {
  // Every catalog type of order <= 120 with 7 | order.
  int yes = 0;
  for (int n = 2; n <= 60; ++n) {
    for (const GroupType& t : {GroupType::cyclic(n), GroupType::dihedral(n)}) {
      if (t.order() % 7 == 0 && hyperelliptic_liftable(t, 7).liftable) ++yes;
    }
  }
  EXPECT_EQ(yes, 2);
}

TEST(Liftable, ConsistencyFlags) {
  const LiftVerdict v = hyperelliptic_liftable(T("GL2(3)"), 3, 2);
  const auto checks = consistency_checks(v, 48, 3, 2);
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name;
}

TEST(Liftable, LargePVerdict) {
  EXPECT_TRUE(large_p_verdict(2, 7, 48).liftable);
  EXPECT_FALSE(large_p_verdict(2, 7, 14).liftable);
  EXPECT_THROW(large_p_verdict(2, 5, 10), InvalidInput);
  EXPECT_THROW(large_p_verdict(1, 7, 10), InvalidInput);
  for (int order : {2, 4, 10, 12, 24, 48, 120}) {
    EXPECT_EQ(large_p_verdict(2, 7, order).liftable, hyperelliptic_liftable(GroupType::cyclic(order), 7).liftable);
  }
}

TEST(Oort, NonExamplesAndExamples) {
  EXPECT_EQ(oort_of("Q8", 2), OortStatus::NotOort);
  EXPECT_EQ(oort_of("Z(3)xZ(3)", 3), OortStatus::NotOort);
  EXPECT_EQ(oort_of("Z(12)", 2), OortStatus::Oort);
  EXPECT_EQ(oort_of("D(5)", 5), OortStatus::Oort);
  EXPECT_EQ(oort_of("D(2)", 2), OortStatus::Oort);
  EXPECT_EQ(oort_of("A4", 2), OortStatus::Oort);
  // Sylow 3 is not normal in A4, so only cyclic subgroups are cyclic-by-3.
  EXPECT_EQ(oort_of("A4", 3), OortStatus::Oort);
  EXPECT_EQ(oort_of("D(9)", 3), OortStatus::ConjecturalDpn);
  EXPECT_EQ(oort_of("D(25)", 5), OortStatus::ConjecturalDpn);
  EXPECT_EQ(oort_of("SL2(5)", 5), OortStatus::NotOort);
  EXPECT_EQ(to_string(OortStatus::ConjecturalDpn), "CONJECTURAL_Dpn");
}

TEST(QuotientCandidates, Lists) {
  const auto c3 = quotient_group_candidates(3, false);
  std::vector<std::string> names;
  for (const auto& c : c3) names.push_back(c.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"Z(3)", "D(3)", "A5", "A4", "S4"}));
  const auto c5 = quotient_group_candidates(5, true);
  bool has_z7 = false;
  for (const auto& c : c5) has_z7 = has_z7 || c.contains(GroupType::cyclic(7), 5);
  EXPECT_TRUE(has_z7);
  bool has_z10 = false;
  for (const auto& c : c5) has_z10 = has_z10 || c.contains(GroupType::cyclic(10), 5);
  EXPECT_FALSE(has_z10);
}
