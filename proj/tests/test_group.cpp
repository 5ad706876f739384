#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "twell/builtins.hpp"
#include "twell/group.hpp"

using namespace twell;

TEST(Group, TrivialGroup) {
  const auto G = named_group("Z/1");
  EXPECT_EQ(G.order(), 1);
  EXPECT_EQ(conjugacy_classes(G).size(), 1u);
  EXPECT_EQ(pair_orbits(G).size(), 1u);
}

TEST(Group, PermutationClosureGivesS3) {
  const auto G = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.name(0), "e");
}

TEST(Group, ClosureIsDeterministic) {
  const auto a = symmetric_group(4);
  const auto b = symmetric_group(4);
  for (Element x = 0; x < a.order(); ++x) {
    EXPECT_EQ(a.name(x), b.name(x));
    for (Element y = 0; y < a.order(); ++y) EXPECT_EQ(a.mul(x, y), b.mul(x, y));
  }
}

TEST(Group, ClosureLimit) {
  EXPECT_THROW(group_from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 10), InputError);
}

TEST(Group, NonAssociativeTableRejected) {
  // a Latin square with identity 0 that is not associative
  std::vector<std::vector<int>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup::from_table(t), InputError);
}

TEST(Group, MissingInverseRejected) {
  std::vector<std::vector<int>> t = {{0, 1}, {1, 1}};
  EXPECT_THROW(FiniteGroup::from_table(t), InputError);
}

TEST(Group, ClassCounts) {
  const auto S3 = named_group("S3");
  const auto classes = conjugacy_classes(S3);
  ASSERT_EQ(classes.size(), 3u);
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(classes[0], std::vector<Element>{0});
  EXPECT_EQ(conjugacy_classes(named_group("Q8")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(named_group("Z/6")).size(), 6u);
}

TEST(Group, Centralizers) {
  const auto S3 = named_group("S3");
  EXPECT_EQ(centralizer(S3, 0).size(), 6u);
  EXPECT_EQ(centralizer(S3, element_by_name(S3, "(1 2)")).size(), 2u);
  EXPECT_EQ(centralizer_pair(S3, {0, element_by_name(S3, "(1 2 3)")}).size(), 3u);
}

TEST(Group, CommutingPairCounts) {
  EXPECT_EQ(commuting_pairs(named_group("S3")).size(), 18u);
  EXPECT_EQ(commuting_pairs(named_group("Q8")).size(), 40u);
  EXPECT_EQ(commuting_pairs(named_group("Z/5")).size(), 25u);
  EXPECT_EQ(pair_orbits(named_group("S3")).size(), 8u);
  EXPECT_EQ(pair_orbits(named_group("Z/2")).size(), 4u);
}

TEST(Group, PairsAreLexicographic) {
  const auto p = commuting_pairs(named_group("D4"));
  EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
}

TEST(Group, FixedPoints) {
  const auto S3 = named_group("S3");
  const auto X = point_gset(S3);
  const Element t = element_by_name(S3, "(1 2)");
  EXPECT_EQ(fixed_points(X, std::vector<Element>{t}).size(), 1u);
  EXPECT_TRUE(fixed_points(regular_gset(S3), std::vector<Element>{t}).empty());
  // S3 on the three cosets of <(1 2)>
  const auto C = oracle::coset_action(S3, {0, t});
  EXPECT_EQ(C.size(), 3);
  const auto X3 = make_gset(S3, C.size(), C.act);
  EXPECT_EQ(fixed_points(X3, std::vector<Element>{t}).size(), 1u);
  EXPECT_EQ(fixed_points(X3, std::vector<Element>{0}).size(), 3u);
}

TEST(Group, Homomorphisms) {
  const auto S3 = named_group("S3");
  EXPECT_NO_THROW(identity_hom(S3));
  EXPECT_NO_THROW(subgroup_inclusion(S3, {element_by_name(S3, "(1 2)")}));
  EXPECT_THROW(check_homomorphism(named_group("Z/2"), named_group("Z/3"), {0, 1}), InputError);
  EXPECT_THROW(check_homomorphism(named_group("Z/2"), named_group("Z/2"), {1, 0}), InputError);
}

TEST(Group, Quotients) {
  const auto S4 = named_group("S4");
  const auto N = commutator_subgroup(S4);
  EXPECT_EQ(N.size(), 12u);
  const auto q = cyclic_quotient(S4, N, element_by_name(S4, "(1 2)"));
  EXPECT_EQ(q.target.order(), 2);
  const auto A4 = named_group("A4");
  EXPECT_EQ(commutator_subgroup(A4).size(), 4u);
}

// Class equation and Burnside's count for every built-in group.
TEST(GroupProperty, ClassEquationAndBurnside) {
  for (const auto& [name, G] : builtin_groups()) {
    SCOPED_TRACE(name);
    int total = 0;
    for (const auto& c : conjugacy_classes(G)) {
      EXPECT_EQ(c.size() * centralizer(G, c.front()).size(), static_cast<std::size_t>(G.order()));
      total += static_cast<int>(c.size());
    }
    EXPECT_EQ(total, G.order());
    const int k = static_cast<int>(conjugacy_classes(G).size());
    EXPECT_EQ(k, oracle::class_count(G));
    EXPECT_EQ(static_cast<int>(commuting_pairs(G).size()), G.order() * k);
    EXPECT_EQ(static_cast<int>(commuting_pairs(G).size()), oracle::commuting_pair_count(G));
    EXPECT_EQ(static_cast<int>(pair_orbits(G).size()), oracle::pair_orbit_count(G));
  }
}

TEST(GroupProperty, PairOrbitsPartition) {
  for (const auto& [name, G] : builtin_groups()) {
    SCOPED_TRACE(name);
    std::size_t covered = 0;
    for (const auto& o : pair_orbits(G)) {
      EXPECT_EQ(o.members.size() * o.stabilizer.size(), static_cast<std::size_t>(G.order()));
      EXPECT_EQ(o.stabilizer, centralizer_pair(G, o.representative));
      EXPECT_EQ(o.members.front(), o.representative);
      for (const auto& m : o.members)
        for (Element h = 0; h < G.order(); ++h)
          EXPECT_TRUE(std::binary_search(o.members.begin(), o.members.end(), conj_pair(G, h, m)));
      covered += o.members.size();
    }
    EXPECT_EQ(covered, commuting_pairs(G).size());
  }
}
