#include <gtest/gtest.h>

#include <random>

#include "twell/builtins.hpp"
#include "twell/cochain.hpp"

using namespace twell;

TEST(Phase, ReducesModOne) {
  EXPECT_EQ(Phase(3, 2), Phase(1, 2));
  EXPECT_EQ(Phase(-1, 4), Phase(3, 4));
  EXPECT_EQ(Phase(2, 4).str(), "1/2");
  EXPECT_TRUE((Phase(1, 3) + Phase(2, 3)).is_zero());
}

TEST(Coboundary, ZeroToZero) {
  const auto G = named_group("S3");
  EXPECT_TRUE(coboundary(Cochain2(G)).is_zero());
}

TEST(Coboundary, DSquaredOnZ2) {
  const auto G = named_group("Z/2");
  Cochain1 b(G);
  b(1) = Phase(1, 3);
  EXPECT_TRUE(coboundary(coboundary(b)).is_zero());
}

TEST(Coboundary, QuarterOnZ4) {
  const auto G = named_group("Z/4");
  Cochain1 b(G);
  b(1) = Phase(1, 4);
  const auto db = coboundary(b);
  EXPECT_TRUE(db.is_normalized());
  EXPECT_TRUE(is_cocycle(db).ok);
  EXPECT_FALSE(db.is_zero());
  // brute-force recomputation of d(db) over all triples
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y)
      for (Element z = 0; z < 4; ++z) {
        const Phase v = db(y, z) - db((x + y) % 4, z) + db(x, (y + z) % 4) - db(x, y);
        EXPECT_TRUE(v.is_zero());
      }
}

TEST(Cocycle, ZeroThreeCochain) { EXPECT_TRUE(is_cocycle(Cochain3(named_group("D4"))).ok); }

TEST(Cocycle, CyclicGenerators) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      const auto a = cyclic_3cocycle(n, k);
      EXPECT_TRUE(a.is_normalized());
      EXPECT_TRUE(is_cocycle(a).ok) << n << " " << k;
    }
}

TEST(Cocycle, CyclicValues) {
  EXPECT_TRUE(cyclic_3cocycle(5, 0).is_zero());
  const auto a = cyclic_3cocycle(2, 1);
  EXPECT_EQ(a(1, 1, 1), Phase(1, 2));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto t = a.args(i);
    if (t[0] == 0 || t[1] == 0 || t[2] == 0) EXPECT_TRUE(a.at_offset(i).is_zero());
  }
  EXPECT_THROW(cyclic_3cocycle(3, 3), InputError);
  EXPECT_THROW(cyclic_3cocycle(3, -1), InputError);
}

TEST(Cocycle, PerturbationGivesWitness) {
  auto a = cyclic_3cocycle(4, 1);
  a(1, 2, 3) = a(1, 2, 3) + Phase(1, 8);
  const auto r = is_cocycle(a);
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  // the witness really is a nonzero coboundary entry
  const auto d = coboundary(a);
  EXPECT_FALSE(d[*r.witness].is_zero());
  EXPECT_EQ(d[*r.witness], r.defect);
  EXPECT_THROW(require_cocycle(a), InputError);
}

TEST(Cocycle, KleinTwist) {
  const auto a = klein_2cocycle();
  const auto& G = a.group();
  EXPECT_TRUE(is_cocycle(a).ok);
  for (Element g = 0; g < 4; ++g) EXPECT_TRUE(a(0, g).is_zero());
  const Element e01 = element_by_name(G, "(0,1)"), e10 = element_by_name(G, "(1,0)");
  EXPECT_EQ(a(e01, e10), Phase(1, 2));
  EXPECT_TRUE(a(e10, e01).is_zero());
}

TEST(Cohomologous, Reflexive) {
  const auto a = cyclic_3cocycle(3, 1);
  const auto b = cohomologous(a, a);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(b->is_zero());
}

TEST(Cohomologous, RoundTrip) {
  std::mt19937 rng(7);
  for (const char* name : {"Z/4", "S3", "Klein"}) {
    const auto G = named_group(name);
    const auto a = pullback(identity_hom(G), Cochain3(G));
    const auto b0 = random_cochain<2>(G, rng, 12);
    const auto a2 = a + coboundary(b0);
    const auto b = cohomologous(a2, a);
    ASSERT_TRUE(b.has_value()) << name;
    EXPECT_EQ(coboundary(*b), coboundary(b0)) << name;
  }
}

TEST(Cohomologous, GeneratorNotTrivial) {
  const auto a = cyclic_3cocycle(2, 1);
  EXPECT_FALSE(cohomologous(a, Cochain3(a.group())).has_value());
  EXPECT_FALSE(cohomologous(klein_2cocycle(), Cochain2(klein_2cocycle().group())).has_value());
}

// Exhaustive search at order 2: a normalized 2-cochain on Z/2 is a single
// value b(1,1), and its coboundary is supported on (1,1,1) with value 0, so
// no 2-cochain can reach a 3-cocycle with a(1,1,1) = 1/2.
TEST(Cohomologous, ExhaustiveOrderTwo) {
  const auto G = named_group("Z/2");
  const auto target = cyclic_3cocycle(2, 1);
  for (int num = 0; num < 24; ++num) {
    Cochain2 b(G);
    b(1, 1) = Phase(num, 24);
    EXPECT_NE(coboundary(b), target);
  }
}

TEST(Cohomologous, RejectsNonCocycle) {
  auto a = cyclic_3cocycle(2, 1);
  a(1, 1, 1) = Phase(1, 4);
  EXPECT_THROW(cohomologous(a, a), InputError);
}

// d o d = 0 on random cochains of every degree, for every built-in group.
TEST(CochainProperty, DSquaredZero) {
  std::mt19937 rng(2024);
  for (const auto& [name, G] : builtin_groups()) {
    SCOPED_TRACE(name);
    for (int trial = 0; trial < 5; ++trial) {
      EXPECT_TRUE(coboundary(coboundary(random_cochain<1>(G, rng, 60))).is_zero());
      EXPECT_TRUE(coboundary(coboundary(random_cochain<2>(G, rng, 60))).is_zero());
    }
  }
}

TEST(CochainProperty, BuiltinsAreNormalizedCocycles) {
  for (const auto& t : builtin_twists2()) {
    EXPECT_TRUE(t.alpha.is_normalized()) << t.name;
    EXPECT_TRUE(is_cocycle(t.alpha).ok) << t.name;
  }
  for (const auto& t : builtin_twists3()) {
    EXPECT_TRUE(t.alpha.is_normalized()) << t.name;
    EXPECT_TRUE(is_cocycle(t.alpha).ok) << t.name;
  }
}

// symmetric: negate beta; transitive: add betas
TEST(CochainProperty, CohomologousIsEquivalence) {
  std::mt19937 rng(11);
  const auto G = named_group("Z/3");
  const auto a = cyclic_3cocycle(3, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto b1 = random_cochain<2>(G, rng, 9);
    const auto b2 = random_cochain<2>(G, rng, 9);
    const auto a1 = a + coboundary(b1);
    const auto a2 = a1 + coboundary(b2);
    const auto f = cohomologous(a1, a);
    const auto r = cohomologous(a, a1);
    ASSERT_TRUE(f && r);
    EXPECT_EQ(coboundary(*r), -coboundary(*f));
    const auto t = cohomologous(a2, a);
    ASSERT_TRUE(t);
    EXPECT_EQ(coboundary(*t), coboundary(b1) + coboundary(b2));
  }
}

TEST(CochainProperty, PullbackOfCocycleIsCocycle) {
  const auto S4 = named_group("S4");
  const auto q = cyclic_quotient(S4, commutator_subgroup(S4), element_by_name(S4, "(1 2)"));
  EXPECT_TRUE(is_cocycle(pullback(q, cyclic_3cocycle(2, 1))).ok);
}
