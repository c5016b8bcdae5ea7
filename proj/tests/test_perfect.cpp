#include <gtest/gtest.h>

#include "krc/perfect.hpp"
#include "oracles.hpp"

using namespace krc;

TEST(DominantWeight, BasicsAndErrors) {
  const DominantWeight w({1, 0, 2});
  EXPECT_EQ(w.n(), 2);
  EXPECT_EQ(w.level(), 3);
  EXPECT_EQ(w.rotated(1), DominantWeight({0, 2, 1}));
  EXPECT_EQ(to_string(w), "(1,0,2)");
  EXPECT_THROW(DominantWeight({1}), InvalidParams);
  EXPECT_THROW(DominantWeight({1, -1}), NegativeEntry);
  EXPECT_EQ(dominant_weights(2, 2).size(), 6u);
}

TEST(Profiles, ZeroPattern) {
  const auto z = Pattern::zero(make_params(3, 2, 2));
  EXPECT_EQ(eps_profile(z), (std::vector<int>{2, 0, 0, 0}));
  EXPECT_EQ(phi_profile(z), (std::vector<int>{0, 0, 2, 0}));
}

TEST(MinimalElements, FormulasMatchUniquenessSearch) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int s = 1; s <= 3; ++s) {
        const auto k = make_params(n, r, s);
        const auto all = enumerate_crystal(k);
        for (const auto& w : dominant_weights(n, s)) {
          std::vector<Pattern> by_eps, by_phi;
          for (const auto& a : all) {
            if (eps_profile(a) == w.coeffs) by_eps.push_back(a);
            if (phi_profile(a) == w.coeffs) by_phi.push_back(a);
          }
          ASSERT_EQ(by_eps.size(), 1u) << to_string(w);
          ASSERT_EQ(by_phi.size(), 1u) << to_string(w);
          EXPECT_EQ(b_lower(w, k), by_eps.front());
          EXPECT_EQ(b_upper(w, k), by_phi.front());
        }
      }
    }
  }
}

TEST(MinimalElements, MultipleOfLambdaZero) {
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto k = make_params(n, r, 2);
      std::vector<int> c(n + 1, 0);
      c[0] = 2;
      const DominantWeight w(c);
      EXPECT_TRUE(b_lower(w, k).is_zero());
      const auto up = b_upper(w, k);
      for (int p = 1; p <= r; ++p) {
        for (int q = r; q <= n; ++q) EXPECT_EQ(up(p, q), p + q == n + 1 ? 2 : 0);
      }
    }
  }
}

TEST(MinimalElements, LevelAndShapeErrors) {
  EXPECT_THROW(b_lower(DominantWeight({1, 1}), make_params(1, 1, 3)), LevelMismatch);
  EXPECT_THROW(b_upper(DominantWeight({1, 1, 1}), make_params(1, 1, 3)), DimensionMismatch);
}

TEST(Perfect, AllSmallKRCrystals) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int s = 1; s <= 2; ++s) {
        const auto rep = check_perfect(make_params(n, r, s));
        EXPECT_TRUE(rep.perfect()) << n << r << s;
        EXPECT_EQ(rep.conditions.size(), 5u);
        for (const auto& c : rep.conditions) EXPECT_EQ(c.status, ConditionStatus::passed);
      }
    }
  }
}

TEST(Perfect, FourCycleFailsUniqueness) {
  // A -1-> B -2-> C -1-> D -0-> A at level 1.
  ExplicitCrystal c(2, 4);
  c.add_edge(0, 1, 1).add_edge(1, 2, 2).add_edge(2, 1, 3).add_edge(3, 0, 0);
  const auto rep = check_perfect(c, 1);
  EXPECT_FALSE(rep.perfect());
  EXPECT_EQ(rep.condition(3).status, ConditionStatus::skipped);
  EXPECT_EQ(rep.condition(5).status, ConditionStatus::failed);
  EXPECT_NE(rep.condition(5).detail.find("(0,1,0) attained by 2"), std::string::npos)
      << rep.condition(5).detail;
}

TEST(GroundStatePath, LastColumnRotatesByOne) {
  const int n = 3;
  const auto k = make_params(n, n, 4);
  const DominantWeight w({1, 0, 2, 1});
  const auto path = ground_state_path(w, k, 8);
  EXPECT_EQ(path.weights[1], DominantWeight({1, 1, 0, 2}));
  for (int p = 1; p <= n; ++p) EXPECT_EQ(path.elements[0](p, n), w[p - 1]);
  EXPECT_EQ(path.period(), 4u);
  EXPECT_EQ(path.elements[4], path.elements[0]);
}

TEST(GroundStatePath, FiftyStepsEverywhere) {
  for (int n = 1; n <= 3; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (const auto& w : dominant_weights(n, 2)) {
        const auto path = ground_state_path(w, make_params(n, r, 2), 50);
        ASSERT_EQ(path.elements.size(), 50u);
        for (std::size_t i = 0; i + 1 < 50; ++i) {
          EXPECT_EQ(eps_profile(path.elements[i]), path.weights[i + 1].coeffs);
          EXPECT_EQ(phi_profile(path.elements[i]), path.weights[i].coeffs);
        }
      }
    }
  }
}
