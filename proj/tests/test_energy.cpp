#include <gtest/gtest.h>

#include "krc/energy.hpp"
#include "oracles.hpp"

using namespace krc;

namespace {

Pattern row(int s, int v) { return Pattern(make_params(1, 1, s), {v}); }

}  // namespace

TEST(LocalEnergy, RankOneExample) {
  EXPECT_EQ(local_energy({row(1, 1), row(3, 0)}), -1);
  EXPECT_EQ(local_energy({row(1, 0), row(3, 0)}), 0);
  EXPECT_EQ(local_energy_hw({row(1, 1), row(3, 0)}), -1);
}

TEST(LocalEnergy, ClosedFormMatchesRecursion) {
  for (int n = 1; n <= 3; ++n) {
    for (int r1 = 1; r1 <= n; ++r1) {
      for (int r2 = 1; r2 <= n; ++r2) {
        for (int s1 = 1; s1 <= 2; ++s1) {
          for (int s2 = 1; s2 <= 2; ++s2) {
            const auto k1 = make_params(n, r1, s1);
            const auto k2 = make_params(n, r2, s2);
            for (const auto& [x, h] : local_energy_oracle(k1, k2)) {
              EXPECT_EQ(local_energy(x), h) << to_string(x);
            }
          }
        }
      }
    }
  }
}

TEST(LocalEnergy, HighestWeightLaw) {
  for (int n = 1; n <= 4; ++n) {
    for (int r1 = 1; r1 <= n; ++r1) {
      for (int r2 = 1; r2 <= n; ++r2) {
        for (const auto& x : highest_weight_elements(make_params(n, r1, 2), make_params(n, r2, 3))) {
          EXPECT_EQ(local_energy(x), -x[0].total()) << to_string(x);
        }
      }
    }
  }
}

TEST(LocalEnergy, RowVectorNestedFormula) {
  for (int n = 1; n <= 4; ++n) {
    for (int s1 = 1; s1 <= 2; ++s1) {
      for (int s2 = s1; s2 <= 3; ++s2) {
        const auto t = make_kr_tensor({make_params(n, n, s1), make_params(n, n, s2)});
        for (const auto& x : t.elements()) {
          EXPECT_EQ(local_energy(x), oracle::energy_row_vectors(x[0], x[1])) << to_string(x);
        }
      }
    }
  }
}

TEST(LocalEnergy, InvariantUnderRMatrix) {
  const auto t = make_kr_tensor({make_params(3, 1, 2), make_params(3, 2, 1)});
  for (const auto& x : t.elements()) EXPECT_EQ(local_energy(rmatrix(x)), local_energy(x));
}

TEST(IntermediateSequence, EndsAtZeroSecondFactor) {
  for (int n = 1; n <= 3; ++n) {
    for (int r1 = 1; r1 <= n; ++r1) {
      for (int r2 = r1; r2 <= n; ++r2) {
        const auto t = make_kr_tensor({make_params(n, r1, 1), make_params(n, r2, 2)});
        for (const auto& x : t.elements()) {
          const auto seq = intermediate_sequence(x);
          EXPECT_EQ(seq.levels.size(), static_cast<std::size_t>(n - r2 + 1));
          EXPECT_TRUE(seq.levels.back().back()[1].is_zero()) << to_string(x);
          for (std::size_t s = 0; s < seq.levels.size(); ++s) {
            for (std::size_t r = 1; r < seq.colors[s].size(); ++r) {
              EXPECT_EQ(seq.colors[s][r], sequence_color(r2, static_cast<int>(s), static_cast<int>(r)));
            }
          }
        }
      }
    }
  }
}

TEST(IntermediateSequence, Colors) {
  EXPECT_EQ(sequence_color(3, 0, 1), 1);
  EXPECT_EQ(sequence_color(3, 0, 3), 3);
  EXPECT_EQ(sequence_color(3, 1, 3), 4);
  EXPECT_EQ(sequence_color(3, 1, 4), 3);
  EXPECT_EQ(sequence_color(3, 2, 5), 3);
}

TEST(GlobalEnergy, TwoFactorsIsLocal) {
  const auto t = make_kr_tensor({make_params(2, 1, 2), make_params(2, 2, 1)});
  for (const auto& x : t.elements()) EXPECT_EQ(global_energy(x), local_energy(x));
}

TEST(GlobalEnergy, ZeroAndShortTensors) {
  const auto k = make_params(2, 1, 1);
  EXPECT_EQ(global_energy({Pattern::zero(k), Pattern::zero(k), Pattern::zero(k)}), 0);
  EXPECT_EQ(global_energy({Pattern::zero(k)}), 0);
}

TEST(GlobalEnergy, ClassicallyInvariantAndMatchesRecursion) {
  const std::vector<KRParams> ks{make_params(2, 1, 1), make_params(2, 2, 2), make_params(2, 1, 2)};
  const auto t = make_kr_tensor(ks);
  std::map<std::pair<KRParams, KRParams>, EnergyTable> tables;
  std::map<std::pair<KRParams, KRParams>, RMatrixTable> sigmas;
  auto local = [&](const TensorElement& p) {
    const auto key = std::make_pair(p[0].params(), p[1].params());
    if (!tables.count(key)) tables[key] = local_energy_oracle(key.first, key.second);
    return tables[key].at(p);
  };
  auto sigma = [&](const TensorElement& p) {
    const auto key = std::make_pair(p[0].params(), p[1].params());
    if (!sigmas.count(key)) sigmas[key] = rmatrix_oracle(key.first, key.second);
    return sigmas[key].at(p);
  };
  for (const auto& x : t.elements()) {
    const int d = global_energy(x);
    EXPECT_EQ(d, global_energy(x, local, sigma)) << to_string(x);
    for (Color l = 1; l <= 2; ++l) {
      if (auto y = t.f(x, l)) {
        EXPECT_EQ(global_energy(*y), d);
      }
    }
  }
}
