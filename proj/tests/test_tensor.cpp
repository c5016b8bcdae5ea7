#include <gtest/gtest.h>

#include "krc/tensor.hpp"
#include "oracles.hpp"

using namespace krc;

namespace {

Pattern row(int s, int v) { return Pattern(make_params(1, 1, s), {v}); }

std::vector<std::vector<KRParams>> small_products(int n, int max_s, int arity) {
  std::vector<KRParams> ks;
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= max_s; ++s) ks.push_back(make_params(n, r, s));
  }
  std::vector<std::vector<KRParams>> out{{}};
  for (int i = 0; i < arity; ++i) {
    std::vector<std::vector<KRParams>> next;
    for (const auto& p : out) {
      for (const auto& k : ks) {
        auto q = p;
        q.push_back(k);
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Tensor, RankOneExamples) {
  const TensorElement zz{row(1, 0), row(3, 0)};
  EXPECT_EQ(tensor_f(zz, 1), (TensorElement{row(1, 0), row(3, 1)}));
  EXPECT_EQ(tensor_phi(zz, 1), 4);
  EXPECT_EQ(tensor_eps(zz, 1), 0);
  EXPECT_EQ(tensor_f((TensorElement{row(1, 1), row(3, 3)}), 0),
            (TensorElement{row(1, 1), row(3, 2)}));
  EXPECT_EQ(tensor_e((TensorElement{row(1, 0), row(3, 1)}), 1), zz);
}

TEST(Tensor, FirstFactorRule) {
  // f acts on the first factor iff eps(b1) >= phi(b2).
  const TensorElement x{row(2, 1), row(2, 1)};
  const auto t = tensor_of(x);
  EXPECT_EQ(t.f_position(x, 1), 0u);
  EXPECT_EQ(t.e_position(x, 1), 1u);
}

TEST(Tensor, ArityAndRankErrors) {
  EXPECT_THROW(make_kr_tensor({make_params(1, 1, 1), make_params(2, 1, 1)}), InvalidParams);
  const auto t = make_kr_tensor({make_params(1, 1, 1), make_params(1, 1, 1)});
  EXPECT_THROW(t.f(TensorElement{row(1, 0)}, 1), DimensionMismatch);
}

TEST(Tensor, ToString) {
  EXPECT_EQ(to_string(TensorElement{row(1, 1), row(3, 2)}), "1 ⊗ 2");
}

TEST(Tensor, MatchesSignatureRuleOnPairs) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& ks : small_products(n, 2, 2)) {
      const auto t = make_kr_tensor(ks);
      for (const auto& x : t.elements()) {
        for (Color l = 0; l <= n; ++l) {
          EXPECT_EQ(t.f(x, l), oracle::signature_f(x, l)) << to_string(x) << " l=" << l;
          EXPECT_EQ(t.e(x, l), oracle::signature_e(x, l)) << to_string(x) << " l=" << l;
          EXPECT_EQ(t.phi(x, l), oracle::string_down(t, x, l));
          EXPECT_EQ(t.eps(x, l), oracle::string_up(t, x, l));
        }
      }
    }
  }
}

TEST(Tensor, MatchesSignatureRuleOnTriples) {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& ks : small_products(n, 2, 3)) {
      const auto t = make_kr_tensor(ks);
      for (const auto& x : t.elements()) {
        for (Color l = 0; l <= n; ++l) {
          EXPECT_EQ(t.f(x, l), oracle::signature_f(x, l)) << to_string(x) << " l=" << l;
          EXPECT_EQ(t.e(x, l), oracle::signature_e(x, l)) << to_string(x) << " l=" << l;
        }
      }
    }
  }
}

TEST(Tensor, WeightIsAdditive) {
  for (const auto& ks : small_products(2, 2, 2)) {
    const auto t = make_kr_tensor(ks);
    for (const auto& x : t.elements()) {
      const auto w = t.weight(x);
      for (Color l = 0; l <= 2; ++l) {
        EXPECT_EQ(w.pairings[l], affine_weight(x[0]).pairings[l] + affine_weight(x[1]).pairings[l]);
        EXPECT_EQ(t.phi(x, l) - t.eps(x, l), w.pairings[l]);
      }
    }
  }
}

TEST(Tensor, GoldenGraphsOfB11AndB13) {
  const auto left = build_graph(make_kr_tensor({make_params(1, 1, 1), make_params(1, 1, 3)}));
  const auto right = build_graph(make_kr_tensor({make_params(1, 1, 3), make_params(1, 1, 1)}));
  auto edges_of = [](const auto& g) {
    std::set<std::tuple<std::string, Color, std::string>> out;
    for (const auto& ed : g.edges) {
      const auto& a = g.vertices[ed.source];
      const auto& b = g.vertices[ed.target];
      out.emplace(std::to_string(a[0](1, 1)) + std::to_string(a[1](1, 1)), ed.color,
                  std::to_string(b[0](1, 1)) + std::to_string(b[1](1, 1)));
    }
    return out;
  };
  const std::set<std::tuple<std::string, Color, std::string>> want_left{
      {"00", 1, "01"}, {"01", 1, "02"}, {"02", 1, "03"}, {"03", 1, "13"},
      {"10", 1, "11"}, {"11", 1, "12"}, {"13", 0, "12"}, {"12", 0, "11"},
      {"11", 0, "10"}, {"10", 0, "00"}, {"03", 0, "02"}, {"02", 0, "01"}};
  const std::set<std::tuple<std::string, Color, std::string>> want_right{
      {"00", 1, "01"}, {"01", 1, "11"}, {"11", 1, "21"}, {"21", 1, "31"},
      {"10", 1, "20"}, {"20", 1, "30"}, {"31", 0, "30"}, {"30", 0, "20"},
      {"20", 0, "10"}, {"10", 0, "00"}, {"21", 0, "11"}, {"11", 0, "01"}};
  EXPECT_EQ(edges_of(left), want_left);
  EXPECT_EQ(edges_of(right), want_right);
}
