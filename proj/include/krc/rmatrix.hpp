#pragma once

// Combinatorial R-matrix sigma : B^{r1,s1} (x) B^{r2,s2} -> B^{r2,s2} (x) B^{r1,s1}.
//
// Classical highest weight elements are A (x) 0 with A supported on the
// anti-diagonal cells (rr - j, rt + j), j = 0..k, where rr = min(r1, r2),
// rt = max(r1, r2), k = min(rr - 1, n - rt), and entries weakly decreasing
// along j and bounded by min(s1, s2).  On those, sigma keeps the entries and
// swaps the shapes.  Arbitrary elements are transported to their highest
// weight element by classical raising operators and back.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/tensor.hpp"

namespace krc {

/// The numbers rr, rt, k, ss attached to a pair of KR crystals.
struct PairShape {
  int rr = 1;  ///< min(r1, r2)
  int rt = 1;  ///< max(r1, r2)
  int k = 0;   ///< min(rr - 1, n - rt)
  int ss = 1;  ///< min(s1, s2)
};

inline PairShape pair_shape(const KRParams& k1, const KRParams& k2) {
  if (k1.n != k2.n) throw InvalidParams("tensor factors must share the rank n");
  PairShape sh;
  sh.rr = std::min(k1.r, k2.r);
  sh.rt = std::max(k1.r, k2.r);
  sh.k = std::min(sh.rr - 1, k1.n - sh.rt);
  sh.ss = std::min(k1.s, k2.s);
  return sh;
}

/// Weakly decreasing tuples (a_0 >= ... >= a_k), a_0 <= bound, in
/// lexicographic order.
inline std::vector<std::vector<int>> decreasing_tuples(int length, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(length, 0);
  std::function<void(int, int)> rec = [&](int pos, int cap) {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, bound);
  return out;
}

/// Places the tuple on the anti-diagonal of a zero pattern with shape `k`.
inline Pattern anti_diagonal_pattern(const KRParams& k, const PairShape& sh,
                                     const std::vector<int>& tuple) {
  Pattern a = Pattern::zero(k);
  for (int j = 0; j <= sh.k; ++j) a = a.with(sh.rr - j, sh.rt + j, tuple[j]);
  return a;
}

/// All classical highest weight elements of B1 (x) B2, ordered
/// lexicographically by their anti-diagonal tuple.
inline std::vector<TensorElement> highest_weight_elements(const KRParams& k1,
                                                          const KRParams& k2) {
  check_params(k1);
  check_params(k2);
  const auto sh = pair_shape(k1, k2);
  std::vector<TensorElement> out;
  for (const auto& t : decreasing_tuples(sh.k + 1, sh.ss)) {
    out.push_back({anti_diagonal_pattern(k1, sh, t), Pattern::zero(k2)});
  }
  return out;
}

/// The anti-diagonal tuple (a_{rr-j, rt+j})_j of the first factor.
inline std::vector<int> anti_diagonal(const TensorElement& x) {
  const auto sh = pair_shape(x.at(0).params(), x.at(1).params());
  std::vector<int> t;
  for (int j = 0; j <= sh.k; ++j) t.push_back(x[0](sh.rr - j, sh.rt + j));
  return t;
}

inline bool is_classical_highest_weight(const TensorElement& x) {
  const auto t = tensor_of(x);
  return is_highest_weight(t, x, classical_colors(t.rank()));
}

inline TensorElement rmatrix_on_hw(const TensorElement& x) {
  if (x.size() != 2) throw DimensionMismatch("the R-matrix acts on two-fold tensors");
  if (!is_classical_highest_weight(x)) {
    throw NotHighestWeight("rmatrix_on_hw needs a classical highest weight element");
  }
  const auto& k1 = x[0].params();
  const auto& k2 = x[1].params();
  const auto sh = pair_shape(k1, k2);
  return {anti_diagonal_pattern(k2, sh, anti_diagonal(x)), Pattern::zero(k1)};
}

/// Raising word to the classical highest weight element: repeatedly apply
/// the smallest classical color with eps > 0.  The word lists colors in
/// application order.
template <Crystal C>
std::pair<typename C::value_type, std::vector<Color>> raise_to_highest_weight(
    const C& c, typename C::value_type x) {
  std::vector<Color> word;
  for (;;) {
    Color pick = 0;
    for (Color l = 1; l <= c.rank(); ++l) {
      if (c.eps(x, l) > 0) {
        pick = l;
        break;
      }
    }
    if (pick == 0) return {std::move(x), std::move(word)};
    x = std::move(*c.e(x, pick));
    word.push_back(pick);
  }
}

inline TensorElement rmatrix(const TensorElement& x) {
  if (x.size() != 2) throw DimensionMismatch("the R-matrix acts on two-fold tensors");
  const auto source = tensor_of(x);
  auto [top, word] = raise_to_highest_weight(source, x);
  TensorElement y = rmatrix_on_hw(top);
  const auto target = tensor_of(y);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    auto next = target.f(y, *it);
    if (!next) throw OracleFailure("R-matrix transport hit the crystal zero");
    y = std::move(*next);
  }
  return y;
}

using RMatrixTable = std::map<TensorElement, TensorElement>;

/// Classical weight key (pairings with alpha_1..alpha_n).
inline std::vector<int> classical_key(const KRTensor& t, const TensorElement& x) {
  auto w = t.weight(x).pairings;
  return {w.begin() + 1, w.end()};
}

/// The unique classical isomorphism B1 (x) B2 -> B2 (x) B1 obtained by
/// matching highest weight elements of equal classical weight and
/// propagating along f-edges.  Also checks that it intertwines e_0 and f_0.
inline RMatrixTable rmatrix_oracle(const KRParams& k1, const KRParams& k2,
                                   std::size_t cap = kDefaultSizeCap) {
  const auto src = make_kr_tensor({k1, k2});
  const auto dst = make_kr_tensor({k2, k1});
  const auto classical = classical_colors(k1.n);

  auto hw_by_weight = [&](const KRTensor& t) {
    std::map<std::vector<int>, TensorElement> out;
    for (const auto& x : t.elements(cap)) {
      if (!is_highest_weight(t, x, classical)) continue;
      if (!out.emplace(classical_key(t, x), x).second) {
        throw OracleFailure("two classical highest weight elements share a weight");
      }
    }
    return out;
  };
  const auto all_src = src.elements(cap);
  const auto hw_src = hw_by_weight(src);
  const auto hw_dst = hw_by_weight(dst);
  if (hw_src.size() != hw_dst.size()) {
    throw OracleFailure("highest weight sets of B1(x)B2 and B2(x)B1 differ in size");
  }

  RMatrixTable table;
  for (const auto& [key, top] : hw_src) {
    auto it = hw_dst.find(key);
    if (it == hw_dst.end()) throw OracleFailure("no highest weight partner of equal weight");
    std::queue<TensorElement> todo;
    table.emplace(top, it->second);
    todo.push(top);
    while (!todo.empty()) {
      auto x = std::move(todo.front());
      todo.pop();
      const auto& y = table.at(x);
      for (Color l : classical) {
        auto fx = src.f(x, l);
        auto fy = dst.f(y, l);
        if (fx.has_value() != fy.has_value()) {
          throw OracleFailure("f-edge structure differs under weight matching");
        }
        if (!fx) continue;
        auto [pos, inserted] = table.emplace(*fx, *fy);
        if (inserted) {
          todo.push(*fx);
        } else if (pos->second != *fy) {
          throw OracleFailure("edge propagation gives conflicting images");
        }
      }
    }
  }
  if (table.size() != all_src.size()) {
    throw OracleFailure("classical components do not cover B1(x)B2");
  }
  for (const auto& [x, y] : table) {
    for (auto op : {0, 1}) {
      auto ax = op ? src.e(x, 0) : src.f(x, 0);
      auto ay = op ? dst.e(y, 0) : dst.f(y, 0);
      if (ax.has_value() != ay.has_value() || (ax && table.at(*ax) != *ay)) {
        throw OracleFailure("classical isomorphism does not intertwine e_0/f_0");
      }
    }
  }
  return table;
}

}  // namespace krc
