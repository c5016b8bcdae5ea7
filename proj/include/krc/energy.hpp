#pragma once

// Local and global energy functions on tensor products of KR crystals.
//
// The local energy H on B1 (x) B2 is normalized by H(0 (x) 0) = 0, is
// constant along classical edges, and along e_0 changes by -1 when e_0 acts
// on the first factor of both x and sigma(x) (LL), by +1 when it acts on the
// second factor of both (RR), and by 0 otherwise.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tensor.hpp"

namespace krc {

using EnergyTable = std::map<TensorElement, int>;

namespace detail {

/// Energy increment along y = e_l x.
inline int energy_step(const KRTensor& src, const KRTensor& dst, const RMatrixTable& sigma,
                       const TensorElement& x, Color l) {
  if (l != 0) return 0;
  const auto here = src.e_position(x, 0);
  const auto there = dst.e_position(sigma.at(x), 0);
  if (here == 0 && there == 0) return -1;
  if (here == 1 && there == 1) return +1;
  return 0;
}

}  // namespace detail

/// Local energy of every element by propagating the defining recursion from
/// 0 (x) 0 over all edges; every edge is re-checked, so a cycle with nonzero
/// net change raises InconsistentRecursion.
inline EnergyTable local_energy_oracle(const KRParams& k1, const KRParams& k2,
                                       std::size_t cap = kDefaultSizeCap) {
  const auto src = make_kr_tensor({k1, k2});
  const auto dst = make_kr_tensor({k2, k1});
  const auto sigma = rmatrix_oracle(k1, k2, cap);
  const int n = k1.n;

  EnergyTable h;
  const TensorElement start = src.zero_element();
  h.emplace(start, 0);
  std::queue<TensorElement> todo;
  todo.push(start);
  auto assign = [&](const TensorElement& y, int value) {
    auto [it, inserted] = h.emplace(y, value);
    if (inserted) {
      todo.push(y);
    } else if (it->second != value) {
      std::ostringstream os;
      os << "energy recursion is path dependent at " << to_string(y);
      throw InconsistentRecursion(os.str());
    }
  };
  while (!todo.empty()) {
    const auto x = todo.front();
    todo.pop();
    const int hx = h.at(x);
    for (Color l = 0; l <= n; ++l) {
      if (auto y = src.e(x, l)) assign(*y, hx + detail::energy_step(src, dst, sigma, x, l));
      if (auto z = src.f(x, l)) assign(*z, hx - detail::energy_step(src, dst, sigma, *z, l));
    }
  }
  if (h.size() != sigma.size()) {
    throw InconsistentRecursion("B1(x)B2 is not connected; energy is not determined");
  }
  return h;
}

/// Negative entry sum of the first factor of a classical highest weight
/// element.
inline int local_energy_hw(const TensorElement& x) {
  if (x.size() != 2) throw DimensionMismatch("local energy acts on two-fold tensors");
  if (!is_classical_highest_weight(x)) {
    throw NotHighestWeight("local_energy_hw needs a classical highest weight element");
  }
  return -x[0].total();
}

/// The family A_r^s (x) B_r^s, 0 <= s <= n - r2, 0 <= r <= r2 + s.  Each step
/// applies e_c^{(eps_c(A) - phi_c(B))_+} to A and e_c^{eps_c(B)} to B, which is
/// the maximal power of e_c on the tensor A (x) B.  The color at step r of
/// level s is r for r < r2 and 2 r2 + s - r for r >= r2.
struct IntermediateSeq {
  int r2 = 1;
  std::vector<std::vector<TensorElement>> levels;    ///< levels[s][r] = A_r^s (x) B_r^s
  std::vector<std::vector<int>> a_exponents;         ///< exponent applied to A at (s, r), r >= 1
  std::vector<std::vector<Color>> colors;            ///< color used at (s, r), r >= 1

  const TensorElement& at(int s, int r) const { return levels.at(s).at(r); }

  /// sum over s of the A-exponent at the color-r2 step (r = r2 + s).
  int correction() const {
    int c = 0;
    for (std::size_t s = 0; s < levels.size(); ++s) c += a_exponents[s][r2 + s];
    return c;
  }
};

inline Color sequence_color(int r2, int s, int r) { return r < r2 ? r : 2 * r2 + s - r; }

inline IntermediateSeq intermediate_sequence(const TensorElement& x) {
  if (x.size() != 2) throw DimensionMismatch("intermediate_sequence acts on two-fold tensors");
  const auto& k1 = x[0].params();
  const auto& k2 = x[1].params();
  pair_shape(k1, k2);
  const KRCrystal c1(k1);
  const KRCrystal c2(k2);
  const int n = k1.n;
  IntermediateSeq seq;
  seq.r2 = k2.r;
  for (int s = 0; s <= n - k2.r; ++s) {
    std::vector<TensorElement> level;
    std::vector<int> exps{0};
    std::vector<Color> cols{0};
    level.push_back(s == 0 ? x : seq.levels.back().back());
    for (int r = 1; r <= k2.r + s; ++r) {
      const Color c = sequence_color(k2.r, s, r);
      const Pattern a = level.back()[0];
      const Pattern b = level.back()[1];
      const int ka = std::max(0, c1.eps(a, c) - c2.phi(b, c));
      const int kb = c2.eps(b, c);
      auto na = e_power(c1, a, c, ka);
      auto nb = e_power(c2, b, c, kb);
      if (!na || !nb) throw std::logic_error("intermediate sequence exponent exceeds eps");
      level.push_back({std::move(*na), std::move(*nb)});
      exps.push_back(ka);
      cols.push_back(c);
    }
    seq.levels.push_back(std::move(level));
    seq.a_exponents.push_back(std::move(exps));
    seq.colors.push_back(std::move(cols));
  }
  return seq;
}

namespace detail {

// Closed form, valid for s1 <= s2 and r1 <= r2.
inline int local_energy_ordered(const TensorElement& x) {
  const auto& k1 = x[0].params();
  const auto sh = pair_shape(k1, x[1].params());
  int block = 0;
  for (int p = 1; p <= sh.rr; ++p) {
    for (int q = sh.rt; q <= k1.n; ++q) {
      if (x[0].contains(p, q)) block += x[0](p, q);
    }
  }
  return -block + intermediate_sequence(x).correction();
}

}  // namespace detail

/// Local energy from the closed formula.  For s1 > s2 the value is read off
/// sigma(x), since H is invariant under the R-matrix.
inline int local_energy(const TensorElement& x) {
  if (x.size() != 2) throw DimensionMismatch("local energy acts on two-fold tensors");
  if (x[0].params().s > x[1].params().s) return local_energy(rmatrix(x));
  return detail::local_energy_ordered(x);
}

/// D_B = sum over i < j of H on slots (i, i+1) after moving factor j to
/// slot i+1 with R-matrices sigma_{j-1}, ..., sigma_{i+1}.  Slots are 0-based.
template <class LocalEnergy, class Sigma>
int global_energy(const TensorElement& x, LocalEnergy&& local, Sigma&& sigma) {
  const std::size_t count = x.size();
  if (count < 2) return 0;
  for (const auto& a : x) {
    if (a.params().n != x.front().params().n) throw InvalidParams("factors must share n");
  }
  int total = 0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      TensorElement y = x;
      for (std::size_t k = j - 1; k > i; --k) {
        auto swapped = sigma(TensorElement{y[k], y[k + 1]});
        y[k] = std::move(swapped[0]);
        y[k + 1] = std::move(swapped[1]);
      }
      total += local(TensorElement{y[i], y[i + 1]});
    }
  }
  return total;
}

template <class LocalEnergy>
int global_energy(const TensorElement& x, LocalEnergy&& local) {
  return global_energy(x, local, [](const TensorElement& pair) { return rmatrix(pair); });
}

inline int global_energy(const TensorElement& x) {
  return global_energy(x, [](const TensorElement& pair) { return local_energy(pair); });
}

}  // namespace krc
