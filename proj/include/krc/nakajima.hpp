#pragma once

// Nakajima monomials: Laurent monomials in Y_i(k), i a node of a finite type
// A Dynkin diagram and k an integer shift, with the crystal structure in
// which f_l divides by A_l(n_f) and e_l multiplies by A_l(n_e), where
// A_l(k) = Y_l(k) Y_l(k+1) prod_{i != l} Y_i(k + c_{i,l})^{<alpha_i^vee, alpha_l>}.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krc/error.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/pattern.hpp"

namespace krc {

/// Sparse exponent map (i, k) -> y_i(k); zero exponents are never stored.
class NakajimaMonomial {
 public:
  using Key = std::pair<int, int>;  ///< (node, shift)

  NakajimaMonomial() = default;

  static NakajimaMonomial y(int node, int shift, int power = 1) {
    NakajimaMonomial m;
    m.multiply(node, shift, power);
    return m;
  }

  int exponent(int node, int shift) const {
    auto it = exps_.find({node, shift});
    return it == exps_.end() ? 0 : it->second;
  }

  NakajimaMonomial& multiply(int node, int shift, int power) {
    if (power == 0) return *this;
    auto [it, inserted] = exps_.try_emplace({node, shift}, 0);
    it->second += power;
    if (it->second == 0) exps_.erase(it);
    return *this;
  }

  NakajimaMonomial& operator*=(const NakajimaMonomial& o) {
    for (const auto& [key, v] : o.exps_) multiply(key.first, key.second, v);
    return *this;
  }
  friend NakajimaMonomial operator*(NakajimaMonomial a, const NakajimaMonomial& b) {
    a *= b;
    return a;
  }

  /// Shifts carrying a nonzero exponent for `node`, ascending.
  std::vector<std::pair<int, int>> row(int node) const {
    std::vector<std::pair<int, int>> out;
    for (auto it = exps_.lower_bound({node, std::numeric_limits<int>::min()});
         it != exps_.end() && it->first.first == node; ++it) {
      out.emplace_back(it->first.second, it->second);
    }
    return out;
  }

  const std::map<Key, int>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return exps_.empty(); }

  friend bool operator==(const NakajimaMonomial&, const NakajimaMonomial&) = default;
  friend auto operator<=>(const NakajimaMonomial& a, const NakajimaMonomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::map<Key, int> exps_;
};

inline std::string to_string(const NakajimaMonomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, v] : m.exponents()) {
    if (!first) os << ' ';
    first = false;
    os << "Y" << key.first << "(" << key.second << ")";
    if (v != 1) os << "^" << v;
  }
  return os.str();
}

/// Integers c_{i,j} (i != j) with c_{i,j} + c_{j,i} = 1.
class SignConvention {
 public:
  /// c_{i,j} = 1 if i < j, 0 otherwise.
  static SignConvention lower() { return SignConvention(true); }
  /// c_{i,j} = 1 if i > j, 0 otherwise.
  static SignConvention upper() { return SignConvention(false); }

  int operator()(int i, int j) const {
    if (i == j) throw IndexOutOfRange("c_{i,i} is not defined");
    return (i < j) == less_ ? 1 : 0;
  }

 private:
  explicit SignConvention(bool less) : less_(less) {}
  bool less_;
};

/// The monomial crystal of finite type A_rank (nodes 1..rank).
class NakajimaCrystal {
 public:
  using value_type = NakajimaMonomial;

  explicit NakajimaCrystal(int rank, SignConvention c = SignConvention::lower())
      : rank_(rank), c_(c) {
    if (rank < 1) throw InvalidParams("monomial crystal rank must be positive");
  }

  int rank() const noexcept { return rank_; }

  /// Coefficients of wt on omega_1..omega_rank.
  std::vector<int> weight(const NakajimaMonomial& m) const {
    std::vector<int> w(rank_, 0);
    for (const auto& [key, v] : m.exponents()) {
      if (key.first >= 1 && key.first <= rank_) w[key.first - 1] += v;
    }
    return w;
  }

  int phi(const NakajimaMonomial& m, Color l) const { return phi_data(m, l).first; }
  int eps(const NakajimaMonomial& m, Color l) const { return eps_data(m, l).first; }

  /// n_f^l; meaningful when phi_l > 0.
  int n_f(const NakajimaMonomial& m, Color l) const { return phi_data(m, l).second; }
  /// n_e^l; meaningful when eps_l > 0.
  int n_e(const NakajimaMonomial& m, Color l) const { return eps_data(m, l).second; }

  /// A_l(k) for this convention.
  NakajimaMonomial root_monomial(Color l, int k) const {
    check(l);
    NakajimaMonomial a;
    a.multiply(l, k, 1).multiply(l, k + 1, 1);
    for (int i = 1; i <= rank_; ++i) {
      if (i == l || std::abs(i - l) != 1) continue;  // <alpha_i^vee, alpha_l> = -1 for neighbours
      a.multiply(i, k + c_(i, l), -1);
    }
    return a;
  }

  std::optional<NakajimaMonomial> f(const NakajimaMonomial& m, Color l) const {
    auto [value, at] = phi_data(m, l);
    if (value == 0) return std::nullopt;
    return m * inverse(root_monomial(l, at));
  }

  std::optional<NakajimaMonomial> e(const NakajimaMonomial& m, Color l) const {
    auto [value, at] = eps_data(m, l);
    if (value == 0) return std::nullopt;
    return m * root_monomial(l, at);
  }

 private:
  void check(Color l) const {
    if (l < 1 || l > rank_) throw IndexOutOfRange("monomial crystal color out of range");
  }

  static NakajimaMonomial inverse(const NakajimaMonomial& m) {
    NakajimaMonomial out;
    for (const auto& [key, v] : m.exponents()) out.multiply(key.first, key.second, -v);
    return out;
  }

  // (max prefix sum over k <= n, smallest n attaining it).  The empty prefix
  // (n below the support) contributes 0; its position is reported as one
  // less than the smallest support shift.
  std::pair<int, int> phi_data(const NakajimaMonomial& m, Color l) const {
    check(l);
    const auto row = m.row(l);
    if (row.empty()) return {0, 0};
    int best = 0;
    int at = row.front().first - 1;
    int running = 0;
    for (const auto& [shift, v] : row) {
      running += v;
      if (running > best) {
        best = running;
        at = shift;
      }
    }
    return {best, at};
  }

  // (max over n of -sum_{k > n} y_l(k), largest n attaining it).
  std::pair<int, int> eps_data(const NakajimaMonomial& m, Color l) const {
    check(l);
    const auto row = m.row(l);
    if (row.empty()) return {0, 0};
    int best = 0;
    int at = row.back().first;  // n at or above the last shift: empty suffix
    int running = 0;            // -sum_{k > n}
    for (auto it = row.rbegin(); it != row.rend(); ++it) {
      running -= it->second;
      // running is now -sum_{k >= shift} = value at n = shift - 1
      if (running > best) {
        best = running;
        at = it->first - 1;
      }
    }
    return {best, at};
  }

  int rank_;
  SignConvention c_;
};

/// The map from a pattern of B^{i,m} (2 <= i <= n) into monomials of type
/// A_2, sending the {0, 1}-colored structure to the {1, 2}-colored one:
/// Y_1(1)^{sum_j b_{j,n} - m} prod_k Y_1(k)^{b_{1,n-k}} Y_2(k)^{b_{2,n-k}}
/// Y_2(k+1)^{-b_{1,n-k}}, k = 0..n-i.
inline NakajimaMonomial psi_embedding(const Pattern& b) {
  const auto& k = b.params();
  if (k.r < 2) throw InvalidParams("psi_embedding needs a pattern with at least two columns");
  NakajimaMonomial m;
  int last_row = 0;
  for (int j = 1; j <= k.r; ++j) last_row += b(j, k.n);
  m.multiply(1, 1, last_row - k.s);
  for (int shift = 0; shift <= k.n - k.r; ++shift) {
    m.multiply(1, shift, b(1, k.n - shift));
    m.multiply(2, shift, b(2, k.n - shift));
    m.multiply(2, shift + 1, -b(1, k.n - shift));
  }
  return m;
}

/// Convention under which psi_embedding intertwines (f_0, f_1) on patterns
/// with (f_1, f_2) on monomials: c_{1,2} = 0, c_{2,1} = 1.
inline SignConvention psi_convention() { return SignConvention::upper(); }

}  // namespace krc
