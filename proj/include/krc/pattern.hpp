#pragma once

// Polytope patterns realizing the Kirillov-Reshetikhin crystal B^{r,s} of
// type A_n^{(1)}.  A pattern is a grid of non-negative integers a_{p,q} with
// column index 1 <= p <= r and row index r <= q <= n such that every monotone
// staircase from (1, r) to (r, n) sums to at most s.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krc/error.hpp"

namespace krc {

/// Color of a Kashiwara operator.  Color 0 is the affine node.
using Color = int;

struct KRParams {
  int n = 1;  ///< rank of A_n^{(1)}
  int r = 1;  ///< classical node
  int s = 1;  ///< level

  int rows() const noexcept { return n - r + 1; }
  int cols() const noexcept { return r; }
  std::size_t cells() const noexcept { return static_cast<std::size_t>(rows()) * cols(); }

  friend auto operator<=>(const KRParams&, const KRParams&) = default;
};

inline void check_params(const KRParams& k) {
  if (k.n < 1 || k.r < 1 || k.r > k.n || k.s < 1) {
    std::ostringstream os;
    os << "invalid KR parameters n=" << k.n << " r=" << k.r << " s=" << k.s
       << " (need n >= 1, 1 <= r <= n, s >= 1)";
    throw InvalidParams(os.str());
  }
}

inline KRParams make_params(int n, int r, int s) {
  KRParams k{n, r, s};
  check_params(k);
  return k;
}

/// A grid a_{p,q}.  Entries are stored row-major: rows q = r..n from top to
/// bottom, each row listing p = 1..r.  Construction does not check the
/// polytope constraint; use validate_pattern for untrusted input.
class Pattern {
 public:
  Pattern() = default;

  Pattern(KRParams params, std::vector<int> row_major)
      : params_(params), a_(std::move(row_major)) {
    if (a_.size() != params_.cells()) {
      throw DimensionMismatch("pattern entry count does not match the grid shape");
    }
  }

  static Pattern zero(KRParams params) {
    return Pattern(params, std::vector<int>(params.cells(), 0));
  }

  const KRParams& params() const noexcept { return params_; }
  std::span<const int> entries() const noexcept { return a_; }

  /// a_{p,q} with 1 <= p <= r and r <= q <= n.
  int operator()(int p, int q) const { return a_[index(p, q)]; }

  bool contains(int p, int q) const noexcept {
    return p >= 1 && p <= params_.r && q >= params_.r && q <= params_.n;
  }

  /// Copy with a_{p,q} shifted by delta.
  Pattern adjusted(int p, int q, int delta) const {
    Pattern out = *this;
    out.a_[index(p, q)] += delta;
    return out;
  }

  Pattern with(int p, int q, int value) const {
    Pattern out = *this;
    out.a_[index(p, q)] = value;
    return out;
  }

  int total() const { return std::accumulate(a_.begin(), a_.end(), 0); }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](int v) { return v == 0; });
  }

  /// rows[q - r][p - 1] = a_{p,q}
  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(params_.rows());
    for (int q = params_.r; q <= params_.n; ++q) {
      auto first = a_.begin() + static_cast<std::ptrdiff_t>(q - params_.r) * params_.r;
      out[q - params_.r].assign(first, first + params_.r);
    }
    return out;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& x, const Pattern& y) {
    if (auto c = x.params_ <=> y.params_; c != 0) return c;
    return std::lexicographical_compare_three_way(x.a_.begin(), x.a_.end(), y.a_.begin(),
                                                  y.a_.end());
  }

 private:
  std::size_t index(int p, int q) const noexcept {
    return static_cast<std::size_t>(q - params_.r) * params_.r + (p - 1);
  }

  KRParams params_{};
  std::vector<int> a_;
};

/// Compact one-line rendering: rows separated by '/', entries by ','.
/// B^{1,s} patterns print as their single entry.
inline std::string to_string(const Pattern& a) {
  std::ostringstream os;
  const auto& k = a.params();
  for (int q = k.r; q <= k.n; ++q) {
    if (q > k.r) os << '/';
    for (int p = 1; p <= k.r; ++p) {
      if (p > 1) os << ',';
      os << a(p, q);
    }
  }
  return os.str();
}

struct PathMax {
  int sum = 0;
  std::vector<std::pair<int, int>> path;  ///< (p, q) cells from (1, r) to (r, n)
};

/// Maximum staircase sum by dynamic programming, with one maximizing path.
inline PathMax max_path(const Pattern& a) {
  const auto& k = a.params();
  const int cols = k.cols();
  // best[(q - r) * cols + (p - 1)]
  std::vector<int> best(k.cells(), 0);
  auto at = [&](int p, int q) -> int& { return best[(q - k.r) * cols + (p - 1)]; };
  for (int q = k.r; q <= k.n; ++q) {
    for (int p = 1; p <= k.r; ++p) {
      int prev = 0;
      if (p > 1) prev = at(p - 1, q);
      if (q > k.r) prev = std::max(prev, at(p, q - 1));
      at(p, q) = prev + a(p, q);
    }
  }
  PathMax out;
  out.sum = at(k.r, k.n);
  int p = k.r;
  int q = k.n;
  out.path.emplace_back(p, q);
  while (p > 1 || q > k.r) {
    if (p > 1 && (q == k.r || at(p - 1, q) >= at(p, q - 1))) {
      --p;
    } else {
      --q;
    }
    out.path.emplace_back(p, q);
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

/// Builds a pattern from rows[q - r][p - 1] = a_{p,q} and checks the polytope
/// constraint.
inline Pattern validate_pattern(const std::vector<std::vector<int>>& rows, KRParams params) {
  check_params(params);
  if (static_cast<int>(rows.size()) != params.rows()) {
    std::ostringstream os;
    os << "expected " << params.rows() << " rows, got " << rows.size();
    throw DimensionMismatch(os.str());
  }
  std::vector<int> flat;
  flat.reserve(params.cells());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != params.cols()) {
      std::ostringstream os;
      os << "expected " << params.cols() << " columns, got " << row.size();
      throw DimensionMismatch(os.str());
    }
    for (int v : row) {
      if (v < 0) throw NegativeEntry("pattern entries must be non-negative");
      flat.push_back(v);
    }
  }
  Pattern a(params, std::move(flat));
  auto m = max_path(a);
  if (m.sum > params.s) {
    std::ostringstream os;
    os << "staircase sum " << m.sum << " exceeds level " << params.s;
    throw PathSumExceeded(os.str(), std::move(m.path), m.sum);
  }
  return a;
}

inline bool is_valid(const Pattern& a) {
  const auto e = a.entries();
  if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) return false;
  return max_path(a).sum <= a.params().s;
}

inline constexpr std::size_t kDefaultSizeCap = 2'000'000;

/// Every lattice point of the polytope, in lexicographic order of the
/// row-major entries.  Branches are pruned with the running staircase maxima,
/// so every leaf is valid.
inline std::vector<Pattern> enumerate_crystal(KRParams params,
                                              std::size_t cap = kDefaultSizeCap) {
  check_params(params);
  const int cols = params.cols();
  const std::size_t cells = params.cells();
  std::vector<int> entries(cells, 0);
  std::vector<int> best(cells, 0);
  std::vector<Pattern> out;

  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells) {
      if (out.size() >= cap) {
        throw SizeLimitExceeded("crystal enumeration exceeds the size cap");
      }
      out.emplace_back(params, entries);
      return;
    }
    const int row = static_cast<int>(idx) / cols;
    const int col = static_cast<int>(idx) % cols;
    int prev = 0;
    if (col > 0) prev = best[idx - 1];
    if (row > 0) prev = std::max(prev, best[idx - cols]);
    for (int v = 0; prev + v <= params.s; ++v) {
      entries[idx] = v;
      best[idx] = prev + v;
      fill(idx + 1);
    }
    entries[idx] = 0;
  };
  fill(0);
  return out;
}

/// Cartan matrix of the finite type A_n, entries C[i][j] = <alpha_j^vee, alpha_i>
/// (symmetric), 0-based.
inline std::vector<std::vector<int>> cartan_matrix_a(int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

/// Affine Cartan entry <alpha_i^vee, alpha_j> of A_n^{(1)}, colors 0..n.
inline int affine_cartan(int n, Color i, Color j) {
  if (i == j) return 2;
  if (n == 1) return -2;
  const int d = ((i - j) % (n + 1) + (n + 1)) % (n + 1);
  return (d == 1 || d == n) ? -1 : 0;
}

/// Classical weight s*omega_r - sum a_{p,q} alpha_{p,q} as coefficients on
/// omega_1..omega_n (index l - 1 holds the coefficient of omega_l).
inline std::vector<int> classical_weight(const Pattern& a) {
  const auto& k = a.params();
  const auto cartan = cartan_matrix_a(k.n);
  std::vector<int> w(k.n, 0);
  w[k.r - 1] = k.s;
  for (int q = k.r; q <= k.n; ++q) {
    for (int p = 1; p <= k.r; ++p) {
      const int v = a(p, q);
      if (v == 0) continue;
      // alpha_{p,q} = alpha_p + ... + alpha_q; alpha_j has omega-coordinates C[.][j]
      for (int j = p; j <= q; ++j) {
        for (int l = 0; l < k.n; ++l) w[l] -= v * cartan[l][j - 1];
      }
    }
  }
  return w;
}

/// Level-zero affine weight stored as the pairings <wt, alpha_l^vee>, l = 0..n.
struct AffineWeight {
  std::vector<int> pairings;

  int sum() const { return std::accumulate(pairings.begin(), pairings.end(), 0); }
  AffineWeight& operator+=(const AffineWeight& o) {
    if (pairings.size() < o.pairings.size()) pairings.resize(o.pairings.size(), 0);
    for (std::size_t i = 0; i < o.pairings.size(); ++i) pairings[i] += o.pairings[i];
    return *this;
  }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

inline AffineWeight affine_weight(const Pattern& a) {
  auto cl = classical_weight(a);
  AffineWeight w;
  w.pairings.resize(cl.size() + 1);
  int total = 0;
  for (std::size_t l = 0; l < cl.size(); ++l) {
    w.pairings[l + 1] = cl[l];
    total += cl[l];
  }
  w.pairings[0] = -total;
  return w;
}

}  // namespace krc

template <>
struct std::hash<krc::Pattern> {
  std::size_t operator()(const krc::Pattern& a) const noexcept {
    std::size_t h = static_cast<std::size_t>(a.params().n) * 1000003u +
                    static_cast<std::size_t>(a.params().r) * 10007u +
                    static_cast<std::size_t>(a.params().s);
    for (int v : a.entries()) h = h * 31u + static_cast<std::size_t>(v);
    return h;
  }
};
