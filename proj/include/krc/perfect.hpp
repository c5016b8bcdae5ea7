#pragma once

// Perfect crystals of level l, the distinguished elements b_Lambda (epsilon
// profile Lambda) and b^Lambda (phi profile Lambda) of B^{r,l}, and
// ground-state paths.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/pattern.hpp"
#include "krc/tensor.hpp"

namespace krc {

/// Lambda = sum_j a_j Lambda_j, j = 0..n.
struct DominantWeight {
  std::vector<int> coeffs;

  DominantWeight() = default;
  explicit DominantWeight(std::vector<int> c) : coeffs(std::move(c)) {
    if (coeffs.size() < 2) throw InvalidParams("a dominant weight needs coefficients a_0..a_n");
    for (int v : coeffs) {
      if (v < 0) throw NegativeEntry("dominant weight coefficients must be non-negative");
    }
  }

  int n() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  int level() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }
  int operator[](std::size_t j) const { return coeffs.at(j); }

  /// (a_r, ..., a_n, a_0, ..., a_{r-1}).
  DominantWeight rotated(int r) const {
    const std::size_t m = coeffs.size();
    std::vector<int> out(m);
    for (std::size_t j = 0; j < m; ++j) out[j] = coeffs[(j + r) % m];
    return DominantWeight(std::move(out));
  }

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;
};

inline std::string to_string(const DominantWeight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < w.coeffs.size(); ++j) os << (j ? "," : "") << w.coeffs[j];
  os << ')';
  return os.str();
}

/// P_level^+ for A_n^{(1)}, in lexicographic order of the coefficient tuple.
inline std::vector<DominantWeight> dominant_weights(int n, int level) {
  std::vector<DominantWeight> out;
  std::vector<int> cur(n + 1, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      cur[n] = left;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, level);
  return out;
}

/// (eps_0(b), ..., eps_n(b)) and (phi_0(b), ..., phi_n(b)).
template <Crystal C>
std::vector<int> eps_profile(const C& c, const typename C::value_type& b) {
  std::vector<int> out;
  for (Color l = 0; l <= c.rank(); ++l) out.push_back(c.eps(b, l));
  return out;
}

template <Crystal C>
std::vector<int> phi_profile(const C& c, const typename C::value_type& b) {
  std::vector<int> out;
  for (Color l = 0; l <= c.rank(); ++l) out.push_back(c.phi(b, l));
  return out;
}

inline std::vector<int> eps_profile(const Pattern& a) { return eps_profile(KRCrystal(a.params()), a); }
inline std::vector<int> phi_profile(const Pattern& a) { return phi_profile(KRCrystal(a.params()), a); }

namespace detail {

inline void check_weight_for(const DominantWeight& w, const KRParams& k) {
  check_params(k);
  if (w.n() != k.n) throw DimensionMismatch("dominant weight has the wrong number of coefficients");
  if (w.level() != k.s) {
    std::ostringstream os;
    os << "weight " << to_string(w) << " has level " << w.level() << ", crystal has level " << k.s;
    throw LevelMismatch(os.str());
  }
}

}  // namespace detail

/// b_Lambda: entry (p, q) is a_{p+q-r}.
inline Pattern b_lower(const DominantWeight& w, const KRParams& k) {
  detail::check_weight_for(w, k);
  std::vector<int> v;
  for (int q = k.r; q <= k.n; ++q) {
    for (int p = 1; p <= k.r; ++p) v.push_back(w[p + q - k.r]);
  }
  return Pattern(k, std::move(v));
}

/// b^Lambda: entry (p, q) is a_{(p+q) mod (n+1)}.
inline Pattern b_upper(const DominantWeight& w, const KRParams& k) {
  detail::check_weight_for(w, k);
  std::vector<int> v;
  for (int q = k.r; q <= k.n; ++q) {
    for (int p = 1; p <= k.r; ++p) v.push_back(w[(p + q) % (k.n + 1)]);
  }
  return Pattern(k, std::move(v));
}

enum class ConditionStatus { passed, failed, skipped };

inline const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::passed: return "pass";
    case ConditionStatus::failed: return "fail";
    case ConditionStatus::skipped: return "skipped";
  }
  return "?";
}

struct ConditionResult {
  int index = 0;  ///< 1..5
  std::string name;
  ConditionStatus status = ConditionStatus::passed;
  std::string detail;  ///< witness on failure, summary otherwise
};

struct PerfectReport {
  int level = 0;
  std::size_t size = 0;
  std::vector<ConditionResult> conditions;

  bool perfect() const {
    for (const auto& c : conditions) {
      if (c.status == ConditionStatus::failed) return false;
    }
    return true;
  }
  const ConditionResult& condition(int i) const { return conditions.at(i - 1); }
};

namespace detail {

// Numerators (n+1) * (C^{-1} d)_i of the root coordinates of an omega-vector d.
inline std::vector<long> root_coordinates_scaled(const std::vector<int>& d) {
  const long n = static_cast<long>(d.size());
  std::vector<long> out(n, 0);
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) out[i - 1] += std::min(i, j) * (n + 1 - std::max(i, j)) * d[j - 1];
  }
  return out;
}

template <class V>
std::string describe(const V& b) {
  if constexpr (requires { to_string(b); }) {
    return to_string(b);
  } else {
    std::ostringstream os;
    os << b;
    return os.str();
  }
}

}  // namespace detail

/// Checks the five conditions of a perfect crystal of level `level`.
/// Condition 3 needs classical weights; it is checked against `lambda0`
/// (omega-coordinates) when the crystal has a weight map and lambda0 is
/// given, and skipped otherwise.
template <FiniteCrystal C>
PerfectReport check_perfect(const C& c, int level, std::optional<std::vector<int>> lambda0 = {},
                            std::size_t cap = kDefaultSizeCap) {
  using V = typename C::value_type;
  PerfectReport rep;
  rep.level = level;
  const int n = c.rank();
  const auto elems = c.elements(cap);
  rep.size = elems.size();

  rep.conditions.push_back({1, "finite", ConditionStatus::passed,
                            std::to_string(elems.size()) + " elements"});

  {
    ConditionResult res{2, "B (x) B connected", ConditionStatus::passed, ""};
    if (elems.size() * elems.size() > cap) throw SizeLimitExceeded("B (x) B exceeds the size cap");
    const TensorCrystal<C> bb({c, c});
    const auto reached = elems.empty() ? 0 : reachable_count(bb, {elems[0], elems[0]}, all_colors(n));
    if (reached != elems.size() * elems.size()) {
      res.status = ConditionStatus::failed;
      res.detail = std::to_string(reached) + " of " + std::to_string(elems.size() * elems.size()) +
                   " elements reachable";
    }
    rep.conditions.push_back(res);
  }

  {
    ConditionResult res{3, "weights bounded by lambda0, attained once", ConditionStatus::skipped, ""};
    if constexpr (requires(const C& cc, const V& b) {
                    { cc.weight(b) } -> std::same_as<AffineWeight>;
                  }) {
      if (lambda0) {
        res.status = ConditionStatus::passed;
        std::size_t hits = 0;
        for (const auto& b : elems) {
          const auto w = c.weight(b).pairings;
          std::vector<int> d(n);
          for (int i = 0; i < n; ++i) d[i] = (*lambda0)[i] - w[i + 1];
          const auto coords = detail::root_coordinates_scaled(d);
          bool below = true;
          for (long x : coords) below = below && x >= 0 && x % (n + 1) == 0;
          if (!below) {
            res.status = ConditionStatus::failed;
            res.detail = detail::describe(b) + " has weight outside lambda0 - Q_+";
            break;
          }
          if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; })) ++hits;
        }
        if (res.status == ConditionStatus::passed && hits != 1) {
          res.status = ConditionStatus::failed;
          res.detail = std::to_string(hits) + " elements of weight lambda0";
        }
      }
    }
    rep.conditions.push_back(res);
  }

  {
    ConditionResult res{4, "min level of eps profile >= level", ConditionStatus::passed, ""};
    int least = -1;
    for (const auto& b : elems) {
      const auto e = eps_profile(c, b);
      const int lev = std::accumulate(e.begin(), e.end(), 0);
      if (least < 0 || lev < least) least = lev;
      if (lev < level) {
        res.status = ConditionStatus::failed;
        res.detail = detail::describe(b) + " has eps level " + std::to_string(lev);
        break;
      }
    }
    if (res.status == ConditionStatus::passed) res.detail = "min " + std::to_string(least);
    rep.conditions.push_back(res);
  }

  {
    ConditionResult res{5, "unique b_Lambda and b^Lambda", ConditionStatus::passed, ""};
    std::map<std::vector<int>, std::vector<V>> by_eps, by_phi;
    for (const auto& b : elems) {
      by_eps[eps_profile(c, b)].push_back(b);
      by_phi[phi_profile(c, b)].push_back(b);
    }
    for (const auto& w : dominant_weights(n, level)) {
      for (auto* table : {&by_eps, &by_phi}) {
        auto it = table->find(w.coeffs);
        const std::size_t count = it == table->end() ? 0 : it->second.size();
        if (count == 1) continue;
        std::ostringstream os;
        os << (table == &by_eps ? "eps" : "phi") << " profile " << to_string(w) << " attained by "
           << count << " elements";
        if (count > 1) {
          os << ':';
          for (const auto& b : it->second) os << ' ' << detail::describe(b);
        }
        res.status = ConditionStatus::failed;
        res.detail = os.str();
        break;
      }
      if (res.status == ConditionStatus::failed) break;
    }
    rep.conditions.push_back(res);
  }
  return rep;
}

/// B^{r,s} with lambda0 = s omega_r.
inline PerfectReport check_perfect(const KRParams& k, std::size_t cap = kDefaultSizeCap) {
  check_params(k);
  std::vector<int> lambda0(k.n, 0);
  lambda0[k.r - 1] = k.s;
  return check_perfect(KRCrystal(k), k.s, lambda0, cap);
}

struct GroundStatePath {
  KRParams params;
  std::vector<DominantWeight> weights;  ///< Lambda_0, Lambda_1, ...
  std::vector<Pattern> elements;        ///< b_k = b^{Lambda_k}

  /// Smallest p > 0 with Lambda_p = Lambda_0.
  std::size_t period() const {
    const std::size_t m = weights.front().coeffs.size();
    for (std::size_t p = 1; p <= m; ++p) {
      if (weights.front().rotated(static_cast<int>((p * params.r) % m)) == weights.front()) return p;
    }
    return m;
  }
};

/// Lambda_{k+1} is Lambda_k rotated left by r, b_k = b^{Lambda_k}; each step
/// checks Lambda_{k+1} = sum_i eps_i(b_k) Lambda_i.
inline GroundStatePath ground_state_path(const DominantWeight& w, const KRParams& k,
                                         std::size_t length) {
  detail::check_weight_for(w, k);
  GroundStatePath path{k, {}, {}};
  DominantWeight cur = w;
  for (std::size_t step = 0; step < length; ++step) {
    const auto b = b_upper(cur, k);
    const auto next = cur.rotated(k.r);
    if (eps_profile(b) != next.coeffs) {
      std::ostringstream os;
      os << "eps profile of b^Lambda_" << step << " differs from Lambda_" << step + 1 << " = "
         << to_string(next);
      throw InconsistentRecursion(os.str());
    }
    path.weights.push_back(cur);
    path.elements.push_back(b);
    cur = next;
  }
  return path;
}

}  // namespace krc
