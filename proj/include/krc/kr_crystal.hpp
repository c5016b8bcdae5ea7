#pragma once

// Kashiwara operators on polytope patterns.  Classical colors 1..n move a
// unit between neighbouring cells at a pivot position; the affine color 0
// only touches the corner cell a_{1,n}.

#include <optional>
#include <sstream>
#include <vector>

#include "krc/error.hpp"
#include "krc/pattern.hpp"

namespace krc {

enum class PivotSign { plus, minus };

/// Pivot positions for one color.  `lowering` is where f acts and `raising`
/// where e acts: for sign plus (l > r) these are p^l_+ <= q^l_+ in [1, r],
/// for sign minus (l < r) they are p^l_- >= q^l_- in [r, n].
struct PivotIndices {
  int lowering = 0;
  int raising = 0;
};

namespace detail {

inline void check_color(const KRParams& k, Color l) {
  if (l < 0 || l > k.n) {
    std::ostringstream os;
    os << "color " << l << " outside 0.." << k.n;
    throw IndexOutOfRange(os.str());
  }
}

// sum_{j=1}^{p} a_{j,l-1} + sum_{j=p}^{r} a_{j,l}
inline int plus_objective(const Pattern& a, Color l, int p) {
  const int r = a.params().r;
  int v = 0;
  for (int j = 1; j <= p; ++j) v += a(j, l - 1);
  for (int j = p; j <= r; ++j) v += a(j, l);
  return v;
}

// sum_{j=r}^{p} a_{l,j} + sum_{j=p}^{n} a_{l+1,j}
inline int minus_objective(const Pattern& a, Color l, int p) {
  const auto& k = a.params();
  int v = 0;
  for (int j = k.r; j <= p; ++j) v += a(l, j);
  for (int j = p; j <= k.n; ++j) v += a(l + 1, j);
  return v;
}

}  // namespace detail

inline PivotIndices pivot(const Pattern& a, Color l, PivotSign sign) {
  const auto& k = a.params();
  detail::check_color(k, l);
  if (l == 0 || l == k.r) {
    throw IndexOutOfRange("no pivot is defined for color 0 or color r");
  }
  if (sign == PivotSign::plus) {
    if (l < k.r) throw IndexOutOfRange("sign plus requires l > r");
    int best = detail::plus_objective(a, l, 1);
    PivotIndices out{1, 1};
    for (int p = 2; p <= k.r; ++p) {
      const int v = detail::plus_objective(a, l, p);
      if (v > best) {
        best = v;
        out = {p, p};
      } else if (v == best) {
        out.raising = p;
      }
    }
    return out;
  }
  if (l > k.r) throw IndexOutOfRange("sign minus requires l < r");
  int best = detail::minus_objective(a, l, k.r);
  PivotIndices out{k.r, k.r};
  for (int p = k.r + 1; p <= k.n; ++p) {
    const int v = detail::minus_objective(a, l, p);
    if (v > best) {
      best = v;
      out = {p, p};
    } else if (v == best) {
      out.lowering = p;
    }
  }
  return out;
}

inline int phi(const Pattern& a, Color l) {
  const auto& k = a.params();
  detail::check_color(k, l);
  if (l == 0) return a(1, k.n);
  if (l == k.r) {
    int v = k.s;
    for (int j = 1; j < k.r; ++j) v -= a(j, k.r);
    for (int j = k.r; j <= k.n; ++j) v -= a(k.r, j);
    return v;
  }
  if (l > k.r) {
    const int p = pivot(a, l, PivotSign::plus).lowering;
    int v = 0;
    for (int j = 1; j <= p; ++j) v += a(j, l - 1);
    for (int j = 1; j < p; ++j) v -= a(j, l);
    return v;
  }
  const int p = pivot(a, l, PivotSign::minus).lowering;
  int v = 0;
  for (int j = p; j <= k.n; ++j) v += a(l + 1, j);
  for (int j = p + 1; j <= k.n; ++j) v -= a(l, j);
  return v;
}

inline int eps(const Pattern& a, Color l) {
  const auto& k = a.params();
  detail::check_color(k, l);
  if (l == 0) {
    int v = k.s;
    for (int j = k.r; j <= k.n; ++j) v -= a(1, j);
    for (int j = 2; j <= k.r; ++j) v -= a(j, k.n);
    return v;
  }
  if (l == k.r) return a(k.r, k.r);
  if (l > k.r) {
    const int q = pivot(a, l, PivotSign::plus).raising;
    int v = 0;
    for (int j = q; j <= k.r; ++j) v += a(j, l);
    for (int j = q + 1; j <= k.r; ++j) v -= a(j, l - 1);
    return v;
  }
  const int q = pivot(a, l, PivotSign::minus).raising;
  int v = 0;
  for (int j = k.r; j <= q; ++j) v += a(l, j);
  for (int j = k.r; j < q; ++j) v -= a(l + 1, j);
  return v;
}

/// Lowering operator; std::nullopt is the crystal zero.
inline std::optional<Pattern> f(const Pattern& a, Color l) {
  if (phi(a, l) == 0) return std::nullopt;
  const auto& k = a.params();
  if (l == 0) return a.adjusted(1, k.n, -1);
  if (l == k.r) return a.adjusted(k.r, k.r, +1);
  if (l > k.r) {
    const int p = pivot(a, l, PivotSign::plus).lowering;
    return a.adjusted(p, l - 1, -1).adjusted(p, l, +1);
  }
  const int p = pivot(a, l, PivotSign::minus).lowering;
  return a.adjusted(l, p, +1).adjusted(l + 1, p, -1);
}

/// Raising operator; std::nullopt is the crystal zero.
inline std::optional<Pattern> e(const Pattern& a, Color l) {
  if (eps(a, l) == 0) return std::nullopt;
  const auto& k = a.params();
  if (l == 0) return a.adjusted(1, k.n, +1);
  if (l == k.r) return a.adjusted(k.r, k.r, -1);
  if (l > k.r) {
    const int q = pivot(a, l, PivotSign::plus).raising;
    return a.adjusted(q, l - 1, +1).adjusted(q, l, -1);
  }
  const int q = pivot(a, l, PivotSign::minus).raising;
  return a.adjusted(l, q, -1).adjusted(l + 1, q, +1);
}

/// The crystal B^{r,s} as an object satisfying the Crystal concept.
class KRCrystal {
 public:
  using value_type = Pattern;

  explicit KRCrystal(KRParams params) : params_(params) { check_params(params_); }

  const KRParams& params() const noexcept { return params_; }
  int rank() const noexcept { return params_.n; }

  std::optional<Pattern> f(const Pattern& a, Color l) const { return krc::f(a, l); }
  std::optional<Pattern> e(const Pattern& a, Color l) const { return krc::e(a, l); }
  int phi(const Pattern& a, Color l) const { return krc::phi(a, l); }
  int eps(const Pattern& a, Color l) const { return krc::eps(a, l); }
  AffineWeight weight(const Pattern& a) const { return affine_weight(a); }

  std::vector<Pattern> elements(std::size_t cap = kDefaultSizeCap) const {
    return enumerate_crystal(params_, cap);
  }

  Pattern zero_element() const { return Pattern::zero(params_); }

  friend bool operator==(const KRCrystal&, const KRCrystal&) = default;

 private:
  KRParams params_;
};

}  // namespace krc
