#pragma once

// Tensor products of crystals.  The convention is the one in which f_l acts
// on the FIRST factor of b1 (x) b2 when eps_l(b1) >= phi_l(b2), and e_l acts
// on the first factor when eps_l(b1) > phi_l(b2).  Highest weight elements of
// a product of KR crystals therefore carry the zero pattern in the SECOND
// slot.  N-fold products associate to the left: ((b1 (x) b2) (x) b3) ...

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/error.hpp"
#include "krc/kr_crystal.hpp"

namespace krc {

/// phi/eps of b1 (x) b2 from those of the factors.
struct StringData {
  int phi = 0;
  int eps = 0;
};

inline StringData combine(StringData left, StringData right) {
  return {std::max(left.phi, left.phi + right.phi - left.eps),
          std::max(right.eps, left.eps + right.eps - right.phi)};
}

template <Crystal C>
class TensorCrystal {
 public:
  using factor_type = typename C::value_type;
  using value_type = std::vector<factor_type>;

  explicit TensorCrystal(std::vector<C> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw InvalidParams("a tensor product needs at least one factor");
    for (const auto& c : factors_) {
      if (c.rank() != factors_.front().rank()) {
        throw InvalidParams("tensor factors must share the rank n");
      }
    }
  }

  int rank() const noexcept { return factors_.front().rank(); }
  std::size_t arity() const noexcept { return factors_.size(); }
  const std::vector<C>& factors() const noexcept { return factors_; }
  const C& factor(std::size_t i) const { return factors_.at(i); }

  int phi(const value_type& x, Color l) const { return data(x, l, x.size()).phi; }
  int eps(const value_type& x, Color l) const { return data(x, l, x.size()).eps; }

  /// Index of the factor on which f_l acts (always defined; the result may
  /// still be the crystal zero).
  std::size_t f_position(const value_type& x, Color l) const {
    check_arity(x);
    std::size_t k = x.size() - 1;
    while (k > 0) {
      const auto left = data(x, l, k);
      if (left.eps >= factors_[k].phi(x[k], l)) {
        --k;
      } else {
        break;
      }
    }
    return k;
  }

  std::size_t e_position(const value_type& x, Color l) const {
    check_arity(x);
    std::size_t k = x.size() - 1;
    while (k > 0) {
      const auto left = data(x, l, k);
      if (left.eps > factors_[k].phi(x[k], l)) {
        --k;
      } else {
        break;
      }
    }
    return k;
  }

  std::optional<value_type> f(const value_type& x, Color l) const {
    const auto k = f_position(x, l);
    auto moved = factors_[k].f(x[k], l);
    if (!moved) return std::nullopt;
    value_type out = x;
    out[k] = std::move(*moved);
    return out;
  }

  std::optional<value_type> e(const value_type& x, Color l) const {
    const auto k = e_position(x, l);
    auto moved = factors_[k].e(x[k], l);
    if (!moved) return std::nullopt;
    value_type out = x;
    out[k] = std::move(*moved);
    return out;
  }

  /// Pairing-tuple sum of the factor weights.
  AffineWeight weight(const value_type& x) const
    requires requires(const C& c, const factor_type& b) {
      { c.weight(b) } -> std::same_as<AffineWeight>;
    }
  {
    check_arity(x);
    AffineWeight w;
    w.pairings.assign(rank() + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) w += factors_[i].weight(x[i]);
    return w;
  }

  /// Cartesian product of the factor element lists, in lexicographic order.
  std::vector<value_type> elements(std::size_t cap = kDefaultSizeCap) const
    requires FiniteCrystal<C>
  {
    std::vector<std::vector<factor_type>> lists;
    std::size_t total = 1;
    for (const auto& c : factors_) {
      lists.push_back(c.elements(cap));
      total *= lists.back().size();
      if (total > cap) throw SizeLimitExceeded("tensor product exceeds the size cap");
    }
    std::vector<value_type> out;
    out.reserve(total);
    value_type cur(factors_.size());
    std::vector<std::size_t> idx(factors_.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
      for (std::size_t i = 0; i < factors_.size(); ++i) cur[i] = lists[i][idx[i]];
      out.push_back(cur);
      for (std::size_t i = factors_.size(); i-- > 0;) {
        if (++idx[i] < lists[i].size()) break;
        idx[i] = 0;
      }
    }
    return out;
  }

  value_type zero_element() const
    requires requires(const C& c) { c.zero_element(); }
  {
    value_type out;
    for (const auto& c : factors_) out.push_back(c.zero_element());
    return out;
  }

 private:
  void check_arity(const value_type& x) const {
    if (x.size() != factors_.size()) {
      throw DimensionMismatch("tensor element arity does not match the product");
    }
  }

  // phi/eps of the left-associated product of the first `count` factors.
  StringData data(const value_type& x, Color l, std::size_t count) const {
    check_arity(x);
    StringData acc{factors_[0].phi(x[0], l), factors_[0].eps(x[0], l)};
    for (std::size_t i = 1; i < count; ++i) {
      acc = combine(acc, {factors_[i].phi(x[i], l), factors_[i].eps(x[i], l)});
    }
    return acc;
  }

  std::vector<C> factors_;
};

using KRTensor = TensorCrystal<KRCrystal>;
using TensorElement = std::vector<Pattern>;

inline KRTensor make_kr_tensor(const std::vector<KRParams>& params) {
  std::vector<KRCrystal> cs;
  cs.reserve(params.size());
  for (const auto& k : params) cs.emplace_back(k);
  return KRTensor(std::move(cs));
}

/// Factor parameters of a tensor element.
inline std::vector<KRParams> params_of(const TensorElement& x) {
  std::vector<KRParams> out;
  out.reserve(x.size());
  for (const auto& a : x) out.push_back(a.params());
  return out;
}

inline KRTensor tensor_of(const TensorElement& x) { return make_kr_tensor(params_of(x)); }

inline std::string to_string(const TensorElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += " ⊗ ";
    out += to_string(x[i]);
  }
  return out;
}

inline std::optional<TensorElement> tensor_f(const TensorElement& x, Color l) {
  return tensor_of(x).f(x, l);
}
inline std::optional<TensorElement> tensor_e(const TensorElement& x, Color l) {
  return tensor_of(x).e(x, l);
}
inline int tensor_phi(const TensorElement& x, Color l) { return tensor_of(x).phi(x, l); }
inline int tensor_eps(const TensorElement& x, Color l) { return tensor_of(x).eps(x, l); }
inline AffineWeight tensor_wt(const TensorElement& x) { return tensor_of(x).weight(x); }

}  // namespace krc
