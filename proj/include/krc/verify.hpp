#pragma once

// Exhaustive invariant sweeps over all B^{r,s} (and pairs of them) with
// n <= max_n and s <= max_s.  Each suite counts checked items and keeps the
// first failure.

#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/energy.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/nakajima.hpp"
#include "krc/pattern.hpp"
#include "krc/perfect.hpp"
#include "krc/regularity.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tensor.hpp"

namespace krc {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

struct SweepBounds {
  int max_n = 3;
  int max_s = 2;
  std::size_t cap = kDefaultSizeCap;
};

inline std::vector<KRParams> all_params(int n, int max_s) {
  std::vector<KRParams> out;
  for (int r = 1; r <= n; ++r) {
    for (int s = 1; s <= max_s; ++s) out.push_back(make_params(n, r, s));
  }
  return out;
}

namespace detail {

inline std::string where(const KRParams& k) {
  std::ostringstream os;
  os << "B^{" << k.r << "," << k.s << "} n=" << k.n;
  return os.str();
}

inline std::string where(const KRParams& a, const KRParams& b) {
  std::ostringstream os;
  os << "B^{" << a.r << "," << a.s << "} (x) B^{" << b.r << "," << b.s << "} n=" << a.n;
  return os.str();
}

}  // namespace detail

/// e/f partial inverses, phi - eps = <wt, alpha^vee>, level zero, string
/// lengths, weight change along f, classical connectivity.
inline SuiteResult verify_crystal(const SweepBounds& b) {
  SuiteResult res{"crystal", 0, 0, ""};
  for (int n = 1; n <= b.max_n; ++n) {
    for (const auto& k : all_params(n, b.max_s)) {
      const KRCrystal c(k);
      const auto elems = c.elements(b.cap);
      for (const auto& a : elems) {
        ++res.checked;
        const auto w = c.weight(a);
        if (w.sum() != 0) res.fail(detail::where(k) + ": weight is not level zero at " + to_string(a));
        for (Color l = 0; l <= n; ++l) {
          const int ph = c.phi(a, l);
          const int ep = c.eps(a, l);
          if (ph - ep != w.pairings[l]) {
            res.fail(detail::where(k) + ": phi - eps != pairing at " + to_string(a));
          }
          if (walk_phi(c, a, l) != ph || walk_eps(c, a, l) != ep) {
            res.fail(detail::where(k) + ": string length mismatch at " + to_string(a));
          }
          if (auto fa = c.f(a, l)) {
            if (c.e(*fa, l) != a) res.fail(detail::where(k) + ": e f != id at " + to_string(a));
            const auto wf = c.weight(*fa);
            for (Color j = 0; j <= n; ++j) {
              if (wf.pairings[j] != w.pairings[j] - affine_cartan(n, j, l)) {
                res.fail(detail::where(k) + ": weight change along f at " + to_string(a));
              }
            }
          }
          if (auto ea = c.e(a, l)) {
            if (c.f(*ea, l) != a) res.fail(detail::where(k) + ": f e != id at " + to_string(a));
          }
        }
      }
      if (reachable_count(c, c.zero_element(), classical_colors(n)) != elems.size()) {
        res.fail(detail::where(k) + ": not classically connected");
      }
    }
  }
  return res;
}

/// Tensor phi/eps from the max formulas against string walking, and e f = id.
inline SuiteResult verify_tensor(const SweepBounds& b) {
  SuiteResult res{"tensor", 0, 0, ""};
  for (int n = 1; n <= b.max_n; ++n) {
    const auto ps = all_params(n, b.max_s);
    for (const auto& k1 : ps) {
      for (const auto& k2 : ps) {
        const auto t = make_kr_tensor({k1, k2});
        for (const auto& x : t.elements(b.cap)) {
          ++res.checked;
          for (Color l = 0; l <= n; ++l) {
            if (walk_phi(t, x, l) != t.phi(x, l) || walk_eps(t, x, l) != t.eps(x, l)) {
              res.fail(detail::where(k1, k2) + ": string length mismatch at " + to_string(x));
            }
            if (auto fx = t.f(x, l); fx && t.e(*fx, l) != x) {
              res.fail(detail::where(k1, k2) + ": e f != id at " + to_string(x));
            }
          }
        }
      }
    }
  }
  return res;
}

/// rmatrix against the weight-matched classical isomorphism (which also
/// checks e_0/f_0 intertwining).
inline SuiteResult verify_rmatrix(const SweepBounds& b) {
  SuiteResult res{"rmatrix", 0, 0, ""};
  for (int n = 1; n <= b.max_n; ++n) {
    const auto ps = all_params(n, b.max_s);
    for (const auto& k1 : ps) {
      for (const auto& k2 : ps) {
        RMatrixTable table;
        try {
          table = rmatrix_oracle(k1, k2, b.cap);
        } catch (const OracleFailure& e) {
          res.fail(detail::where(k1, k2) + ": " + e.what());
          continue;
        }
        for (const auto& [x, y] : table) {
          ++res.checked;
          if (rmatrix(x) != y) res.fail(detail::where(k1, k2) + ": rmatrix differs at " + to_string(x));
        }
      }
    }
  }
  return res;
}

/// Closed-form local energy against the recursion, and the highest weight law.
inline SuiteResult verify_energy(const SweepBounds& b) {
  SuiteResult res{"energy", 0, 0, ""};
  for (int n = 1; n <= b.max_n; ++n) {
    const auto ps = all_params(n, b.max_s);
    for (const auto& k1 : ps) {
      for (const auto& k2 : ps) {
        EnergyTable table;
        try {
          table = local_energy_oracle(k1, k2, b.cap);
        } catch (const Error& e) {
          res.fail(detail::where(k1, k2) + ": " + e.what());
          continue;
        }
        for (const auto& [x, h] : table) {
          ++res.checked;
          if (local_energy(x) != h) {
            res.fail(detail::where(k1, k2) + ": closed form differs at " + to_string(x));
          }
        }
        for (const auto& x : highest_weight_elements(k1, k2)) {
          ++res.checked;
          if (table.at(x) != local_energy_hw(x)) {
            res.fail(detail::where(k1, k2) + ": highest weight law fails at " + to_string(x));
          }
        }
      }
    }
  }
  return res;
}

/// check_perfect, b_Lambda / b^Lambda profiles, ground-state recursion.
inline SuiteResult verify_perfect(const SweepBounds& b) {
  SuiteResult res{"perfect", 0, 0, ""};
  for (int n = 1; n <= b.max_n; ++n) {
    for (const auto& k : all_params(n, b.max_s)) {
      ++res.checked;
      const auto rep = check_perfect(k, b.cap);
      for (const auto& c : rep.conditions) {
        if (c.status != ConditionStatus::passed) {
          res.fail(detail::where(k) + ": condition " + std::to_string(c.index) + " " +
                   to_string(c.status) + " " + c.detail);
        }
      }
      for (const auto& w : dominant_weights(n, k.s)) {
        ++res.checked;
        if (eps_profile(b_lower(w, k)) != w.coeffs) {
          res.fail(detail::where(k) + ": eps profile of b_Lambda at " + to_string(w));
        }
        if (phi_profile(b_upper(w, k)) != w.coeffs) {
          res.fail(detail::where(k) + ": phi profile of b^Lambda at " + to_string(w));
        }
        try {
          ground_state_path(w, k, 2 * (n + 1));
        } catch (const InconsistentRecursion& e) {
          res.fail(detail::where(k) + ": " + e.what());
        }
      }
    }
  }
  return res;
}

/// Rank-2 regularity for every color pair (n >= 2).
inline SuiteResult verify_regularity(const SweepBounds& b) {
  SuiteResult res{"regularity", 0, 0, ""};
  for (int n = 2; n <= b.max_n; ++n) {
    for (const auto& k : all_params(n, b.max_s)) {
      const auto g = build_graph(KRCrystal(k), {}, b.cap);
      for (const auto& pair : color_pairs(n)) {
        ++res.checked;
        const auto rep = is_regular_rank2(g, pair);
        if (!rep.ok()) {
          std::ostringstream os;
          os << detail::where(k) << ": J={" << pair.first << "," << pair.second << "} "
             << rep.violations.front().axiom << " " << rep.violations.front().message;
          res.fail(os.str());
        }
      }
    }
  }
  return res;
}

/// The monomial embedding intertwines colors (0, 1) on patterns with (1, 2)
/// on monomials, including phi/eps and the pivot identities for n_f, n_e.
inline SuiteResult verify_nakajima(const SweepBounds& b) {
  SuiteResult res{"nakajima", 0, 0, ""};
  const NakajimaCrystal m(2, psi_convention());
  auto same = [](const std::optional<Pattern>& pb, const std::optional<NakajimaMonomial>& pm) {
    if (pb.has_value() != pm.has_value()) return false;
    return !pb || psi_embedding(*pb) == *pm;
  };
  for (int n = 2; n <= b.max_n; ++n) {
    for (const auto& k : all_params(n, b.max_s)) {
      if (k.r < 2) continue;
      for (const auto& a : enumerate_crystal(k, b.cap)) {
        ++res.checked;
        const auto y = psi_embedding(a);
        bool ok = true;
        for (Color l : {0, 1}) {
          ok = ok && same(f(a, l), m.f(y, l + 1)) && same(e(a, l), m.e(y, l + 1));
          ok = ok && m.phi(y, l + 1) == phi(a, l) && m.eps(y, l + 1) == eps(a, l);
        }
        if (ok && phi(a, 1) > 0) ok = m.n_f(y, 2) == n - pivot(a, 1, PivotSign::minus).lowering;
        if (ok && eps(a, 1) > 0) ok = m.n_e(y, 2) == n - pivot(a, 1, PivotSign::minus).raising;
        if (!ok) res.fail(detail::where(k) + ": embedding does not intertwine at " + to_string(a));
      }
    }
  }
  return res;
}

inline const std::map<std::string, std::function<SuiteResult(const SweepBounds&)>>& suites() {
  static const std::map<std::string, std::function<SuiteResult(const SweepBounds&)>> table{
      {"crystal", verify_crystal},       {"tensor", verify_tensor},
      {"rmatrix", verify_rmatrix},       {"energy", verify_energy},
      {"perfect", verify_perfect},       {"regularity", verify_regularity},
      {"nakajima", verify_nakajima},
  };
  return table;
}

}  // namespace krc
