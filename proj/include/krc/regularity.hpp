#pragma once

// Rank-2 regularity certificate for finite crystal graphs.  For a pair of
// colors J = {i, j} every J-component must satisfy the string axioms and the
// simply-laced local axioms of Stembridge (P1-P6 and the duals P5', P6'), have
// a unique J-highest weight vertex, and have the size of the irreducible
// module of that highest weight (A_1 x A_1 or A_2, by the Weyl dimension
// formula).

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/error.hpp"

namespace krc {

struct RegularityViolation {
  std::string axiom;
  std::string message;
  std::vector<std::size_t> component;  ///< vertex indices of the offending J-component
};

struct RegularityReport {
  Color i = 0;
  Color j = 0;
  bool adjacent = false;  ///< A_2 if true, A_1 x A_1 otherwise
  std::size_t components = 0;
  std::vector<RegularityViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Colors i != j are joined in the affine Dynkin diagram of A_n^{(1)}, n >= 2.
inline bool adjacent_colors(int n, Color i, Color j) {
  const int d = ((i - j) % (n + 1) + (n + 1)) % (n + 1);
  return d == 1 || d == n;
}

namespace detail {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace detail

template <class V>
RegularityReport is_regular_rank2(const CrystalGraph<V>& g, std::pair<Color, Color> colors) {
  using detail::kNone;
  const int n = g.rank;
  if (n < 2) throw IndexOutOfRange("rank-2 regularity needs n >= 2");
  auto [ci, cj] = colors;
  if (ci == cj || ci < 0 || cj < 0 || ci > n || cj > n) {
    throw IndexOutOfRange("J must be two distinct colors in 0..n");
  }
  RegularityReport rep;
  rep.i = ci;
  rep.j = cj;
  rep.adjacent = adjacent_colors(n, ci, cj);
  const int a_ij = rep.adjacent ? -1 : 0;
  const std::size_t nv = g.vertices.size();
  const Color col[2] = {ci, cj};

  std::vector<std::array<std::size_t, 2>> fwd(nv, {kNone, kNone});
  std::vector<std::array<std::size_t, 2>> bwd(nv, {kNone, kNone});
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  auto violate = [&](std::string axiom, std::string msg, std::vector<std::size_t> comp) {
    rep.violations.push_back({std::move(axiom), std::move(msg), std::move(comp)});
  };
  for (const auto& ed : g.edges) {
    for (int c = 0; c < 2; ++c) {
      if (ed.color != col[c]) continue;
      if (fwd[ed.source][c] != kNone || bwd[ed.target][c] != kNone) {
        std::ostringstream os;
        os << "vertex has two " << col[c] << "-edges in the same direction";
        violate("P2", os.str(), {ed.source, ed.target});
        continue;
      }
      fwd[ed.source][c] = ed.target;
      bwd[ed.target][c] = ed.source;
      adjacency.emplace_back(ed.source, ed.target);
    }
  }
  if (!rep.ok()) return rep;

  // String lengths; a walk longer than nv means a monochromatic cycle.
  std::vector<std::array<int, 2>> phi(nv), eps(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (int c = 0; c < 2; ++c) {
      int k = 0;
      for (auto w = fwd[v][c]; w != kNone; w = fwd[w][c]) {
        if (++k > static_cast<int>(nv)) break;
      }
      phi[v][c] = k;
      k = 0;
      for (auto w = bwd[v][c]; w != kNone; w = bwd[w][c]) {
        if (++k > static_cast<int>(nv)) break;
      }
      eps[v][c] = k;
      if (phi[v][c] > static_cast<int>(nv) || eps[v][c] > static_cast<int>(nv)) {
        violate("P1", "monochromatic cycle", {v});
        return rep;
      }
    }
  }

  // J-components.
  std::vector<std::vector<std::size_t>> adj(nv);
  for (auto [u, w] : adjacency) {
    adj[u].push_back(w);
    adj[w].push_back(u);
  }
  std::vector<std::size_t> comp_id(nv, kNone);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp_id[s] != kNone) continue;
    comps.emplace_back();
    std::vector<std::size_t> stack{s};
    comp_id[s] = comps.size() - 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comps.back().push_back(u);
      for (auto w : adj[u]) {
        if (comp_id[w] == kNone) {
          comp_id[w] = comps.size() - 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  rep.components = comps.size();

  auto E = [&](std::size_t v, int c) { return v == kNone ? kNone : bwd[v][c]; };
  auto F = [&](std::size_t v, int c) { return v == kNone ? kNone : fwd[v][c]; };
  auto comp_of = [&](std::size_t v) { return comps[comp_id[v]]; };
  auto name = [&](std::size_t v) {
    std::ostringstream os;
    os << "vertex " << v;
    return os.str();
  };

  for (std::size_t x = 0; x < nv; ++x) {
    for (int c = 0; c < 2; ++c) {
      const int d = 1 - c;
      // P3, P4 along e_c and f_c.
      if (auto y = E(x, c); y != kNone) {
        const int d_delta = -(eps[y][d] - eps[x][d]);
        const int d_phi = phi[y][d] - phi[x][d];
        if (d_delta + d_phi != a_ij) violate("P3", name(x) + ": weight change mismatch", comp_of(x));
        if (d_delta > 0 || d_phi > 0) violate("P4", name(x) + ": string length grew", comp_of(x));
      }
    }
    // P5, P6 (raising) and P5', P6' (lowering).
    const auto ei = E(x, 0), ej = E(x, 1);
    if (ei != kNone && ej != kNone) {
      const int di = -(eps[ei][1] - eps[x][1]);  // Delta_i delta(x, j)
      const int dj = -(eps[ej][0] - eps[x][0]);  // Delta_j delta(x, i)
      if (di == 0) {
        const auto y1 = E(ej, 0), y2 = E(ei, 1);
        if (y1 == kNone || y1 != y2) {
          violate("P5", name(x) + ": e_i e_j != e_j e_i", comp_of(x));
        } else if (phi[y1][0] - phi[F(y1, 1)][0] != 0) {
          violate("P5", name(x) + ": nabla_j phi_i != 0", comp_of(x));
        }
      }
      if (dj == 0 && di != 0) {
        const auto y1 = E(ei, 1), y2 = E(ej, 0);
        if (y1 == kNone || y1 != y2) {
          violate("P5", name(x) + ": e_j e_i != e_i e_j", comp_of(x));
        } else if (phi[y1][1] - phi[F(y1, 0)][1] != 0) {
          violate("P5", name(x) + ": nabla_i phi_j != 0", comp_of(x));
        }
      }
      if (di == -1 && dj == -1) {
        const auto y1 = E(E(E(ei, 1), 1), 0);
        const auto y2 = E(E(E(ej, 0), 0), 1);
        if (y1 == kNone || y1 != y2) {
          violate("P6", name(x) + ": e_i e_j^2 e_i != e_j e_i^2 e_j", comp_of(x));
        } else if (phi[y1][1] - phi[F(y1, 0)][1] != -1 || phi[y1][0] - phi[F(y1, 1)][0] != -1) {
          violate("P6", name(x) + ": nabla condition fails", comp_of(x));
        }
      }
    }
    const auto fi = F(x, 0), fj = F(x, 1);
    if (fi != kNone && fj != kNone) {
      const int ni = phi[x][1] - phi[fi][1];  // nabla_i phi(x, j)
      const int nj = phi[x][0] - phi[fj][0];  // nabla_j phi(x, i)
      if (ni == 0) {
        const auto y1 = F(fj, 0), y2 = F(fi, 1);
        if (y1 == kNone || y1 != y2) {
          violate("P5'", name(x) + ": f_i f_j != f_j f_i", comp_of(x));
        } else if (-(eps[E(y1, 1)][0] - eps[y1][0]) != 0) {
          violate("P5'", name(x) + ": Delta_j delta_i != 0", comp_of(x));
        }
      }
      if (nj == 0 && ni != 0) {
        const auto y1 = F(fi, 1), y2 = F(fj, 0);
        if (y1 == kNone || y1 != y2) {
          violate("P5'", name(x) + ": f_j f_i != f_i f_j", comp_of(x));
        } else if (-(eps[E(y1, 0)][1] - eps[y1][1]) != 0) {
          violate("P5'", name(x) + ": Delta_i delta_j != 0", comp_of(x));
        }
      }
      if (ni == -1 && nj == -1) {
        const auto y1 = F(F(F(fi, 1), 1), 0);
        const auto y2 = F(F(F(fj, 0), 0), 1);
        if (y1 == kNone || y1 != y2) {
          violate("P6'", name(x) + ": f_i f_j^2 f_i != f_j f_i^2 f_j", comp_of(x));
        } else if (-(eps[E(y1, 0)][1] - eps[y1][1]) != -1 ||
                   -(eps[E(y1, 1)][0] - eps[y1][0]) != -1) {
          violate("P6'", name(x) + ": Delta condition fails", comp_of(x));
        }
      }
    }
  }

  // Global shape of each component.
  for (const auto& comp : comps) {
    std::vector<std::size_t> tops;
    for (auto v : comp) {
      if (eps[v][0] == 0 && eps[v][1] == 0) tops.push_back(v);
    }
    if (tops.size() != 1) {
      std::ostringstream os;
      os << "component has " << tops.size() << " highest weight vertices";
      violate("highest-weight", os.str(), comp);
      continue;
    }
    const long a = phi[tops[0]][0];
    const long b = phi[tops[0]][1];
    const long expected = rep.adjacent ? (a + 1) * (b + 1) * (a + b + 2) / 2 : (a + 1) * (b + 1);
    if (static_cast<long>(comp.size()) != expected) {
      std::ostringstream os;
      os << "component of highest weight (" << a << "," << b << ") has " << comp.size()
         << " vertices, expected " << expected;
      violate("dimension", os.str(), comp);
    }
  }
  return rep;
}

/// All unordered color pairs of 0..n.
inline std::vector<std::pair<Color, Color>> color_pairs(int n) {
  std::vector<std::pair<Color, Color>> out;
  for (Color i = 0; i <= n; ++i) {
    for (Color j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace krc
