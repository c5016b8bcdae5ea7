#pragma once

// Generic finite-crystal machinery: the Crystal concept, string walking,
// explicit crystal graphs and connectivity queries.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "krc/error.hpp"
#include "krc/pattern.hpp"

namespace krc {

/// A crystal with colors 0..rank().  e/f return std::nullopt for the crystal
/// zero.
template <class C>
concept Crystal = requires(const C& c, const typename C::value_type& b, Color l) {
  typename C::value_type;
  { c.rank() } -> std::convertible_to<int>;
  { c.f(b, l) } -> std::same_as<std::optional<typename C::value_type>>;
  { c.e(b, l) } -> std::same_as<std::optional<typename C::value_type>>;
  { c.phi(b, l) } -> std::convertible_to<int>;
  { c.eps(b, l) } -> std::convertible_to<int>;
};

template <class C>
concept FiniteCrystal = Crystal<C> && requires(const C& c, std::size_t cap) {
  { c.elements(cap) } -> std::same_as<std::vector<typename C::value_type>>;
};

/// Number of f_l steps before the crystal zero, found by walking the string.
template <Crystal C>
int walk_phi(const C& c, typename C::value_type b, Color l) {
  int k = 0;
  while (auto next = c.f(b, l)) {
    b = std::move(*next);
    ++k;
  }
  return k;
}

template <Crystal C>
int walk_eps(const C& c, typename C::value_type b, Color l) {
  int k = 0;
  while (auto next = c.e(b, l)) {
    b = std::move(*next);
    ++k;
  }
  return k;
}

/// e_l^k b, or std::nullopt if the string runs out first.
template <Crystal C>
std::optional<typename C::value_type> e_power(const C& c, typename C::value_type b, Color l,
                                              int k) {
  for (int i = 0; i < k; ++i) {
    auto next = c.e(b, l);
    if (!next) return std::nullopt;
    b = std::move(*next);
  }
  return b;
}

template <Crystal C>
std::optional<typename C::value_type> f_power(const C& c, typename C::value_type b, Color l,
                                              int k) {
  for (int i = 0; i < k; ++i) {
    auto next = c.f(b, l);
    if (!next) return std::nullopt;
    b = std::move(*next);
  }
  return b;
}

/// Killed by e_l for every l in `colors`.
template <Crystal C>
bool is_highest_weight(const C& c, const typename C::value_type& b,
                       const std::vector<Color>& colors) {
  return std::all_of(colors.begin(), colors.end(),
                     [&](Color l) { return c.eps(b, l) == 0; });
}

inline std::vector<Color> classical_colors(int n) {
  std::vector<Color> out;
  for (Color l = 1; l <= n; ++l) out.push_back(l);
  return out;
}

inline std::vector<Color> all_colors(int n) {
  std::vector<Color> out;
  for (Color l = 0; l <= n; ++l) out.push_back(l);
  return out;
}

struct Edge {
  std::size_t source = 0;
  Color color = 0;
  std::size_t target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Colored digraph over a sorted vertex list; edge (u, l, v) means f_l u = v.
template <class V>
struct CrystalGraph {
  int rank = 0;
  std::vector<V> vertices;
  std::vector<Edge> edges;

  std::optional<std::size_t> index_of(const V& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

template <FiniteCrystal C>
CrystalGraph<typename C::value_type> build_graph(const C& c, std::vector<Color> colors = {},
                                                 std::size_t cap = kDefaultSizeCap) {
  if (colors.empty()) colors = all_colors(c.rank());
  CrystalGraph<typename C::value_type> g;
  g.rank = c.rank();
  g.vertices = c.elements(cap);
  std::sort(g.vertices.begin(), g.vertices.end());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (Color l : colors) {
      if (auto t = c.f(g.vertices[i], l)) {
        auto j = g.index_of(*t);
        if (!j) throw OracleFailure("f_l leaves the enumerated vertex set");
        g.edges.push_back({i, l, *j});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

/// Connected components (ignoring direction) using only edges in `colors`.
/// Returns a component id per vertex.
template <class V>
std::vector<std::size_t> components(const CrystalGraph<V>& g, const std::vector<Color>& colors,
                                    std::size_t* count = nullptr) {
  const std::size_t nv = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& ed : g.edges) {
    if (std::find(colors.begin(), colors.end(), ed.color) == colors.end()) continue;
    adj[ed.source].push_back(ed.target);
    adj[ed.target].push_back(ed.source);
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(nv, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < nv; ++s) {
    if (comp[s] != unset) continue;
    std::queue<std::size_t> todo;
    todo.push(s);
    comp[s] = next;
    while (!todo.empty()) {
      auto u = todo.front();
      todo.pop();
      for (auto w : adj[u]) {
        if (comp[w] == unset) {
          comp[w] = next;
          todo.push(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

template <class V>
bool is_connected(const CrystalGraph<V>& g, const std::vector<Color>& colors) {
  std::size_t count = 0;
  components(g, colors, &count);
  return count <= 1;
}

/// Connectivity of a finite crystal under `colors`, by search from `start`
/// without materializing the vertex list.
template <Crystal C>
std::size_t reachable_count(const C& c, const typename C::value_type& start,
                            const std::vector<Color>& colors) {
  std::set<typename C::value_type> seen{start};
  std::queue<typename C::value_type> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto u = std::move(todo.front());
    todo.pop();
    for (Color l : colors) {
      for (auto next : {c.f(u, l), c.e(u, l)}) {
        if (next && seen.insert(*next).second) todo.push(*next);
      }
    }
  }
  return seen.size();
}

/// A crystal given by explicit tables, vertices 0..size-1.  Useful for small
/// hand-built examples and negative controls.
class ExplicitCrystal {
 public:
  using value_type = int;

  ExplicitCrystal(int rank, int size) : rank_(rank), size_(size) {}

  /// Adds the edge f_l(source) = target.
  ExplicitCrystal& add_edge(int source, Color l, int target) {
    if (source < 0 || source >= size_ || target < 0 || target >= size_ || l < 0 || l > rank_) {
      throw IndexOutOfRange("explicit crystal edge out of range");
    }
    f_[{source, l}] = target;
    e_[{target, l}] = source;
    return *this;
  }

  int rank() const noexcept { return rank_; }
  int size() const noexcept { return size_; }

  std::optional<int> f(int b, Color l) const { return lookup(f_, b, l); }
  std::optional<int> e(int b, Color l) const { return lookup(e_, b, l); }
  int phi(int b, Color l) const { return walk_phi(*this, b, l); }
  int eps(int b, Color l) const { return walk_eps(*this, b, l); }

  std::vector<int> elements(std::size_t cap = kDefaultSizeCap) const {
    if (static_cast<std::size_t>(size_) > cap) throw SizeLimitExceeded("explicit crystal");
    std::vector<int> out(size_);
    for (int i = 0; i < size_; ++i) out[i] = i;
    return out;
  }

 private:
  static std::optional<int> lookup(const std::map<std::pair<int, Color>, int>& m, int b,
                                   Color l) {
    auto it = m.find({b, l});
    if (it == m.end()) return std::nullopt;
    return it->second;
  }

  int rank_;
  int size_;
  std::map<std::pair<int, Color>, int> f_;
  std::map<std::pair<int, Color>, int> e_;
};

}  // namespace krc
