#pragma once

// Independent reference implementations used only by the tests.  None of
// these call the library's algorithms for the quantity they check.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "krc/crystal.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/pattern.hpp"
#include "krc/tensor.hpp"

namespace oracle {

using krc::Color;
using krc::KRParams;
using krc::Pattern;
using krc::TensorElement;

/// Every monotone staircase from (1, r) to (r, n) as a list of (p, q) cells.
inline std::vector<std::vector<std::pair<int, int>>> staircases(int n, int r) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> cur{{1, r}};
  std::function<void(int, int)> walk = [&](int p, int q) {
    if (p == r && q == n) {
      out.push_back(cur);
      return;
    }
    if (p < r) {
      cur.emplace_back(p + 1, q);
      walk(p + 1, q);
      cur.pop_back();
    }
    if (q < n) {
      cur.emplace_back(p, q + 1);
      walk(p, q + 1);
      cur.pop_back();
    }
  };
  walk(1, r);
  return out;
}

inline int max_staircase_sum(const Pattern& a) {
  const auto& k = a.params();
  int best = 0;
  for (const auto& path : staircases(k.n, k.r)) {
    int sum = 0;
    for (auto [p, q] : path) sum += a(p, q);
    best = std::max(best, sum);
  }
  return best;
}

/// All grids with entries in 0..s whose every staircase sums to at most s,
/// sorted lexicographically.
inline std::vector<Pattern> brute_force_patterns(const KRParams& k) {
  const std::size_t cells = k.cells();
  std::vector<int> v(cells, 0);
  std::vector<Pattern> out;
  for (;;) {
    Pattern a(k, v);
    if (max_staircase_sum(a) <= k.s) out.push_back(a);
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++v[i] <= k.s) break;
      v[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (cells == 0) return out;
  }
}

/// Semistandard tableaux of rectangular shape (rows x cols) with entries in
/// 1..max_entry: count weakly increasing chains of strictly increasing
/// columns.
inline long ssyt_rectangle_count(int rows, int cols, int max_entry) {
  std::vector<std::vector<int>> columns;
  std::vector<int> cur;
  std::function<void(int)> pick = [&](int next) {
    if (static_cast<int>(cur.size()) == rows) {
      columns.push_back(cur);
      return;
    }
    for (int v = next; v <= max_entry; ++v) {
      cur.push_back(v);
      pick(v + 1);
      cur.pop_back();
    }
  };
  pick(1);
  std::vector<long> ways(columns.size(), 1);
  for (int c = 1; c < cols; ++c) {
    std::vector<long> next(columns.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        bool le = true;
        for (int t = 0; t < rows; ++t) le = le && columns[i][t] <= columns[j][t];
        if (le) next[j] += ways[i];
      }
    }
    ways = std::move(next);
  }
  long total = 0;
  for (long w : ways) total += w;
  return total;
}

/// Length of the l-string above / below b, by repeated application.
template <class C>
int string_down(const C& c, typename C::value_type b, Color l) {
  int k = 0;
  for (auto x = c.f(b, l); x; x = c.f(*x, l)) ++k;
  return k;
}

template <class C>
int string_up(const C& c, typename C::value_type b, Color l) {
  int k = 0;
  for (auto x = c.e(b, l); x; x = c.e(*x, l)) ++k;
  return k;
}

/// Signature rule: read factors right to left, factor i contributing
/// eps_l(b_i) minus signs then phi_l(b_i) plus signs; cancel adjacent "+ -"
/// pairs; f acts on the factor owning the leftmost surviving +, e on the one
/// owning the rightmost surviving -.
struct Signature {
  std::vector<std::pair<char, std::size_t>> reduced;  // (sign, factor)
};

template <class C>
Signature signature(const C& factor_crystal_of, const TensorElement& x, Color l) {
  std::vector<std::pair<char, std::size_t>> word;
  for (std::size_t i = x.size(); i-- > 0;) {
    const auto& c = factor_crystal_of(i);
    const int ep = string_up(c, x[i], l);
    const int ph = string_down(c, x[i], l);
    for (int t = 0; t < ep; ++t) word.emplace_back('-', i);
    for (int t = 0; t < ph; ++t) word.emplace_back('+', i);
  }
  std::vector<std::pair<char, std::size_t>> stack;
  for (const auto& s : word) {
    if (s.first == '-' && !stack.empty() && stack.back().first == '+') {
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return {stack};
}

inline std::optional<TensorElement> signature_f(const TensorElement& x, Color l) {
  auto crystal_of = [&](std::size_t i) { return krc::KRCrystal(x[i].params()); };
  const auto sig = signature(crystal_of, x, l);
  for (const auto& [sign, i] : sig.reduced) {
    if (sign != '+') continue;
    TensorElement y = x;
    y[i] = *krc::KRCrystal(x[i].params()).f(x[i], l);
    return y;
  }
  return std::nullopt;
}

inline std::optional<TensorElement> signature_e(const TensorElement& x, Color l) {
  auto crystal_of = [&](std::size_t i) { return krc::KRCrystal(x[i].params()); };
  const auto sig = signature(crystal_of, x, l);
  for (auto it = sig.reduced.rbegin(); it != sig.reduced.rend(); ++it) {
    if (it->first != '-') continue;
    TensorElement y = x;
    y[it->second] = *krc::KRCrystal(x[it->second].params()).e(x[it->second], l);
    return y;
  }
  return std::nullopt;
}

/// A_1^{(1)}, s1 <= s2: sigma(A (x) B) from the three-case formula.
inline std::pair<int, int> a1_rmatrix(int s1, int s2, int a, int b) {
  if (a + b <= s1) return {a, b};
  if (a + b <= s2) return {2 * a - s1 + b, s1 - a};
  return {a + s2 - s1, s1 - s2 + b};
}

/// r1 = r2 = n, s1 <= s2: -sum_j a_{j,n} + (a_{n,n} + (... + (a_{1,n} - phi_1(B))_+ ...
/// - phi_{n-1}(B))_+ - phi_n(B))_+.  The leading sum enters with a minus
/// sign, as forced by H = -sum of entries on highest weight elements.
inline int energy_row_vectors(const Pattern& a, const Pattern& b) {
  const int n = a.params().n;
  int sum = 0;
  for (int j = 1; j <= n; ++j) sum += a(j, n);
  int nested = 0;
  for (int l = 1; l <= n; ++l) nested = std::max(0, a(l, n) + nested - krc::phi(b, l));
  return -sum + nested;
}

/// Elements killed by e_l for every classical l, by scanning.
inline std::vector<TensorElement> highest_weight_scan(const krc::KRTensor& t, std::size_t cap) {
  std::vector<TensorElement> out;
  for (const auto& x : t.elements(cap)) {
    bool top = true;
    for (Color l = 1; l <= t.rank() && top; ++l) top = !t.e(x, l).has_value();
    if (top) out.push_back(x);
  }
  return out;
}

/// Minimal DOT reader for the subset produced by graph_to_dot: a digraph
/// with node statements and edge statements, each with an attribute list.
/// Returns false on any grammar violation.
struct DotGraph {
  std::map<std::string, std::string> node_labels;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;  // (u, v, label)
};

inline bool parse_dot(const std::string& text, DotGraph& g) {
  std::vector<std::string> tok;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::string s = "\"";
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) ++i;
        s += text[i++];
      }
      if (i == text.size()) return false;
      ++i;
      tok.push_back(s);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tok.emplace_back("->");
      i += 2;
    } else if (std::string("{}[];=,").find(c) != std::string::npos) {
      tok.emplace_back(1, c);
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        s += text[i++];
      }
      tok.push_back(s);
    } else {
      return false;
    }
  }
  auto is_id = [](const std::string& s) {
    return !s.empty() && (std::isalnum(static_cast<unsigned char>(s[0])) || s[0] == '_');
  };
  std::size_t p = 0;
  auto at = [&](const char* s) { return p < tok.size() && tok[p] == s; };
  if (!at("digraph")) return false;
  ++p;
  if (p < tok.size() && is_id(tok[p])) ++p;
  if (!at("{")) return false;
  ++p;
  auto attrs = [&](std::map<std::string, std::string>& out) {
    if (!at("[")) return true;
    ++p;
    while (!at("]")) {
      if (p + 2 >= tok.size() || !is_id(tok[p]) || tok[p + 1] != "=") return false;
      out[tok[p]] = tok[p + 2];
      p += 3;
      if (at(",") || at(";")) ++p;
    }
    ++p;
    return true;
  };
  while (!at("}")) {
    if (p >= tok.size() || !is_id(tok[p])) return false;
    const std::string u = tok[p++];
    std::map<std::string, std::string> a;
    if (at("->")) {
      ++p;
      if (p >= tok.size() || !is_id(tok[p])) return false;
      const std::string v = tok[p++];
      if (!attrs(a)) return false;
      auto lab = a.count("label") ? a["label"] : "";
      if (!lab.empty() && lab[0] == '"') lab = lab.substr(1);
      g.edges.emplace_back(u, v, lab);
    } else {
      if (!attrs(a)) return false;
      auto lab = a.count("label") ? a["label"] : "";
      if (!lab.empty() && lab[0] == '"') lab = lab.substr(1);
      g.node_labels[u] = lab;
    }
    if (at(";")) ++p;
  }
  ++p;
  return p == tok.size();
}

}  // namespace oracle
