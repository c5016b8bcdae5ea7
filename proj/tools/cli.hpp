#pragma once

// Command-line front end.  Exit codes: 0 success, 1 a check failed (verify,
// perfect, energy --both), 2 usage or input error, 3 size cap exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "krc/crystal.hpp"
#include "krc/energy.hpp"
#include "krc/error.hpp"
#include "krc/io.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/perfect.hpp"
#include "krc/rmatrix.hpp"
#include "krc/tensor.hpp"
#include "krc/verify.hpp"

namespace krc::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kSizeCap = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

/// An argument is inline JSON if it starts with '{' or '[', stdin if "-",
/// and a file path otherwise.
inline std::string read_input(const std::string& arg, std::istream& in) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  if (arg == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(arg);
  if (!file) throw UsageError("cannot read input '" + arg + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline TensorElement read_factors(const std::vector<std::string>& inputs, std::istream& in) {
  TensorElement x;
  for (const auto& arg : inputs) {
    for (auto& a : tensor_from_json(parse_json(read_input(arg, in)))) x.push_back(std::move(a));
  }
  return x;
}

struct Base {
  std::optional<int> n, r, s;

  KRParams params() const {
    if (!n || !r || !s) throw UsageError("--n, --r and --s are required");
    return make_params(*n, *r, *s);
  }
};

inline void add_base(CLI::App* app, Base& b) {
  app->add_option("--n", b.n, "rank n of A_n^(1)");
  app->add_option("--r", b.r, "classical node r");
  app->add_option("--s", b.s, "level s");
}

inline std::vector<Color> parse_colors(const std::string& text, int n) {
  std::vector<Color> out;
  for (int c : parse_int_list(text)) {
    if (c < 0 || c > n) throw UsageError("color " + std::to_string(c) + " outside 0..n");
    out.push_back(c);
  }
  return out;
}

template <class G>
std::string render_graph(const G& g, const std::string& format) {
  if (format == "json") return graph_to_json(g).dump() + "\n";
  return graph_to_dot(g);
}

inline Json report_json(const KRParams& k, const PerfectReport& rep) {
  Json conds = Json::array();
  for (const auto& c : rep.conditions) {
    conds.push_back({{"index", c.index},
                     {"name", c.name},
                     {"status", to_string(c.status)},
                     {"detail", c.detail}});
  }
  return {{"n", k.n},
          {"r", k.r},
          {"s", k.s},
          {"size", rep.size},
          {"perfect", rep.perfect()},
          {"conditions", std::move(conds)}};
}

}  // namespace detail

/// Runs one command; argv[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Kirillov-Reshetikhin crystals of type A_n^(1) via polytope patterns", "krc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t cap = kDefaultSizeCap;
  std::string out_path;
  app.add_option("--cap", cap, "maximum number of elements to materialize");
  app.add_option("--out", out_path, "write the result to this file instead of stdout");

  detail::Base base;
  std::string format = "dot";
  std::vector<std::string> tensor_flags, factor_flags;
  std::string colors_flag;
  auto* graph = app.add_subcommand("graph", "crystal graph of B^{r,s} or a tensor product");
  detail::add_base(graph, base);
  graph->add_option("--tensor", tensor_flags, "n,r,s of a factor placed left of B^{r,s}");
  graph->add_option("--factor", factor_flags, "n,r,s of each factor, left to right");
  graph->add_option("--colors", colors_flag, "comma-separated colors to include");
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "list the patterns of B^{r,s}");
  detail::add_base(enumerate, base);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> inputs;
  auto* rmat = app.add_subcommand("rmatrix", "combinatorial R-matrix of a two-fold tensor");
  rmat->add_option("inputs", inputs, "pattern or tensor JSON (inline, file, or -)")->required();

  bool closed = false, oracle = false, both = false;
  auto* energy = app.add_subcommand("energy", "local (two factors) or global energy");
  energy->add_option("inputs", inputs, "pattern or tensor JSON (inline, file, or -)")->required();
  auto* g_closed = energy->add_flag("--closed-form", closed, "closed formula (default)");
  auto* g_oracle = energy->add_flag("--oracle", oracle, "recursion oracle");
  auto* g_both = energy->add_flag("--both", both, "both, with a comparison");
  g_closed->excludes(g_oracle)->excludes(g_both);
  g_oracle->excludes(g_both);

  auto* perfect = app.add_subcommand("perfect", "check the perfect crystal conditions");
  detail::add_base(perfect, base);

  std::string weight_flag;
  int gsp_r = 0;
  std::size_t gsp_len = 0;
  auto* gsp = app.add_subcommand("gsp", "ground-state path of a dominant weight");
  gsp->add_option("--weight", weight_flag, "a0,a1,...,an")->required();
  gsp->add_option("--r", gsp_r, "classical node r")->required();
  gsp->add_option("--len", gsp_len, "number of path elements")->required();

  std::string suite = "all";
  SweepBounds bounds;
  auto* verify = app.add_subcommand("verify", "exhaustive invariant sweeps");
  std::vector<std::string> suite_names{"all"};
  for (const auto& [name, fn] : suites()) suite_names.push_back(name);
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names));
  verify->add_option("--n", bounds.max_n, "largest n");
  verify->add_option("--max-s", bounds.max_s, "largest s");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (*graph) {
      std::vector<KRParams> factors;
      if (!factor_flags.empty()) {
        if (!tensor_flags.empty() || base.n || base.r || base.s) {
          throw UsageError("--factor cannot be combined with --tensor or --n/--r/--s");
        }
        for (const auto& f : factor_flags) factors.push_back(parse_params(f));
      } else {
        for (const auto& f : tensor_flags) factors.push_back(parse_params(f));
        factors.push_back(base.params());
      }
      const int n = factors.front().n;
      std::vector<Color> colors;
      if (!colors_flag.empty()) colors = detail::parse_colors(colors_flag, n);
      if (factors.size() == 1) {
        buf << detail::render_graph(build_graph(KRCrystal(factors[0]), colors, cap), format);
      } else {
        buf << detail::render_graph(build_graph(make_kr_tensor(factors), colors, cap), format);
      }
    } else if (*enumerate) {
      const auto elems = enumerate_crystal(base.params(), cap);
      if (enum_format == "json") {
        Json arr = Json::array();
        for (const auto& a : elems) arr.push_back(to_json(a));
        buf << arr.dump() << "\n";
      } else {
        for (const auto& a : elems) buf << to_string(a) << "\n";
      }
    } else if (*rmat) {
      const auto x = detail::read_factors(inputs, in);
      if (x.size() != 2) throw UsageError("rmatrix needs exactly two factors");
      buf << to_json(rmatrix(x)).dump() << "\n";
    } else if (*energy) {
      const auto x = detail::read_factors(inputs, in);
      if (x.size() < 2) throw UsageError("energy needs at least two factors");
      std::map<std::pair<KRParams, KRParams>, EnergyTable> tables;
      std::map<std::pair<KRParams, KRParams>, RMatrixTable> sigmas;
      auto oracle_local = [&](const TensorElement& p) {
        const auto key = std::make_pair(p[0].params(), p[1].params());
        auto it = tables.find(key);
        if (it == tables.end()) {
          it = tables.emplace(key, local_energy_oracle(key.first, key.second, cap)).first;
        }
        return it->second.at(p);
      };
      auto oracle_sigma = [&](const TensorElement& p) {
        const auto key = std::make_pair(p[0].params(), p[1].params());
        auto it = sigmas.find(key);
        if (it == sigmas.end()) {
          it = sigmas.emplace(key, rmatrix_oracle(key.first, key.second, cap)).first;
        }
        return it->second.at(p);
      };
      auto closed_value = [&] { return global_energy(x); };
      auto oracle_value = [&] { return global_energy(x, oracle_local, oracle_sigma); };
      if (both) {
        const int a = closed_value();
        const int b = oracle_value();
        buf << Json{{"closed_form", a}, {"oracle", b}, {"match", a == b}}.dump() << "\n";
        if (a != b) code = kCheckFailed;
      } else if (oracle) {
        buf << oracle_value() << "\n";
      } else {
        buf << closed_value() << "\n";
      }
    } else if (*perfect) {
      const auto k = base.params();
      const auto rep = check_perfect(k, cap);
      buf << detail::report_json(k, rep).dump(2) << "\n";
      if (!rep.perfect()) code = kCheckFailed;
    } else if (*gsp) {
      const DominantWeight w(parse_int_list(weight_flag));
      const auto k = make_params(w.n(), gsp_r, w.level());
      const auto path = ground_state_path(w, k, gsp_len);
      Json arr = Json::array();
      for (const auto& b : path.elements) arr.push_back(to_json(b));
      buf << arr.dump() << "\n";
    } else if (*verify) {
      bounds.cap = cap;
      for (const auto& [name, fn] : suites()) {
        if (suite != "all" && suite != name) continue;
        const auto res = fn(bounds);
        buf << name << ": " << (res.ok() ? "PASS" : "FAIL") << " checked=" << res.checked;
        if (!res.ok()) buf << " failures=" << res.failures << " first: " << res.first_failure;
        buf << "\n";
        if (!res.ok()) code = kCheckFailed;
      }
    }
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kSizeCap;
  } catch (const OracleFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InconsistentRecursion& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    file << buf.str();
  }
  return code;
}

}  // namespace krc::cli
