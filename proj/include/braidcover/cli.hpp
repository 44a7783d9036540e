#pragma once

// Command-line front end. `run` is kept free of argv handling so it can be
// driven directly from tests; tools/braidcover.cpp does the parsing.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "braidcover/enumerate.hpp"
#include "braidcover/io.hpp"
#include "braidcover/surface.hpp"

namespace braidcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

// Degrees at or above this need --confirm-long.
inline constexpr int kLongRunDegree = 8;

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string subcommand;  // count | table | orbits | list | oracle | invariants
  int n_min = 2;
  int n_max = 2;
  unsigned workers = 1;
  Format format = Format::Text;
  std::string out_path;  // empty: the provided stream
  bool confirm_long = false;
  bool allow_large = false;
  bool collect = false;      // count: also decompose into orbits
  bool plain = false;        // use the literal a1 loop instead of the symmetry-reduced one
  bool counts_only = false;  // table: skip orbits and image groups
  std::optional<std::string> seed;  // never valid; everything is deterministic
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "5" or "2..6".
inline std::pair<int, int> parse_degree_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("invalid degree: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  const int lo = to_int(std::string_view(text).substr(0, dots));
  const int hi = to_int(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("empty degree range: '" + text + "'");
  return {lo, hi};
}

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (expected text, csv or json)");
}

namespace detail {

inline SearchOptions search_options(const RunConfig& cfg, int n, std::ostream& err) {
  SearchOptions opts;
  opts.workers = cfg.workers;
  opts.allow_large = cfg.allow_large;
  opts.reduction = cfg.plain ? Reduction::kNone : Reduction::kSigmaCentralizer;
  if (n >= kLongRunDegree) {
    opts.progress = [&err, n, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
      const std::size_t pct = done * 100 / total;
      if (pct >= last + 5 || done == total) {
        last = pct;
        err << "[n=" << n << "] " << done << "/" << total << " a1-slices\n" << std::flush;
      }
    };
  }
  return opts;
}

inline void validate(const RunConfig& cfg) {
  static const std::vector<std::string> kSubcommands = {"count", "table", "orbits", "list", "oracle", "invariants"};
  if (std::find(kSubcommands.begin(), kSubcommands.end(), cfg.subcommand) == kSubcommands.end()) {
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
  }
  if (cfg.seed) throw UsageError("--seed is not accepted: every computation is deterministic");
  if (cfg.workers == 0) throw UsageError("--workers must be at least 1");
  if (cfg.subcommand == "invariants") {
    if (cfg.n_min < 2) throw UsageError("cover degree must be at least 2");
    return;
  }
  const int cap = cfg.allow_large ? kMaxDegree : kDefaultMaxDegree;
  if (cfg.n_min < 2 || cfg.n_max > cap) {
    throw UsageError("degree must lie in [2, " + std::to_string(cap) + "]" +
                     (cfg.allow_large ? "" : "; pass --allow-large to go beyond " + std::to_string(kDefaultMaxDegree)));
  }
  if (cfg.subcommand == "oracle" && cfg.n_max > kOracleMaxDegree) {
    throw UsageError("oracle runs only for n <= " + std::to_string(kOracleMaxDegree));
  }
  if (cfg.n_max >= kLongRunDegree && !cfg.confirm_long) {
    throw UsageError("n >= " + std::to_string(kLongRunDegree) + " can run for a long time; pass --confirm-long");
  }
}

inline std::string image_label(const GroupFingerprint& fp) {
  return fp.name == "other" ? "other(order " + std::to_string(fp.order) + ")" : fp.name;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool orbits) {
  std::vector<TableRow> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto opts = search_options(cfg, n, err);
    EnumerationResult r = orbits ? analyze(n, opts).result : enumerate_fixed_sigma(n, opts);
    err << "n=" << n << ": " << r.fixed_count << " with s=(1,2) in " << r.elapsed_seconds << " s\n";
    rows.push_back(make_row(r));
  }
  switch (cfg.format) {
    case Format::Text: out << render_text(rows); break;
    case Format::Csv: out << render_csv(rows); break;
    case Format::Json: out << render_json(rows); break;
  }
  return kExitOk;
}

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::Csv) return cmd_table(cfg, out, err, cfg.collect);
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const auto opts = search_options(cfg, n, err);
    EnumerationResult r = cfg.collect ? analyze(n, opts).result : enumerate_fixed_sigma(n, opts);
    err << "n=" << n << ": " << r.elapsed_seconds << " s\n";
    if (cfg.format == Format::Json) {
      out << to_json(r).dump() << '\n';
    } else {
      out << "n=" << n << " fixed_count=" << r.fixed_count << " transpositions=" << r.transpositions
          << " total=" << r.total_count;
      if (r.orbit_count) out << " orbits=" << *r.orbit_count;
      if (!r.image_fingerprint_histogram.empty()) out << " images=" << image_names(r);
      out << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_orbits(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::Csv) out << "n,index,orbit_size,image,sigma,a1,a2,b1,b2\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const Analysis a = analyze(n, search_options(cfg, n, err));
    err << "n=" << n << ": " << a.orbits.size() << " orbits\n";
    for (std::size_t i = 0; i < a.orbits.size(); ++i) {
      const auto& o = a.orbits[i];
      const auto& fp = a.orbit_fingerprints[i];
      const auto& t = o.representative;
      switch (cfg.format) {
        case Format::Json: {
          Json j = to_json(t, fp);
          j["orbit_size"] = o.full_size();
          out << j.dump() << '\n';
          break;
        }
        case Format::Csv:
          out << n << ',' << i << ',' << o.full_size() << ',' << image_label(fp) << ',' << t[Generator::Sigma] << ','
              << t[Generator::A1] << ',' << t[Generator::A2] << ',' << t[Generator::B1] << ',' << t[Generator::B2]
              << '\n';
          break;
        case Format::Text:
          out << "n=" << n << " #" << i << " size=" << o.full_size() << " image=" << image_label(fp)
              << "  s=" << t[Generator::Sigma] << " a1=" << t[Generator::A1] << " a2=" << t[Generator::A2]
              << " b1=" << t[Generator::B1] << " b2=" << t[Generator::B2] << '\n';
          break;
      }
    }
  }
  return kExitOk;
}

inline int cmd_list(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == Format::Csv) out << "n,sigma,a1,a2,b1,b2,image\n";
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    const Analysis a = analyze(n, search_options(cfg, n, err), /*keep_solutions=*/true);
    err << "n=" << n << ": " << a.solutions.size() << " solutions\n";
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
      const auto& t = a.solutions[i];
      const auto& fp = a.orbit_fingerprints[a.membership[i]];
      switch (cfg.format) {
        case Format::Json: out << to_json(t, fp).dump() << '\n'; break;
        case Format::Csv:
          out << n << ',' << t[Generator::Sigma] << ',' << t[Generator::A1] << ',' << t[Generator::A2] << ','
              << t[Generator::B1] << ',' << t[Generator::B2] << ',' << image_label(fp) << '\n';
          break;
        case Format::Text:
          out << "s=" << t[Generator::Sigma] << " a1=" << t[Generator::A1] << " a2=" << t[Generator::A2]
              << " b1=" << t[Generator::B1] << " b2=" << t[Generator::B2] << '\n';
          break;
      }
    }
  }
  return kExitOk;
}

inline int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    std::vector<SolutionTuple> oracle;
    const auto brute = brute_force_oracle(n, &oracle);
    SearchOptions opts = search_options(cfg, n, err);
    const auto pruned = collect_solutions(n, opts);
    std::vector<SolutionTuple> only_pruned, only_oracle;
    std::set_difference(pruned.begin(), pruned.end(), oracle.begin(), oracle.end(), std::back_inserter(only_pruned));
    std::set_difference(oracle.begin(), oracle.end(), pruned.begin(), pruned.end(), std::back_inserter(only_oracle));
    const bool match = only_pruned.empty() && only_oracle.empty();
    if (cfg.format == Format::Json) {
      out << Json{{"n", n}, {"match", match}, {"pruned", pruned.size()}, {"oracle", brute.fixed_count},
                  {"only_pruned", only_pruned.size()}, {"only_oracle", only_oracle.size()}}.dump()
          << '\n';
    } else {
      out << (match ? "MATCH: " : "MISMATCH: ") << pruned.size() << " = " << brute.fixed_count;
      if (!match) out << " (only pruned: " << only_pruned.size() << ", only oracle: " << only_oracle.size() << ")";
      if (cfg.n_min != cfg.n_max) out << "  [n=" << n << "]";
      out << '\n';
    }
    if (!match) status = kExitMismatch;
  }
  return status;
}

inline int cmd_invariants(const RunConfig& cfg, std::ostream& out) {
  std::vector<SurfaceInvariants> rows;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) rows.push_back(invariants_for(n));
  if (cfg.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& s : rows) arr.push_back(to_json(s));
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  const char* sep = cfg.format == Format::Csv ? "," : " ";
  if (cfg.format == Format::Csv) {
    out << "n,chi,K2,c2,pa_Z,Gamma2,Z2,GammaZ,R2,RZ,RR0,R0sq,GammaR0,general_type,z_reducible_forced\n";
  }
  for (const auto& s : rows) {
    if (cfg.format == Format::Text) {
      out << "n=" << s.n << " chi=" << s.chi << " K2=" << s.K2 << " c2=" << s.c2 << " pa(Z)=" << s.pa_Z
          << " Gamma^2=" << s.Gamma2 << " Z^2=" << s.Z2 << " Gamma.Z=" << s.GammaZ << " R^2=" << s.R2
          << " R.Z=" << s.RZ << " R.R0=" << s.RR0 << " R0^2=" << s.R0sq << " Gamma.R0=" << s.GammaR0
          << " general_type=" << (s.general_type ? "yes" : "no")
          << " Z_reducible=" << (s.z_reducible_forced ? "yes" : "no") << '\n';
    } else {
      out << s.n << sep << s.chi << sep << s.K2 << sep << s.c2 << sep << s.pa_Z << sep << s.Gamma2 << sep << s.Z2
          << sep << s.GammaZ << sep << s.R2 << sep << s.RZ << sep << s.RR0 << sep << s.R0sq << sep << s.GammaR0
          << sep << (s.general_type ? 1 : 0) << sep << (s.z_reducible_forced ? 1 : 0) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace detail

// Executes one configured command. Results go to `out` (or cfg.out_path),
// diagnostics and progress to `err`. Returns the process exit status.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    detail::validate(cfg);
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot write to '" + cfg.out_path + "'");
      sink = &file;
    }
    int status = kExitOk;
    if (cfg.subcommand == "count") status = detail::cmd_count(cfg, *sink, err);
    else if (cfg.subcommand == "table") status = detail::cmd_table(cfg, *sink, err, !cfg.counts_only);
    else if (cfg.subcommand == "orbits") status = detail::cmd_orbits(cfg, *sink, err);
    else if (cfg.subcommand == "list") status = detail::cmd_list(cfg, *sink, err);
    else if (cfg.subcommand == "oracle") status = detail::cmd_oracle(cfg, *sink, err);
    else status = detail::cmd_invariants(cfg, *sink);
    sink->flush();
    if (!*sink) throw UsageError("failed writing output");
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory; try a smaller n or the count subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace braidcover::cli
