// braidcover: enumerate generic monodromy representations of B_2(C_2) in S_n.

#include <string>

#include "CLI11.hpp"
#include "braidcover/cli.hpp"

namespace {

struct RawOptions {
  std::string n = "2";
  unsigned workers = 1;
  std::string format = "text";
  std::string out;
  bool confirm_long = false;
  bool allow_large = false;
  bool collect = false;
  bool plain = false;
  bool counts_only = false;
  std::string seed;
};

void add_common(CLI::App* sub, RawOptions& o, bool search) {
  sub->add_option("--n", o.n, "degree n or range a..b")->required();
  sub->add_option("--format", o.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_option("--out", o.out, "write results to this file instead of stdout");
  sub->add_option("--seed", o.seed, "rejected: all computations are deterministic");
  if (!search) return;
  sub->add_option("--workers", o.workers, "worker threads for the outer a1 loop");
  sub->add_flag("--confirm-long", o.confirm_long, "required for n >= 8");
  sub->add_flag("--allow-large", o.allow_large, "lift the n <= 12 cap");
  sub->add_flag("--plain", o.plain, "search every a1 instead of one per C((1,2))-orbit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic monodromy representations of the genus-2 surface braid group B_2(C_2) into S_n"};
  app.require_subcommand(1, 1);
  RawOptions o;

  auto* count = app.add_subcommand("count", "count representations with s = (1,2) and in total");
  add_common(count, o, true);
  count->add_flag("--collect", o.collect, "also split solutions into conjugacy orbits and image groups");

  auto* table = app.add_subcommand("table", "counts, orbits, image groups and K^2, chi, c2 per degree");
  add_common(table, o, true);
  table->add_flag("--counts-only", o.counts_only, "skip orbits and image groups");

  auto* orbits = app.add_subcommand("orbits", "one representative per isomorphism class of covers");
  add_common(orbits, o, true);

  auto* list = app.add_subcommand("list", "every representation with s = (1,2), one per line");
  add_common(list, o, true);
  list->add_flag("--collect", o.collect, "accepted for symmetry with count; listing always collects");

  auto* oracle = app.add_subcommand("oracle", "compare the pruned search with unpruned brute force (n <= 4)");
  add_common(oracle, o, true);

  auto* invariants = app.add_subcommand("invariants", "numerical invariants of the covering surface");
  add_common(invariants, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : braidcover::cli::kExitUsage;
  }

  braidcover::cli::RunConfig cfg;
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    std::tie(cfg.n_min, cfg.n_max) = braidcover::cli::parse_degree_range(o.n);
    cfg.format = braidcover::cli::parse_format(o.format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return braidcover::cli::kExitUsage;
  }
  cfg.workers = o.workers;
  cfg.out_path = o.out;
  cfg.confirm_long = o.confirm_long;
  cfg.allow_large = o.allow_large;
  cfg.collect = o.collect;
  cfg.plain = o.plain;
  cfg.counts_only = o.counts_only;
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--seed") > 0) cfg.seed = o.seed;
  }
  return braidcover::cli::run(cfg);
}
