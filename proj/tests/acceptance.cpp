// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Pass --skip-long to skip the n = 8, 9 run.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "braidcover/enumerate.hpp"
#include "braidcover/groups.hpp"
#include "braidcover/surface.hpp"
#include "test_util.hpp"

namespace {

using namespace braidcover;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed checks for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void expect_eq(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << ": got " << actual << ", expected " << expected;
      failures_.push_back(os.str());
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Check&)> body;
  bool long_running = false;
};

unsigned hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void count_table(Check& c) {
  const std::vector<std::pair<int, long long>> expected = {{2, 16}, {3, 80}, {4, 480}, {5, 0}, {6, 2880}, {7, 0}};
  const auto t_small = Clock::now();
  for (auto [n, fixed] : expected) {
    const auto t0 = Clock::now();
    const auto r = enumerate_fixed_sigma(n);  // single-threaded literal loop
    const double dt = seconds_since(t0);
    c.expect_eq(r.fixed_count, fixed, "fixed count n=" + std::to_string(n));
    c.expect_eq(r.total_count, fixed * n * (n - 1) / 2, "total n=" + std::to_string(n));
    if (n == 7) c.expect(dt < 300.0, "n=7 took " + std::to_string(dt) + " s (limit 300 s)");
    if (n == 6) {
      const double small = seconds_since(t_small);
      c.expect(small < 10.0, "n<=6 took " + std::to_string(small) + " s (limit 10 s)");
    }
    c.note("n=" + std::to_string(n) + " " + std::to_string(r.fixed_count) + " in " + std::to_string(dt) + " s");
  }
}

void extended_table(Check& c) {
  const std::vector<std::pair<int, long long>> expected = {{8, 172800}, {9, 0}};
  for (auto [n, fixed] : expected) {
    SearchOptions opts;
    opts.reduction = Reduction::kSigmaCentralizer;
    const auto t0 = Clock::now();
    const auto r = enumerate_parallel(n, hardware_workers(), opts);
    const double dt = seconds_since(t0);
    c.expect_eq(r.fixed_count, fixed, "fixed count n=" + std::to_string(n));
    c.expect_eq(r.transpositions, n * (n - 1) / 2, "transpositions n=" + std::to_string(n));
    c.expect_eq(r.total_count, r.transpositions * fixed, "total n=" + std::to_string(n));
    c.expect(dt < 3600.0, "n=" + std::to_string(n) + " took " + std::to_string(dt) + " s");
    c.note("n=" + std::to_string(n) + " reduced search " + std::to_string(r.fixed_count) + " in " + std::to_string(dt) + " s");
  }
  // Second route for n = 8: the literal loop over every a1.
  const auto t0 = Clock::now();
  const auto plain = enumerate_parallel(8, hardware_workers());
  c.expect_eq(plain.fixed_count, 172800LL, "literal loop n=8");
  c.note("n=8 literal loop in " + std::to_string(seconds_since(t0)) + " s");
}

void orbit_counts(Check& c) {
  const auto t0 = Clock::now();
  const std::vector<std::tuple<int, long long, long long>> expected = {{2, 16, 1}, {3, 40, 6}, {4, 240, 12}};
  for (auto [n, orbits, size] : expected) {
    const auto sols = collect_solutions(n);
    c.expect_eq(static_cast<long long>(orbit_decomposition(sols, n).size()), orbits, "orbits n=" + std::to_string(n));
    const auto full = full_orbit_check(n);
    c.expect(full.ok(), "full_orbit_check n=" + std::to_string(n));
    c.expect_eq(full.full_orbit_count, orbits, "S_n-orbits over all transpositions n=" + std::to_string(n));
    c.expect(full.orbit_size_histogram == std::map<long long, long long>{{size, orbits}},
             "every S_n-orbit has size " + std::to_string(size) + " for n=" + std::to_string(n));
  }
  const double dt = seconds_since(t0);
  c.expect(dt < 30.0, "orbit checks took " + std::to_string(dt) + " s (limit 30 s)");
}

void image_uniformity(Check& c) {
  for (const auto& t : collect_solutions(3)) {
    const auto fp = fingerprint(std::span<const Permutation>(t.images()), 3);
    c.expect(fp.name == "S3" && fp.order == 6 && !fp.abelian, "n=3 image is S3 for every solution");
  }
  long long d8 = 0;
  const auto sols4 = collect_solutions(4);
  for (const auto& t : sols4) {
    const auto fp = fingerprint(std::span<const Permutation>(t.images()), 4);
    if (fp.order == 8 && fp.involutions() == 5 && fp.name == "D8") ++d8;
  }
  c.expect_eq(d8, static_cast<long long>(sols4.size()), "n=4 solutions with D8 image");
  c.expect_eq(sols4.size(), std::size_t{480}, "n=4 solution count");
}

void oracle_equivalence(Check& c) {
  for (int n : {2, 3, 4}) {
    const auto t0 = Clock::now();
    std::vector<SolutionTuple> oracle;
    brute_force_oracle(n, &oracle);
    const double dt = seconds_since(t0);
    c.expect(collect_solutions(n) == oracle, "pruned == oracle solution sets, n=" + std::to_string(n));
    SearchOptions reduced;
    reduced.reduction = Reduction::kSigmaCentralizer;
    c.expect(collect_solutions(n, reduced) == oracle, "reduced search == oracle solution sets, n=" + std::to_string(n));
    if (n == 4) c.expect(dt < 120.0, "n=4 oracle took " + std::to_string(dt) + " s (limit 120 s)");
    c.note("oracle n=" + std::to_string(n) + ": " + std::to_string(oracle.size()) + " tuples in " + std::to_string(dt) + " s");
  }
}

void surface_invariants(Check& c) {
  c.expect_eq(invariants_for(2).K2, 8LL, "K2 n=2");
  c.expect_eq(invariants_for(3).K2, 7LL, "K2 n=3");
  c.expect_eq(invariants_for(4).K2, 6LL, "K2 n=4");
  for (int n = 2; n <= 9; ++n) {
    const auto s = invariants_for(n);
    c.expect_eq(s.chi, 1LL, "chi n=" + std::to_string(n));
    c.expect_eq(s.c2, static_cast<long long>(n + 2), "c2 n=" + std::to_string(n));
    c.expect_eq(s.K2 + s.c2, 12LL, "Noether n=" + std::to_string(n));
  }
}

void property_suites(Check& c) {
  std::mt19937_64 rng(424242);
  // Group laws.
  int law_failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const auto p = testing_util::random_permutation(n, rng);
    const auto q = testing_util::random_permutation(n, rng);
    const auto r = testing_util::random_permutation(n, rng);
    const bool ok = compose(compose(p, q), r) == compose(p, compose(q, r)) && compose(identity(n), p) == p &&
                    compose(p, identity(n)) == p && compose(p, inverse(p)).is_identity() &&
                    compose(inverse(p), p).is_identity();
    law_failures += !ok;
  }
  c.expect_eq(law_failures, 0, "group law violations in 10^4 cases");

  // Centralizer order vs brute force, every cycle type n <= 6.
  int centralizer_failures = 0, cycle_types = 0;
  for (int n = 1; n <= 6; ++n) {
    std::set<CycleType> seen;
    for (const auto& g : all_permutations(n)) {
      if (!seen.insert(g.cycle_type()).second) continue;
      ++cycle_types;
      const auto brute = testing_util::brute_centralizer(g);
      const auto built = centralizer_elements(g, n);
      if (built.elements() != ElementSet(n, brute).elements() ||
          centralizer_order(g) != static_cast<long long>(brute.size())) {
        ++centralizer_failures;
      }
    }
  }
  c.expect_eq(centralizer_failures, 0, "centralizer mismatches");
  c.expect_eq(cycle_types, 1 + 2 + 3 + 5 + 7 + 11, "cycle types covered");

  // Conjugation invariance of the relator check; half the samples are solutions.
  const auto sols = collect_solutions(4);
  int invariance_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Assignment asg = trial % 2 || n != 4 ? testing_util::random_assignment(n, rng) : sols[rng() % sols.size()];
    const auto q = testing_util::random_permutation(asg.degree(), rng);
    if (check_relations(asg).passed != check_relations(asg.conjugated(q)).passed) ++invariance_failures;
  }
  c.expect_eq(invariance_failures, 0, "conjugation-invariance violations in 10^3 assignments");

  // Independence of the fixed transposition.
  for (int n : {3, 4}) {
    const long long base = enumerate_fixed_sigma(n).fixed_count;
    SearchOptions o;
    o.sigma = Permutation::transposition(n, 1, 3);
    c.expect_eq(enumerate_fixed_sigma(n, o).fixed_count, base, "s=(1,3) vs s=(1,2), n=" + std::to_string(n));
  }

  // Determinism across worker counts.
  std::vector<SolutionTuple> reference;
  for (unsigned w : {1u, 2u, 8u}) {
    std::vector<SolutionTuple> stream;
    SearchOptions o;
    o.sink = [&](const SolutionTuple& t) { stream.push_back(t); };
    enumerate_parallel(6, w, o);
    if (w == 1) reference = stream;
    c.expect(stream == reference, "n=6 solution stream with " + std::to_string(w) + " workers");
  }
  c.expect_eq(reference.size(), std::size_t{2880}, "n=6 solutions");
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_long = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-long") == 0) skip_long = true;
  }
  const std::vector<Criterion> criteria = {
      {1, "count table n=2..7", count_table},
      {2, "extended table n=8,9", extended_table, true},
      {3, "orbit counts and orbit sizes n=2..4", orbit_counts},
      {4, "image groups S3 (n=3) and D8 (n=4)", image_uniformity},
      {5, "pruned search equals brute-force oracle n=2..4", oracle_equivalence},
      {6, "surface invariants", surface_invariants},
      {7, "property suites", property_suites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    if (cr.long_running && skip_long) {
      std::cout << "[SKIP] " << cr.id << ". " << cr.title << " (--skip-long)\n";
      continue;
    }
    Check check;
    const auto t0 = Clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = check.failures().empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << cr.id << ". " << cr.title << " (" << seconds_since(t0) << " s)\n";
    for (const auto& n : check.notes()) std::cout << "         " << n << '\n';
    for (const auto& f : check.failures()) std::cout << "         FAILED: " << f << '\n';
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
