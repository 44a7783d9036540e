#pragma once

// Enumeration of generic monodromy representations B_2(C_2) -> S_n, i.e.
// assignments (s, a1, a2, b1, b2) satisfying all eleven relators, with s a
// transposition and transitive image.
//
// The pruned search fixes s and walks a1 -> b1 -> a2 -> b2, restricting each
// later generator to centralizers. Since s is an involution, s^-1 = s and
//
//   R4.1  s a1 s b1 = b1 s a1 s        <=>  b1 in C(s a1 s)
//   R3.1  s a1 s a2 = a2 s a1 s        <=>  a2 in C(s a1 s)
//   R3.4  s b1 s a2 = a2 s b1 s        <=>  a2 in C(s b1 s)
//   R3.3  s a1 s b2 = b2 s a1 s        <=>  b2 in C(s a1 s)
//   R3.2  s b1 s b2 = b2 s b1 s        <=>  b2 in C(s b1 s)
//   R4.2  s a2 s b2 = b2 s a2 s        <=>  b2 in C(s a2 s)
//
// so R3 and R4 hold exactly on the search tree and are never re-checked.
// The R2 relators only involve s and one generator each, so they filter
// candidates before they enter the tree. TR and transitivity are checked
// at the leaves. The brute-force oracle below shares none of this and is
// used to test the equivalence.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braidcover/groups.hpp"
#include "braidcover/perm.hpp"
#include "braidcover/words.hpp"

namespace braidcover {

inline constexpr int kDefaultMaxDegree = 12;
inline constexpr int kOracleMaxDegree = 4;

// A generic monodromy representation, stored as the images of the five generators.
using SolutionTuple = Assignment;

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const {
    std::size_t h = 0;
    for (const auto& p : a.images()) h = h * 0x100000001B3ULL ^ p.hash();
    return h;
  }
};

struct EnumerationResult {
  int n = 0;
  long long fixed_count = 0;
  long long transpositions = 0;
  long long total_count = 0;
  std::optional<long long> orbit_count;
  std::map<long long, long long> orbit_size_histogram;                // S_n-orbit size -> number of orbits
  std::map<GroupFingerprint, long long> image_fingerprint_histogram;  // over fixed-s solutions
  double elapsed_seconds = 0.0;
};

enum class Reduction {
  // Every a1 in S_n is searched; the literal reference loop.
  kNone,
  // a1 runs over representatives of conjugacy orbits of C(s); the subtree of
  // h^-1 a1 h is the conjugate of the subtree of a1 by h.
  kSigmaCentralizer,
};

using SolutionSink = std::function<void(const SolutionTuple&)>;
using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

struct SearchOptions {
  std::optional<Permutation> sigma;  // defaults to (1 2)
  Reduction reduction = Reduction::kNone;
  unsigned workers = 1;
  bool allow_large = false;  // lift the n <= 12 cap (up to kMaxDegree)
  SolutionSink sink;         // called for each solution when set
  ProgressCallback progress;
};

inline long long transposition_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

inline void check_search_degree(int n, bool allow_large) {
  const int cap = allow_large ? kMaxDegree : kDefaultMaxDegree;
  if (n < 2 || n > cap) {
    throw std::out_of_range("degree n must lie in [2, " + std::to_string(cap) + "], got " + std::to_string(n));
  }
}

namespace detail {

// R2 for a single generator x: s^-1 x s^-1 x = x s^-1 x s^-1.
inline bool satisfies_r2(const Permutation& x, const Permutation& sigma_inv) {
  const Permutation t = sigma_inv * x;
  const Permutation u = x * sigma_inv;
  return t * t == u * u;
}

inline bool transitive5(const Permutation& s, const Permutation& a1, const Permutation& a2, const Permutation& b1,
                        const Permutation& b2) {
  const int n = s.degree();
  std::array<bool, kMaxDegree> seen{};
  std::array<std::uint8_t, kMaxDegree> stack{};
  int top = 0, reached = 1;
  seen[0] = true;
  stack[top++] = 0;
  const Permutation* gens[] = {&s, &a1, &a2, &b1, &b2};
  while (top > 0) {
    const int x = stack[--top];
    for (const Permutation* g : gens) {
      const int y = g->at(x);
      if (!seen[y]) {
        seen[y] = true;
        stack[top++] = static_cast<std::uint8_t>(y);
        ++reached;
      }
    }
  }
  return reached == n;
}

// Shared, read-only data for one (n, s) search.
class SearchContext {
 public:
  SearchContext(int n, const Permutation& sigma)
      : n_(n), sigma_(sigma), sigma_inv_(sigma.inverse()), sigma_sq_(sigma * sigma) {}

  int degree() const { return n_; }
  const Permutation& sigma() const { return sigma_; }

  bool r2(const Permutation& x) const { return satisfies_r2(x, sigma_inv_); }

  // Visits every solution with the given a1. Returns the number of solutions.
  template <typename Emit>
  long long search_a1(const Permutation& a1, Emit&& emit) const {
    if (!r2(a1)) return 0;
    long long count = 0;
    const Permutation g1 = sigma_ * a1 * sigma_;
    std::vector<Permutation> c1;
    for (const auto& x : centralizer_elements(g1, n_)) {
      if (r2(x)) c1.push_back(x);
    }
    std::vector<Permutation> c2, c3;
    c2.reserve(c1.size());
    c3.reserve(c1.size());
    for (const auto& b1 : c1) {
      const Permutation gb1 = sigma_ * b1 * sigma_;
      // [a1, b1^-1]
      const Permutation prefix = a1 * b1.inverse() * a1.inverse() * b1;
      c2.clear();
      for (const auto& x : c1) {
        if (x.commutes_with(gb1)) c2.push_back(x);
      }
      for (const auto& a2 : c2) {
        const Permutation ga2 = sigma_ * a2 * sigma_;
        const Permutation prefix2 = prefix * a2;
        const Permutation a2_inv = a2.inverse();
        c3.clear();
        for (const auto& x : c2) {
          if (x.commutes_with(ga2)) c3.push_back(x);
        }
        for (const auto& b2 : c3) {
          // TR: [a1, b1^-1][a2, b2^-1] = s^2
          if (prefix2 * b2.inverse() * a2_inv * b2 != sigma_sq_) continue;
          if (!transitive5(sigma_, a1, a2, b1, b2)) continue;
          ++count;
          emit(a1, a2, b1, b2);
        }
      }
    }
    return count;
  }

 private:
  int n_;
  Permutation sigma_, sigma_inv_, sigma_sq_;
};

// One unit of outer-loop work: an a1 value and, under symmetry reduction,
// the conjugators carrying it onto the rest of its C(s)-orbit.
struct WorkItem {
  Permutation a1;
  std::vector<Permutation> transporters;  // h with h^-1 a1 h ranging over the orbit; identity first
};

inline std::vector<WorkItem> build_work_items(const SearchContext& ctx, Reduction reduction) {
  const int n = ctx.degree();
  std::vector<WorkItem> items;
  const auto perms = all_permutations(n);
  if (reduction == Reduction::kNone) {
    items.reserve(perms.size());
    for (const auto& p : perms) items.push_back({p, {Permutation::identity(n)}});
    return items;
  }
  // Orbits of C(s) acting on a1 by conjugation. R2-failing a1 contribute
  // nothing and R2 is invariant under this action, so they are dropped.
  const auto gens = centralizer_generators(ctx.sigma());
  std::unordered_set<Permutation, PermutationHash> seen;
  for (const auto& p : perms) {
    if (!ctx.r2(p) || seen.contains(p)) continue;
    WorkItem item{p, {Permutation::identity(n)}};
    seen.insert(p);
    std::vector<Permutation> orbit{p};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const auto& g : gens) {
        Permutation y = g.inverse() * orbit[i] * g;
        if (seen.insert(y).second) {
          orbit.push_back(y);
          item.transporters.push_back(item.transporters[i] * g);
        }
      }
    }
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace detail

// Solutions with s fixed (default (1 2)). Counts are identical for every
// reduction and worker count; with a sink, solutions arrive in an order that
// depends only on n, s and the reduction.
inline EnumerationResult enumerate_fixed_sigma(int n, const SearchOptions& options = {}) {
  check_search_degree(n, options.allow_large);
  if (options.workers == 0) throw std::invalid_argument("workers must be at least 1");
  const Permutation sigma = options.sigma.value_or(Permutation::transposition(n, 1, 2));
  if (sigma.degree() != n || !sigma.is_transposition()) throw std::invalid_argument("sigma must be a transposition in S_n");

  const auto start = std::chrono::steady_clock::now();
  const detail::SearchContext ctx(n, sigma);
  const auto items = detail::build_work_items(ctx, options.reduction);
  const bool collect = static_cast<bool>(options.sink);

  std::vector<long long> counts(items.size(), 0);
  std::vector<std::vector<SolutionTuple>> buffers(collect ? items.size() : 0);
  std::vector<char> finished(items.size(), 0);
  std::size_t next_to_flush = 0, done = 0;
  std::mutex flush_mutex;

  auto run_item = [&](std::size_t idx) {
    const auto& item = items[idx];
    std::vector<SolutionTuple> local;
    long long c = ctx.search_a1(item.a1, [&](const Permutation& a1, const Permutation& a2, const Permutation& b1,
                                             const Permutation& b2) {
      if (collect) local.emplace_back(sigma, a1, a2, b1, b2);
    });
    counts[idx] = c * static_cast<long long>(item.transporters.size());
    std::lock_guard lock(flush_mutex);
    if (collect) {
      auto& out = buffers[idx];
      out.reserve(local.size() * item.transporters.size());
      for (const auto& h : item.transporters) {
        for (const auto& sol : local) out.push_back(sol.conjugated(h));
      }
    }
    finished[idx] = 1;
    ++done;
    // Emit in item order so the stream is independent of scheduling.
    while (next_to_flush < items.size() && finished[next_to_flush]) {
      if (collect) {
        for (const auto& sol : buffers[next_to_flush]) options.sink(sol);
        std::vector<SolutionTuple>().swap(buffers[next_to_flush]);
      }
      ++next_to_flush;
    }
    if (options.progress) options.progress(done, items.size());
  };

  const unsigned workers = std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) run_item(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) run_item(i);
      });
    }
  }

  EnumerationResult result;
  result.n = n;
  for (long long c : counts) result.fixed_count += c;
  result.transpositions = transposition_count(n);
  result.total_count = result.fixed_count * result.transpositions;
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// Same counts as enumerate_fixed_sigma, with the outer a1 loop shared out
// among `workers` threads.
inline EnumerationResult enumerate_parallel(int n, unsigned workers, SearchOptions options = {}) {
  if (workers == 0) throw std::invalid_argument("workers must be at least 1");
  options.workers = workers;
  return enumerate_fixed_sigma(n, options);
}

// Every solution with the given s, by the pruned search, sorted.
inline std::vector<SolutionTuple> collect_solutions(int n, SearchOptions options = {}) {
  std::vector<SolutionTuple> out;
  options.sink = [&](const SolutionTuple& t) { out.push_back(t); };
  enumerate_fixed_sigma(n, options);
  std::sort(out.begin(), out.end());
  return out;
}

// Unpruned reference: all (a1, a2, b1, b2) in S_n^4 with s = (1 2), checked
// against the full relator list and transitivity.
inline EnumerationResult brute_force_oracle(int n, std::vector<SolutionTuple>* solutions = nullptr) {
  if (n < 2 || n > kOracleMaxDegree) {
    throw std::out_of_range("brute-force oracle supports 2 <= n <= " + std::to_string(kOracleMaxDegree));
  }
  const auto start = std::chrono::steady_clock::now();
  const Permutation sigma = Permutation::transposition(n, 1, 2);
  const auto perms = all_permutations(n);
  EnumerationResult result;
  result.n = n;
  for (const auto& a1 : perms) {
    for (const auto& a2 : perms) {
      for (const auto& b1 : perms) {
        for (const auto& b2 : perms) {
          const Assignment asg(sigma, a1, a2, b1, b2);
          if (!check_relations(asg).all_passed) continue;
          if (!is_transitive(std::span<const Permutation>(asg.images()), n)) continue;
          ++result.fixed_count;
          if (solutions) solutions->push_back(asg);
        }
      }
    }
  }
  if (solutions) std::sort(solutions->begin(), solutions->end());
  result.transpositions = transposition_count(n);
  result.total_count = result.fixed_count * result.transpositions;
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

struct Orbit {
  SolutionTuple representative;  // lexicographically least member
  long long size = 0;            // members with s = (1 2)

  // Size of the S_n-orbit on all solutions: each member with s = (1 2)
  // accounts for one per transposition.
  long long full_size() const { return size * transposition_count(representative.degree()); }
};

namespace detail {

// Orbits of `solutions` under simultaneous conjugation by the group
// generated by `gens`, sorted by representative. Throws if the set is not
// closed under the action. When `membership` is given, it receives the
// orbit index of each input solution.
inline std::vector<Orbit> orbits_under(const std::vector<SolutionTuple>& solutions,
                                       const std::vector<Permutation>& gens,
                                       std::vector<std::size_t>* membership = nullptr) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::unordered_map<SolutionTuple, std::size_t, AssignmentHash> orbit_of;
  orbit_of.reserve(solutions.size() * 2);
  for (const auto& s : solutions) orbit_of.emplace(s, kUnvisited);
  std::vector<Orbit> orbits;
  std::vector<SolutionTuple> frontier;
  for (const auto& s : solutions) {
    auto it = orbit_of.find(s);
    if (it->second != kUnvisited) continue;
    const std::size_t id = orbits.size();
    it->second = id;
    frontier.assign(1, s);
    Orbit orbit{s, 0};
    while (!frontier.empty()) {
      SolutionTuple x = std::move(frontier.back());
      frontier.pop_back();
      ++orbit.size;
      if (x < orbit.representative) orbit.representative = x;
      for (const auto& g : gens) {
        SolutionTuple y = x.conjugated(g);
        auto jt = orbit_of.find(y);
        if (jt == orbit_of.end()) throw std::invalid_argument("solution set is not closed under conjugation");
        if (jt->second == kUnvisited) {
          jt->second = id;
          frontier.push_back(std::move(y));
        }
      }
    }
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return orbits[a].representative < orbits[b].representative; });
  std::vector<std::size_t> rank(orbits.size());
  std::vector<Orbit> sorted;
  sorted.reserve(orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    sorted.push_back(std::move(orbits[order[i]]));
  }
  if (membership) {
    membership->clear();
    for (const auto& s : solutions) membership->push_back(rank[orbit_of.at(s)]);
  }
  return sorted;
}

}  // namespace detail

// Isomorphism classes of covers: orbits of the s = (1 2) solutions under
// conjugation by C((1 2)). These are in bijection with the S_n-classes of
// all solutions, since each class meets s = (1 2) in one C((1 2))-orbit.
inline std::vector<Orbit> orbit_decomposition(const std::vector<SolutionTuple>& solutions, int n,
                                              std::vector<std::size_t>* membership = nullptr) {
  const Permutation base = Permutation::transposition(n, 1, 2);
  for (const auto& s : solutions) {
    if (s[Generator::Sigma] != base) throw std::invalid_argument("orbit_decomposition expects s = (1,2)");
  }
  return detail::orbits_under(solutions, centralizer_generators(base), membership);
}

inline std::vector<Permutation> symmetric_group_generators(int n) {
  std::vector<Permutation> gens{Permutation::transposition(n, 1, 2)};
  if (n > 2) {
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 1);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return gens;
}

// Expected size of every S_n-orbit on all solutions, where known.
inline std::optional<long long> expected_full_orbit_size(int n) {
  switch (n) {
    case 2: return 1;
    case 3: return 6;
    case 4: return 12;
    default: return std::nullopt;
  }
}

struct FullOrbitReport {
  int n = 0;
  long long total_solutions = 0;
  long long full_orbit_count = 0;
  long long reduced_orbit_count = 0;
  std::map<long long, long long> orbit_size_histogram;
  bool counts_match = false;
  bool sizes_match = false;
  bool ok() const { return counts_match && sizes_match; }
};

// Solutions over every transposition s, split into orbits under all of S_n,
// compared with the C((1 2)) decomposition of the s = (1 2) slice.
inline FullOrbitReport full_orbit_check(int n) {
  if (n < 2 || n > kOracleMaxDegree) {
    throw std::out_of_range("full orbit check supports 2 <= n <= " + std::to_string(kOracleMaxDegree));
  }
  FullOrbitReport report;
  report.n = n;
  std::vector<SolutionTuple> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SearchOptions opts;
      opts.sigma = Permutation::transposition(n, i, j);
      auto part = collect_solutions(n, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
  }
  report.total_solutions = static_cast<long long>(all.size());
  const auto full = detail::orbits_under(all, symmetric_group_generators(n));
  report.full_orbit_count = static_cast<long long>(full.size());
  for (const auto& o : full) ++report.orbit_size_histogram[o.size];

  const auto reduced = orbit_decomposition(collect_solutions(n), n);
  report.reduced_orbit_count = static_cast<long long>(reduced.size());
  report.counts_match = report.full_orbit_count == report.reduced_orbit_count;
  const auto expected = expected_full_orbit_size(n);
  report.sizes_match = expected && report.orbit_size_histogram.size() == 1 &&
                       report.orbit_size_histogram.begin()->first == *expected;
  return report;
}

// Full analysis for one degree: counts, orbits and image fingerprints.
// Fingerprints are conjugation invariant, so they are computed once per
// orbit and weighted by orbit size.
struct Analysis {
  EnumerationResult result;
  std::vector<Orbit> orbits;
  std::vector<GroupFingerprint> orbit_fingerprints;  // parallel to orbits
  // Filled only when requested: sorted s = (1 2) solutions and the orbit
  // index of each.
  std::vector<SolutionTuple> solutions;
  std::vector<std::size_t> membership;
};

inline Analysis analyze(int n, SearchOptions options = {}, bool keep_solutions = false) {
  const auto start = std::chrono::steady_clock::now();
  options.sigma.reset();
  std::vector<SolutionTuple> solutions;
  options.sink = [&](const SolutionTuple& t) { solutions.push_back(t); };
  Analysis a;
  a.result = enumerate_fixed_sigma(n, options);
  if (keep_solutions) {
    std::sort(solutions.begin(), solutions.end());
    a.orbits = orbit_decomposition(solutions, n, &a.membership);
    a.solutions = std::move(solutions);
  } else {
    a.orbits = orbit_decomposition(solutions, n);
    std::vector<SolutionTuple>().swap(solutions);
  }
  a.result.orbit_count = static_cast<long long>(a.orbits.size());
  for (const auto& o : a.orbits) {
    ++a.result.orbit_size_histogram[o.full_size()];
    const auto& imgs = o.representative.images();
    auto fp = fingerprint(std::span<const Permutation>(imgs), n);
    a.result.image_fingerprint_histogram[fp] += o.size;
    a.orbit_fingerprints.push_back(std::move(fp));
  }
  a.result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return a;
}

}  // namespace braidcover
