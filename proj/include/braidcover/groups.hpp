#pragma once

// Subgroups of S_n held as explicit element lists: closure, orbits,
// centralizers and a coarse isomorphism-type fingerprint.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "braidcover/perm.hpp"

namespace braidcover {

// Deduplicated permutations of a common degree, kept sorted by image table.
class ElementSet {
 public:
  explicit ElementSet(int degree) : degree_(degree) {}

  ElementSet(int degree, std::vector<Permutation> elements) : degree_(degree), elements_(std::move(elements)) {
    for (const auto& p : elements_) {
      if (p.degree() != degree_) throw std::invalid_argument("ElementSet: mixed degrees");
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  int degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Permutation& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int degree_;
  std::vector<Permutation> elements_;
};

inline void require_degree(std::span<const Permutation> gens, int degree) {
  if (degree < 1 || degree > kMaxDegree) throw std::invalid_argument("degree out of range");
  for (const auto& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match n");
  }
}

// Subgroup generated by `gens`. In a finite group, right multiplication by
// the generators alone already reaches inverses.
inline ElementSet closure(std::span<const Permutation> gens, int degree) {
  require_degree(gens, degree);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::deque<Permutation> frontier;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  elements.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) {
        elements.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return ElementSet(degree, std::move(elements));
}

inline ElementSet closure(std::initializer_list<Permutation> gens, int degree) {
  return closure(std::span<const Permutation>(gens.begin(), gens.size()), degree);
}

// Orbit of point `start` (1-indexed) under the group generated by `gens`.
inline std::vector<int> orbit_of_point(std::span<const Permutation> gens, int degree, int start = 1) {
  require_degree(gens, degree);
  std::array<bool, kMaxDegree> seen{};
  std::vector<int> orbit{start};
  seen[start - 1] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const int y = g(orbit[i]);
      if (!seen[y - 1]) {
        seen[y - 1] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline bool is_transitive(std::span<const Permutation> gens, int degree) {
  return orbit_of_point(gens, degree).size() == static_cast<std::size_t>(degree);
}

inline bool is_transitive(std::initializer_list<Permutation> gens, int degree) {
  return is_transitive(std::span<const Permutation>(gens.begin(), gens.size()), degree);
}

// |C_{S_n}(g)| = prod_i i^{k_i} k_i! where k_i counts the i-cycles of g.
inline long long centralizer_order(const Permutation& g) {
  std::map<int, int> counts;
  for (int len : g.cycle_type()) ++counts[len];
  long long order = 1;
  for (auto [len, k] : counts) {
    for (int j = 0; j < k; ++j) order *= len;
    order *= factorial(k);
  }
  return order;
}

namespace detail {

// All cycles of g including fixed points, grouped by length.
inline std::map<int, std::vector<std::vector<int>>> cycles_by_length(const Permutation& g) {
  std::map<int, std::vector<std::vector<int>>> out;
  std::array<bool, kMaxDegree> seen{};
  for (int start = 0; start < g.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = g.at(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out[static_cast<int>(cycle.size())].push_back(std::move(cycle));
  }
  return out;
}

}  // namespace detail

// Generators of C(g): each cycle of g as a rotation, plus the swap of each
// consecutive pair of equal-length cycles.
inline std::vector<Permutation> centralizer_generators(const Permutation& g) {
  std::vector<Permutation> gens;
  const int n = g.degree();
  for (const auto& [len, cycles] : detail::cycles_by_length(g)) {
    for (const auto& c : cycles) {
      if (len > 1) {
        std::vector<std::vector<int>> one(1);
        for (int x : c) one[0].push_back(x + 1);
        gens.push_back(Permutation::from_cycles(n, one));
      }
    }
    for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
      std::vector<std::vector<int>> swaps;
      for (int t = 0; t < len; ++t) swaps.push_back({cycles[i][t] + 1, cycles[i + 1][t] + 1});
      gens.push_back(Permutation::from_cycles(n, swaps));
    }
  }
  return gens;
}

// Every element of C(g), generated from the cycle structure of g: an element
// permutes the i-cycles of g among themselves and rotates each one, so
// C(g) is the product over lengths i of the wreath products C_i wr S_{k_i}.
inline ElementSet centralizer_elements(const Permutation& g, int degree) {
  if (g.degree() != degree) throw std::invalid_argument("centralizer_elements: degree mismatch");
  const auto by_length = detail::cycles_by_length(g);
  std::vector<std::vector<std::vector<int>>> classes;
  for (const auto& [len, cycles] : by_length) classes.push_back(cycles);

  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(centralizer_order(g)));
  std::array<std::uint8_t, kMaxDegree> image{};

  // Recurse over length classes; inside each, over an arrangement of the
  // cycles and a rotation per cycle.
  auto recurse_class = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes.size()) {
      std::vector<int> images(degree);
      for (int i = 0; i < degree; ++i) images[i] = image[i] + 1;
      out.push_back(Permutation::from_images(images));
      return;
    }
    const auto& cycles = classes[cls];
    const int k = static_cast<int>(cycles.size());
    const int len = static_cast<int>(cycles[0].size());
    std::vector<int> arrangement(k);
    std::iota(arrangement.begin(), arrangement.end(), 0);
    do {
      std::vector<int> rotation(k, 0);
      for (;;) {
        for (int c = 0; c < k; ++c) {
          const auto& src = cycles[c];
          const auto& dst = cycles[arrangement[c]];
          for (int t = 0; t < len; ++t) image[src[t]] = static_cast<std::uint8_t>(dst[(t + rotation[c]) % len]);
        }
        self(self, cls + 1);
        int c = 0;
        while (c < k && ++rotation[c] == len) rotation[c++] = 0;
        if (c == k) break;
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  };
  recurse_class(recurse_class, 0);
  return ElementSet(degree, std::move(out));
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("intersect: degree mismatch");
  std::vector<Permutation> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(a.degree(), std::move(out));
}

struct GroupFingerprint {
  long long order = 1;
  bool transitive = false;
  bool abelian = true;
  std::map<long long, long long> order_histogram;  // element order -> count
  std::string name;                                // "other" when not in the table

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
  friend auto operator<=>(const GroupFingerprint&, const GroupFingerprint&) = default;

  long long involutions() const {
    auto it = order_histogram.find(2);
    return it == order_histogram.end() ? 0 : it->second;
  }
};

// Names a group from (order, abelian, element-order histogram). Only returns
// a name when the triple determines the group among all groups of that
// order; otherwise "other".
inline std::string small_group_name(long long order, bool abelian, const std::map<long long, long long>& hist) {
  using H = std::map<long long, long long>;
  auto count = [&](long long k) {
    auto it = hist.find(k);
    return it == hist.end() ? 0LL : it->second;
  };
  switch (order) {
    case 1: return "trivial";
    case 2: return "C2";
    case 3: return "C3";
    case 4: return count(4) > 0 ? "C4" : "C2xC2";
    case 6: return abelian ? "C6" : "S3";
    case 8:
      if (abelian) {
        if (count(8) > 0) return "C8";
        if (count(4) > 0) return "C4xC2";
        return "C2xC2xC2";
      }
      if (count(2) == 5) return "D8";
      if (count(2) == 1) return "Q8";
      return "other";
    case 12:
      if (abelian) return "other";
      if (hist == H{{1, 1}, {2, 3}, {3, 8}}) return "A4";
      if (hist == H{{1, 1}, {2, 7}, {3, 2}, {6, 2}}) return "D12";
      return "other";
    case 24:
      if (hist == H{{1, 1}, {2, 9}, {3, 8}, {4, 6}}) return "S4";
      return "other";
    default: return "other";
  }
}

inline GroupFingerprint fingerprint(std::span<const Permutation> gens, int degree) {
  GroupFingerprint fp;
  const ElementSet group = closure(gens, degree);
  fp.order = static_cast<long long>(group.size());
  fp.transitive = is_transitive(gens, degree);
  fp.abelian = true;
  for (std::size_t i = 0; i < gens.size() && fp.abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        fp.abelian = false;
        break;
      }
    }
  }
  for (const auto& x : group) ++fp.order_histogram[x.order()];
  fp.name = small_group_name(fp.order, fp.abelian, fp.order_histogram);
  return fp;
}

inline GroupFingerprint fingerprint(std::initializer_list<Permutation> gens, int degree) {
  return fingerprint(std::span<const Permutation>(gens.begin(), gens.size()), degree);
}

}  // namespace braidcover
