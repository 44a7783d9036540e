#pragma once

// Permutations of {1..n} for n <= kMaxDegree.
//
// Products are read left to right: (p * q)(x) = q(p(x)), i.e. p is applied
// first. This matches GAP and is the only convention used in the library.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#if defined(__SSSE3__)
#include <tmmintrin.h>
#endif

namespace braidcover {

inline constexpr int kMaxDegree = 16;

// Multiset of cycle lengths, sorted in non-increasing order. Fixed points
// appear as 1-cycles so the entries always sum to the degree.
using CycleType = std::vector<int>;

class Permutation {
 public:
  using Images = std::array<std::uint8_t, kMaxDegree>;

  // Identity on a single point.
  Permutation() : Permutation(1) {}

  explicit Permutation(int degree) : degree_(check_degree(degree)) {
    std::iota(images_.begin(), images_.end(), std::uint8_t{0});
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  // `images[i]` is the 1-indexed image of point i + 1.
  static Permutation from_images(std::span<const int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int y = images[i];
      if (y < 1 || y > p.degree() || seen[y - 1]) {
        throw std::invalid_argument("image table is not a bijection of {1..n}");
      }
      seen[y - 1] = true;
      p.images_[i] = static_cast<std::uint8_t>(y - 1);
    }
    return p;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  // Builds the permutation of degree n from 1-indexed cycles.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::array<bool, kMaxDegree> used{};
    for (const auto& cycle : cycles) {
      for (int x : cycle) {
        if (x < 1 || x > degree) throw std::invalid_argument("cycle point out of range");
        if (used[x - 1]) throw std::invalid_argument("point repeated in cycle notation");
        used[x - 1] = true;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        p.images_[cycle[i] - 1] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()] - 1);
      }
    }
    return p;
  }

  // Transposition (i j), 1-indexed.
  static Permutation transposition(int degree, int i, int j) {
    if (i == j) throw std::invalid_argument("transposition needs two distinct points");
    return from_cycles(degree, {{i, j}});
  }

  int degree() const { return degree_; }

  // 1-indexed image of 1-indexed point x.
  int operator()(int x) const { return images_[x - 1] + 1; }

  // 0-indexed access used by the hot loops.
  std::uint8_t at(int i) const { return images_[i]; }
  const Images& raw() const { return images_; }

  // Image table in point order, 1-indexed. This is the canonical encoding.
  std::vector<int> encode() const {
    std::vector<int> out(degree_);
    for (int i = 0; i < degree_; ++i) out[i] = images_[i] + 1;
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < degree_; ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  // Lexicographic on (degree, image table).
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 8; ++i) lo |= std::uint64_t{images_[i]} << (8 * i);
    for (int i = 0; i < 8; ++i) hi |= std::uint64_t{images_[8 + i]} << (8 * i);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL;
    h ^= (hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  // Unchecked product for equal degrees; see compose() for the checked form.
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    Permutation r = p;
#if defined(__SSSE3__)
    __m128i pv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p.images_.data()));
    __m128i qv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(q.images_.data()));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(r.images_.data()), _mm_shuffle_epi8(qv, pv));
#else
    for (int i = 0; i < kMaxDegree; ++i) r.images_[i] = q.images_[p.images_[i]];
#endif
    return r;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (int i = 0; i < kMaxDegree; ++i) r.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  Permutation pow(long long k) const {
    Permutation base = k < 0 ? inverse() : *this;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    Permutation result(degree_);
    while (e != 0) {
      if (e & 1ULL) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  bool commutes_with(const Permutation& q) const {
    for (int i = 0; i < degree_; ++i) {
      if (q.images_[images_[i]] != images_[q.images_[i]]) return false;
    }
    return true;
  }

  // Disjoint cycles in canonical order: each starts at its smallest point,
  // cycles sorted by that point. Fixed points are omitted. 1-indexed.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::array<bool, kMaxDegree> seen{};
    for (int start = 0; start < degree_; ++start) {
      if (seen[start] || images_[start] == start) continue;
      std::vector<int> cycle;
      for (int x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(x + 1);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  CycleType cycle_type() const {
    CycleType lengths;
    std::array<bool, kMaxDegree> seen{};
    for (int start = 0; start < degree_; ++start) {
      if (seen[start]) continue;
      int len = 0;
      for (int x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        ++len;
      }
      lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
  }

  bool is_transposition() const {
    int moved = 0;
    for (int i = 0; i < degree_; ++i) {
      if (images_[i] != i) {
        ++moved;
        if (images_[images_[i]] != i) return false;
      }
    }
    return moved == 2;
  }

  long long order() const {
    long long k = 1;
    for (int len : cycle_type()) k = std::lcm(k, static_cast<long long>(len));
    return k;
  }

  // GAP-style cycle notation, e.g. "(1,2)(3,4,5)"; the identity is "()".
  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  // Parses cycle notation; whitespace is ignored and both "," and blanks are
  // accepted as separators inside a cycle, so "(1 2)(3,4)" is valid.
  static Permutation parse(std::string_view text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<int> cycle;
      for (;;) {
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("unterminated cycle: " + std::string(text));
        if (text[i] == ')') {
          ++i;
          break;
        }
        if (text[i] == ',') {
          if (cycle.empty()) throw std::invalid_argument("misplaced ',' in cycle notation");
          ++i;
          skip_ws();
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
          throw std::invalid_argument("expected a point in cycle notation: " + std::string(text));
        }
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          if (v > kMaxDegree) throw std::invalid_argument("point out of range in cycle notation");
          ++i;
        }
        cycle.push_back(v);
      }
      if (cycle.size() > 1) cycles.push_back(std::move(cycle));
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

 private:
  static std::uint8_t check_degree(int degree) {
    if (degree < 1 || degree > kMaxDegree) {
      throw std::invalid_argument("degree must lie in [1, " + std::to_string(kMaxDegree) + "], got " +
                                  std::to_string(degree));
    }
    return static_cast<std::uint8_t>(degree);
  }

  // images_[i] for i >= degree_ is always i, so whole-array operations are safe.
  Images images_{};
  std::uint8_t degree_;
};

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

inline void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
}

inline Permutation identity(int degree) { return Permutation::identity(degree); }

// p applied first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  return p * q;
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

// by^-1 * p * by: relabels the points of p through `by`.
inline Permutation conjugate(const Permutation& p, const Permutation& by) {
  require_same_degree(p, by);
  return by.inverse() * p * by;
}

inline CycleType cycle_type(const Permutation& p) { return p.cycle_type(); }
inline bool is_transposition(const Permutation& p) { return p.is_transposition(); }
inline long long order_of(const Permutation& p) { return p.order(); }

// All n! permutations of degree n in lexicographic order of image tables.
inline std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace braidcover

template <>
struct std::hash<braidcover::Permutation> {
  std::size_t operator()(const braidcover::Permutation& p) const { return p.hash(); }
};
