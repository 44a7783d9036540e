#pragma once

// Words over the five generators of the genus-2, two-string surface braid
// group and its eleven defining relators.

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidcover/perm.hpp"

namespace braidcover {

enum class Generator : int { Sigma = 0, A1 = 1, A2 = 2, B1 = 3, B2 = 4 };

inline constexpr int kNumGenerators = 5;
inline constexpr std::array<Generator, kNumGenerators> kGenerators = {
    Generator::Sigma, Generator::A1, Generator::A2, Generator::B1, Generator::B2};

inline std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::Sigma: return "s";
    case Generator::A1: return "a1";
    case Generator::A2: return "a2";
    case Generator::B1: return "b1";
    case Generator::B2: return "b2";
  }
  return "?";
}

struct Letter {
  Generator gen;
  int exponent;  // nonzero

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (const auto& l : letters) append(l.gen, l.exponent);
  }

  Word& append(Generator g, int exponent) {
    if (exponent == 0) throw std::invalid_argument("word exponents must be nonzero");
    letters_.push_back({g, exponent});
    return *this;
  }

  Word& append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }

  // Formal inverse: reversed order, negated exponents.
  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exponent});
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // GAP-like rendering, e.g. "s^-1*a1*s^-1*a1".
  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += '*';
      out += generator_name(letters_[i].gen);
      if (letters_[i].exponent != 1) out += "^" + std::to_string(letters_[i].exponent);
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word operator*(Word a, const Word& b) { return a.append(b); }

namespace word_literals {
inline Word s(int e = 1) { return Word{{Generator::Sigma, e}}; }
inline Word a1(int e = 1) { return Word{{Generator::A1, e}}; }
inline Word a2(int e = 1) { return Word{{Generator::A2, e}}; }
inline Word b1(int e = 1) { return Word{{Generator::B1, e}}; }
inline Word b2(int e = 1) { return Word{{Generator::B2, e}}; }
}  // namespace word_literals

enum class RelatorGroup { R2, R3, R4, TR };

inline std::string_view relator_group_name(RelatorGroup g) {
  switch (g) {
    case RelatorGroup::R2: return "R2";
    case RelatorGroup::R3: return "R3";
    case RelatorGroup::R4: return "R4";
    case RelatorGroup::TR: return "TR";
  }
  return "?";
}

// A relation lhs = rhs stored as the single word lhs * rhs^-1.
struct Relator {
  std::string label;  // e.g. "R2.1", "TR"
  RelatorGroup group;
  Word lhs;
  Word rhs;
  Word word;
};

namespace detail {

inline Relator make_relator(std::string label, RelatorGroup group, Word lhs, Word rhs) {
  Word w = lhs * rhs.inverse();
  return Relator{std::move(label), group, std::move(lhs), std::move(rhs), std::move(w)};
}

inline std::vector<Relator> build_relators() {
  using namespace word_literals;
  std::vector<Relator> rs;
  // R2: s^-1 x s^-1 x = x s^-1 x s^-1 for each of the four surface generators.
  int k = 1;
  for (const Word& x : {a1(), a2(), b1(), b2()}) {
    rs.push_back(make_relator("R2." + std::to_string(k++), RelatorGroup::R2, s(-1) * x * s(-1) * x,
                              x * s(-1) * x * s(-1)));
  }
  // R3
  rs.push_back(make_relator("R3.1", RelatorGroup::R3, s(-1) * a1() * s() * a2(), a2() * s(-1) * a1() * s()));
  rs.push_back(make_relator("R3.2", RelatorGroup::R3, s(-1) * b1() * s() * b2(), b2() * s(-1) * b1() * s()));
  rs.push_back(make_relator("R3.3", RelatorGroup::R3, s(-1) * a1() * s() * b2(), b2() * s(-1) * a1() * s()));
  rs.push_back(make_relator("R3.4", RelatorGroup::R3, s(-1) * b1() * s() * a2(), a2() * s(-1) * b1() * s()));
  // R4
  rs.push_back(make_relator("R4.1", RelatorGroup::R4, s(-1) * a1() * s(-1) * b1(), b1() * s(-1) * a1() * s()));
  rs.push_back(make_relator("R4.2", RelatorGroup::R4, s(-1) * a2() * s(-1) * b2(), b2() * s(-1) * a2() * s()));
  // TR: [a1, b1^-1][a2, b2^-1] = s^2 with [x, y] = x y x^-1 y^-1.
  rs.push_back(make_relator("TR", RelatorGroup::TR, a1() * b1(-1) * a1(-1) * b1() * a2() * b2(-1) * a2(-1) * b2(),
                            s(2)));
  return rs;
}

}  // namespace detail

inline constexpr std::size_t kNumRelators = 11;

// The eleven relators, in the order R2 x4, R3 x4, R4 x2, TR.
inline const std::vector<Relator>& relators() {
  static const std::vector<Relator> rs = detail::build_relators();
  return rs;
}

// Images of the five generators in S_n.
class Assignment {
 public:
  explicit Assignment(int degree) {
    images_.fill(Permutation::identity(degree));
  }

  Assignment(const Permutation& sigma, const Permutation& a1, const Permutation& a2, const Permutation& b1,
             const Permutation& b2)
      : images_{sigma, a1, a2, b1, b2} {
    for (const auto& p : images_) require_same_degree(p, sigma);
  }

  int degree() const { return images_[0].degree(); }

  const Permutation& operator[](Generator g) const { return images_[static_cast<int>(g)]; }

  void set(Generator g, const Permutation& p) {
    require_same_degree(p, images_[0]);
    images_[static_cast<int>(g)] = p;
  }

  const std::array<Permutation, kNumGenerators>& images() const { return images_; }

  // Simultaneous conjugation by q.
  Assignment conjugated(const Permutation& q) const {
    Assignment r = *this;
    const Permutation qi = q.inverse();
    for (auto& p : r.images_) p = qi * p * q;
    return r;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.images_ <=> b.images_; }

 private:
  std::array<Permutation, kNumGenerators> images_{};
};

// Product of the assigned images, left to right; the empty word is the identity.
inline Permutation evaluate(const Word& w, const Assignment& asg) {
  Permutation r = Permutation::identity(asg.degree());
  for (const auto& l : w.letters()) r = r * asg[l.gen].pow(l.exponent);
  return r;
}

struct RelationReport {
  std::array<bool, kNumRelators> passed{};
  std::vector<std::string> failing;  // labels, in relator order
  bool all_passed = false;
};

inline RelationReport check_relations(const Assignment& asg) {
  RelationReport report;
  const auto& rs = relators();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    report.passed[i] = evaluate(rs[i].word, asg).is_identity();
    if (!report.passed[i]) report.failing.push_back(rs[i].label);
  }
  report.all_passed = report.failing.empty();
  return report;
}

inline std::string dump_relators() {
  std::ostringstream os;
  for (const auto& r : relators()) {
    os << r.label << ": " << r.lhs.to_string() << " = " << r.rhs.to_string() << "  [" << r.word.to_string()
       << "]\n";
  }
  return os.str();
}

}  // namespace braidcover
