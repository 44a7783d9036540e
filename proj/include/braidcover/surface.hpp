#pragma once

// Numerical invariants of the surface S carried by a generic degree-n cover
// S -> Sym^2(C_2) branched on the diagonal. Only integers are modelled.
//
// Notation: delta is the diagonal, E the exceptional curve, Gamma = f^*delta,
// Z = f^*E, and f^*delta = 2R + R0 with R the ramification curve.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidcover/enumerate.hpp"

namespace braidcover {

struct SurfaceInvariants {
  int n = 0;
  long long chi = 0;  // chi(O_S)
  long long K2 = 0;
  long long c2 = 0;
  long long pa_Z = 0;
  long long Gamma2 = 0;
  long long Z2 = 0;
  long long GammaZ = 0;
  long long R2 = 0;
  long long RZ = 0;
  long long RR0 = 0;
  long long R0sq = 0;
  long long GammaR0 = 0;
  bool general_type = false;
  bool z_reducible_forced = false;

  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

namespace surface_constants {
// On Sym^2(C_2): delta^2, E^2, delta.E.
inline constexpr long long kDeltaSq = -4;
inline constexpr long long kESq = -1;
inline constexpr long long kDeltaE = 6;
// Topological Euler numbers of Sym^2(C_2) minus delta and of a genus-2 curve.
inline constexpr long long kEulerComplement = 3;
inline constexpr long long kEulerGenus2 = -2;
}  // namespace surface_constants

inline SurfaceInvariants invariants_for(int n) {
  using namespace surface_constants;
  if (n < 2) throw std::invalid_argument("cover degree must be at least 2");
  SurfaceInvariants s;
  s.n = n;
  // Pullbacks multiply self-intersections by the degree.
  s.Gamma2 = n * kDeltaSq;
  s.Z2 = n * kESq;
  s.GammaZ = n * kDeltaE;
  // R maps isomorphically onto delta: RZ = delta.E, and adjunction on the
  // genus-2 curve R with K_S = Z + R gives 2 = 2 R^2 + RZ.
  s.RZ = kDeltaE;
  s.R2 = (2 - s.RZ) / 2;
  s.K2 = s.Z2 + 2 * s.RZ + s.R2;
  // (2R + R0)^2 = Gamma^2 and Gamma.R0 = (n - 2) delta^2 force R.R0 = 0.
  s.GammaR0 = (n - 2) * kDeltaSq;
  const long long four_rr0_plus_r0sq = s.Gamma2 - 4 * s.R2;
  s.RR0 = (four_rr0_plus_r0sq - s.GammaR0) / 2;
  s.R0sq = four_rr0_plus_r0sq - 4 * s.RR0;
  // R0 -> delta is etale of degree n - 2 and R ~ delta.
  s.c2 = n * kEulerComplement + kEulerGenus2 + (n - 2) * kEulerGenus2;
  s.chi = (s.K2 + s.c2) / 12;
  // p_a(Z) = Z(Z + K_S)/2 + 1 = Z(2Z + R)/2 + 1.
  s.pa_Z = (2 * s.Z2 + s.RZ) / 2 + 1;
  s.general_type = n >= 2 && n <= 9;
  s.z_reducible_forced = s.pa_Z < 0;
  return s;
}

struct ExistenceReport {
  int n = 0;
  bool exists = false;
  long long total_count = 0;
  std::optional<long long> isomorphism_classes;
  SurfaceInvariants invariants;
  std::vector<std::string> notes;
};

inline ExistenceReport existence_verdict(int n, const EnumerationResult& result) {
  if (result.n != n) throw std::invalid_argument("existence_verdict: result is for a different degree");
  ExistenceReport r;
  r.n = n;
  r.total_count = result.total_count;
  r.exists = result.total_count > 0;
  r.isomorphism_classes = result.orbit_count;
  r.invariants = invariants_for(n);
  if (!r.exists) {
    r.notes.push_back("no generic cover of degree " + std::to_string(n) + " branched on the diagonal exists");
  }
  if (n == 2 && r.exists) {
    r.notes.push_back("one class is the product cover C2 x C2 -> Sym^2(C2)");
  }
  if (r.invariants.z_reducible_forced && r.exists) {
    r.notes.push_back("Z = f^*E is reducible (negative arithmetic genus)");
  }
  return r;
}

}  // namespace braidcover
