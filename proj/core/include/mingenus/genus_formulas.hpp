#pragma once

// Closed-form minimal genus functions for the manifolds where they are known.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mingenus/lattice.hpp"

namespace mingenus {

/// One tagged reason behind a bound.
struct Justification {
  /// "formula", "bound", "construction" or "convention".
  std::string kind;
  std::string name;
  Int value = 0;
  std::string detail;

  friend bool operator==(const Justification&, const Justification&) = default;
};

/// Minimal genus of a class: exact, or a certified [lower, upper] interval
/// (upper may be unknown).
struct GenusResult {
  Int lower = 0;
  std::optional<Int> upper;
  bool exact = false;
  /// The class is zero and the value 0 is a convention, not a formula case.
  bool zero_convention = false;
  std::vector<Justification> provenance;

  static GenusResult exact_value(Int genus, Justification why);
  static GenusResult zero_class();

  /// Throws PreconditionViolated if lower > upper or exact without lower == upper.
  void check() const;

  friend bool operator==(const GenusResult&, const GenusResult&) = default;
};

/// g(dh) in CP2: (|d|-1)(|d|-2)/2, and 0 for d = 0.
Int genus_cp2(Int d);

/// Minimal genus of (a, b) in CP2 # CP2bar.
Int genus_cp2_cp2bar(Int a, Int b);

/// Minimal genus of (u, v) in S2 x S2.
Int genus_s2xs2(Int u, Int v);

/// (|a|+1)(|b|+1) on the homology S2 x S2's; 0 on the zero class (convention).
Int genus_xn(Int a, Int b);

/// Genus of the smoothed line arrangement in class (a, b_1, ..., b_k) with
/// a >= sum b_i >= 0: ((a-1)(a-2) - sum b_i(b_i - 1)) / 2, except that a
/// single pencil (some b_i = a, a >= 1) is a union of disjoint spheres and
/// has genus 0, and the zero class has genus 0.
Int genus_blowup_canonical(Int a, std::span<const Int> b);

/// Twice the genus predicted by the blow-up formula with the wrong
/// first coefficient b_1(b_1 - 2). Kept only as a regression guard.
Int genus_blowup_printed_doubled(Int a, std::span<const Int> b);

/// Genus of a non-negative-square class in CP2 # 2CP2bar (rank 3) or
/// CP2 # 3CP2bar (rank 4): reduce, then apply genus_blowup_canonical.
Int genus_cp2k_nonnegative(const HomologyClass& a);

}  // namespace mingenus
