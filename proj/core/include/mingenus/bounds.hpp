#pragma once

// Certified lower bounds on the minimal genus.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mingenus/lattice.hpp"
#include "mingenus/model.hpp"

namespace mingenus {

enum class BoundSource { adjunction, char_sphere_lemma, furuta_char, trivial };

std::string to_string(BoundSource source);

struct BoundCertificate {
  Int value = 0;
  BoundSource source = BoundSource::trivial;
  /// Basic class that realized the maximum (adjunction only).
  std::string basic_class_id;
  /// Echoed inputs: pairing values, squares, n.
  std::vector<std::pair<std::string, Int>> inputs;

  Int input(const std::string& key) const;
  /// Recompute value from the echoed inputs; true when it matches.
  bool verify() const;

  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// ceil(x / 2) for any sign of x.
Int ceil_half(Int x);

/// True when the model meets the hypotheses of the adjunction inequality:
/// simple type, b1 = 0, b2+ > 1 or (b2+ = 1 and b2- <= 9), and at least one
/// basic class.
bool adjunction_hypotheses_hold(const ManifoldModel& model);

/// max over basic classes s of ceil((|kappa_s(a)| + a.a + 2) / 2), clamped
/// at 0 (a non-positive value carries no information and is reported with
/// source trivial). Throws Inapplicable when the hypotheses fail.
BoundCertificate adjunction_lower(const ManifoldModel& model, const HomologyClass& a);

/// Rank-3 class in diag(1,-1,-1): a characteristic class of square -n with
/// n > 1 is not represented by a sphere (genus >= 1).
std::optional<BoundCertificate> characteristic_sphere_obstruction(const HomologyClass& a);

/// Rank-3 characteristic class of square -8n-1: genus >= ceil(n/2).
std::optional<BoundCertificate> furuta_char_bound(const HomologyClass& a);

/// b2 >= ceil(5|sigma|/4) + 2 and sigma divisible by 16.
bool furuta_check(Int b2, Int sigma);

/// Lower bound ceil((p+3)/2) for the last genus-profile entry of E(2)_p, p odd.
Int e2p_third_entry_lower(Int p);

}  // namespace mingenus
