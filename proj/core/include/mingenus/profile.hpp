#pragma once

// Allowed sequences and the lexicographic genus profile.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mingenus/genus_formulas.hpp"
#include "mingenus/lattice.hpp"
#include "mingenus/model.hpp"

namespace mingenus {

/// b2+ vectors, pairwise orthogonal, each of even square, spanning a
/// positive definite subspace.
struct AllowedSequence {
  std::vector<HomologyClass> vectors;

  friend bool operator==(const AllowedSequence&, const AllowedSequence&) = default;
};

/// Throws DimensionMismatch when the length differs from b2+ or a vector has
/// the wrong rank.
bool is_allowed(const ManifoldModel& model, std::span<const HomologyClass> vectors);

/// Lexicographic minimum; throws PreconditionViolated on an empty list or
/// unequal lengths.
std::vector<Int> lex_min(const std::vector<std::vector<Int>>& tuples);

using GenusEvaluator = std::function<GenusResult(const HomologyClass&)>;

struct ProfileOptions {
  /// Every coordinate of a candidate vector lies in [-norm_bound, norm_bound].
  Int norm_bound = 3;
  /// Candidates supported in a single profile block of the model (the
  /// default); false enumerates the whole box.
  bool restrict_to_blocks = true;
  /// Refuse searches whose box has more points than this.
  std::size_t max_box_points = 50'000'000;
};

/// Result of a bounded profile search. `lower` is the lexicographic minimum
/// of the sorted lower genus bounds, `upper` that of the sorted upper bounds
/// (nullopt entries are unknown). The true profile restricted to the search
/// space lies lexicographically between them.
struct Profile {
  std::vector<Int> lower;
  std::vector<std::optional<Int>> upper;
  AllowedSequence lower_witness;
  AllowedSequence upper_witness;
  /// Entry i is exact when lower and upper agree on entries 0..i.
  std::vector<bool> exact;
  Int radius = 0;
  bool restricted = true;
  /// Candidate vectors evaluated.
  std::size_t candidates = 0;

  bool is_exact() const;
  std::size_t size() const noexcept { return lower.size(); }

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Throws NotFound when no allowed sequence exists within the bound, and
/// CapExceeded when the box is too large.
Profile profile_search(const ManifoldModel& model, const ProfileOptions& options, const GenusEvaluator& evaluator);

/// Same search with the default evaluator (evaluate_genus).
Profile profile_search(const ManifoldModel& model, const ProfileOptions& options);

}  // namespace mingenus
