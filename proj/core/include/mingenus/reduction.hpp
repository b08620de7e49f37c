#pragma once

// Canonical diffeomorphism-orbit representatives in CP2 # 2CP2bar and
// CP2 # 3CP2bar, with a replayable trace of the moves used.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mingenus/lattice.hpp"
#include "mingenus/model.hpp"

namespace mingenus {

struct Move {
  enum class Kind { sign_flip, permute, reflect };

  Kind kind = Kind::sign_flip;
  /// sign_flip: coordinate index.
  std::size_t index = 0;
  /// permute: new[i] = old[permutation[i]].
  std::vector<std::size_t> permutation;
  /// reflect: mirror class.
  HomologyClass mirror;

  static Move flip(std::size_t index);
  static Move permute(std::vector<std::size_t> permutation);
  static Move reflect(HomologyClass mirror);

  HomologyClass apply(const IntersectionForm& form, const HomologyClass& a) const;

  friend bool operator==(const Move&, const Move&) = default;
};

struct ReductionTrace {
  HomologyClass start;
  HomologyClass end;
  std::vector<Move> steps;

  /// Apply every step to start; the result must equal end.
  HomologyClass replay(const IntersectionForm& form) const;
  /// Every intermediate class, start first and end last.
  std::vector<HomologyClass> path(const IntersectionForm& form) const;
  std::size_t reflection_count() const;

  /// One move per line, e.g.
  ///   start 5 4 3
  ///   reflect 1 1 1 -> 1 0 -1
  ///   flip 2 -> 1 0 1
  ///   permute 0 2 1 -> 1 1 0
  ///   end 1 1 0
  std::string to_text(const IntersectionForm& form) const;
  static ReductionTrace from_text(std::string_view text);

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

struct Reduction {
  HomologyClass canonical;
  ReductionTrace trace;
};

/// Iteration cap for the negative-square loops.
inline constexpr int kReductionIterationCap = 64;

/// The lattice diag(1, -1, ..., -1) matching a rank-3 or rank-4 class.
IntersectionForm blowup_form_for(const HomologyClass& a);

/// Flip every negative coordinate and sort the exceptional coordinates
/// descending (stable). Rank 3 or 4 only.
Reduction normalize(const HomologyClass& a);

/// Square >= 0: repeatedly reflect in (1,1,1) [rank 3] or (1,1,1,1) [rank 4]
/// until a >= sum of b.
Reduction reduce_nonnegative(const HomologyClass& a);

/// Square < 0, rank 3: reflect in (2,1,1) while 2a < b1 + b2.
Reduction reduce_negative_rank3(const HomologyClass& a);

/// Square < 0, rank 4: reflect in (1,1,1,1) while that strictly lowers a.
Reduction reduce_negative_rank4(const HomologyClass& a);

/// Dispatch on rank and sign of the square.
Reduction reduce(const HomologyClass& a);

/// Canonical predicate for non-negative squares: coordinates >= 0, b sorted
/// descending, a >= sum of b.
bool is_nonnegative_canonical(const HomologyClass& a);

/// All classes reachable from `a` by the model's reflection spheres and
/// permutations of its permutable coordinates, never leaving the box
/// max|coordinate| <= bound. Sorted ascending.
std::vector<HomologyClass> orbit_bfs(const ManifoldModel& model, const HomologyClass& a, Int bound);

}  // namespace mingenus
