#pragma once

// Euler-characteristic bookkeeping for surfaces built from transversally
// intersecting pieces: smoothing double points, tubing, unbranched covers,
// line arrangements in blown-up planes.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mingenus/lattice.hpp"

namespace mingenus {

struct SurfaceComponent {
  std::string label;
  Int genus = 0;
};

/// `multiplicity` transverse points between components `first` and `second`,
/// all of local sign `sign` (+1 or -1). first == second denotes double
/// points of an immersed component.
struct IntersectionPoints {
  std::size_t first = 0;
  std::size_t second = 0;
  Int multiplicity = 1;
  int sign = 1;
};

class SurfaceConfiguration {
 public:
  SurfaceConfiguration() = default;

  std::size_t add_component(std::string label, Int genus);
  void add_intersections(std::size_t first, std::size_t second, Int multiplicity, int sign = 1);

  const std::vector<SurfaceComponent>& components() const noexcept { return components_; }
  const std::vector<IntersectionPoints>& intersections() const noexcept { return intersections_; }

  Int total_points() const;
  Int total_genus() const;
  /// True when every intersection point is positive.
  bool all_points_positive() const;

  /// Components grouped by the intersection graph, each group sorted.
  std::vector<std::vector<std::size_t>> connected_groups() const;
  bool is_connected() const { return connected_groups().size() <= 1; }

  /// Same configuration with components reordered: new component i is old
  /// component order[i].
  SurfaceConfiguration permuted(std::span<const std::size_t> order) const;

 private:
  std::vector<SurfaceComponent> components_;
  std::vector<IntersectionPoints> intersections_;
};

/// Genus after smoothing every intersection point of a connected
/// configuration: sum g_i + I - C + 1. Throws DisconnectedConfiguration
/// otherwise (tube the pieces first).
Int resolve_genus(const SurfaceConfiguration& config);

/// Resolve each connected group, then tube the groups together.
Int resolve_and_tube_genus(const SurfaceConfiguration& config);

/// Ambient connected sum of two disjoint surfaces.
Int tube_genus(Int g1, Int g2);

/// Connected unbranched t-fold cover of a genus-g surface: t(g-1)+1.
Int cover_genus(Int g, Int t);

/// Lines in CP2 with pencil i of `pencils[i]` lines through point P_i,
/// `generic` further lines, after blowing up every P_i; plus
/// `exceptional_copies[i]` push-offs of the i-th exceptional sphere. Copies
/// of one exceptional sphere meet each other once and each line of their
/// pencil once; those points are negative.
SurfaceConfiguration blowup_configuration(std::span<const Int> pencils, Int generic,
                                          std::span<const Int> exceptional_copies);

/// resolve_and_tube_genus(blowup_configuration(...)) by counting components,
/// points and connected groups directly, without building the configuration.
Int blowup_configuration_genus(std::span<const Int> pencils, Int generic, std::span<const Int> exceptional_copies);

/// Genus of the smoothed arrangement of a lines in class (a, b_1, ..., b_k),
/// counted from the explicit configuration (a spheres, their surviving
/// double points, disjoint pieces tubed). Needs a >= sum b_i >= 0.
Int line_arrangement_genus(Int a, std::span<const Int> multiplicities);

/// Upper bound for (a, b1, b2) with square < 0, b1 >= b2 >= 0, 2a >= b1 + b2,
/// a >= b2: base curve (a, a - b2, b2) from two pencils plus
/// b1 + b2 - a copies of the first exceptional sphere.
Int negative_square_upper_bound(Int a, Int b1, Int b2);

/// Smallest genus over every blowup_configuration representing the
/// normalized class (a, b_1, ..., b_k) (pencil sizes m_i <= b_i,
/// sum m_i <= a, b_i - m_i exceptional copies). Requires a >= 0 and b_i >= 0.
Int blowup_configuration_upper_bound(Int a, std::span<const Int> b);

/// A basis surface used |multiplicity| times, reversed when negative.
struct WeightedSurface {
  std::string label;
  Int genus = 0;
  Int self_intersection = 0;
  Int multiplicity = 0;
};

/// Configuration representing sum multiplicity_i * S_i. Square-zero
/// surfaces of positive genus become one connected cover; other surfaces
/// become parallel push-offs meeting pairwise in |S_i^2| points. Distinct
/// surfaces meet in |pairings[i][j]| points per pair of sheets.
SurfaceConfiguration combination_configuration(std::span<const WeightedSurface> surfaces,
                                               const std::vector<std::vector<Int>>& pairings);

}  // namespace mingenus
