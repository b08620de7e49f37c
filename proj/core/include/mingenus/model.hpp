#pragma once

// Manifold descriptor data shared by every module: intersection form,
// reflection spheres, surface basis, basic classes, named constructions.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mingenus/lattice.hpp"

namespace mingenus {

/// Numerical shadow of a Seiberg-Witten basic class: the covector
/// kappa(x) = <c1(s), x> on the basis, and the (nonzero) invariant.
struct BasicClass {
  std::string id;
  std::vector<Int> kappa;
  Int sw_value = 0;

  friend bool operator==(const BasicClass&, const BasicClass&) = default;
};

/// An embedded surface known to exist in the manifold.
struct SurfaceEntry {
  std::string label;
  HomologyClass cls;
  Int genus = 0;
  /// Value of the first (canonical) basic class on cls.
  Int kappa = 0;
  bool symplectic = false;
  /// Not part of the construction data; forced by consistency.
  bool inferred = false;

  friend bool operator==(const SurfaceEntry&, const SurfaceEntry&) = default;
};

/// A one-off surface construction for a specific class (e.g. an annulus
/// substitution), used only as an upper bound.
struct NamedConstruction {
  std::string label;
  HomologyClass cls;
  Int genus = 0;
  std::string note;

  friend bool operator==(const NamedConstruction&, const NamedConstruction&) = default;
};

/// target = sum coeff * label, among surface labels.
struct Relation {
  std::string target;
  std::vector<std::pair<Int, std::string>> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct ModelFlags {
  bool simple_type = false;
  bool adjunction_applicable = false;
  bool symplectic = false;

  friend bool operator==(const ModelFlags&, const ModelFlags&) = default;
};

/// Which evaluator computes the genus function of a model.
enum class GenusRoute {
  cp2,         // Thom conjecture formula
  cp2_cp2bar,  // closed form on CP2 # CP2bar
  s2xs2,       // closed form on S2 x S2
  xn,          // homology S2 x S2's, (|a|+1)(|b|+1)
  blowup,      // CP2 # 2CP2bar / CP2 # 3CP2bar: reduction + line arrangements
  surfaces,    // adjunction lower bound + surface-configuration upper bound
};

std::string to_string(GenusRoute route);
std::optional<GenusRoute> parse_route(const std::string& s);

struct ManifoldModel {
  std::string name;
  std::string title;
  IntersectionForm form;
  Int b1 = 0;
  ModelFlags flags;
  GenusRoute route = GenusRoute::surfaces;
  /// Family parameters (n, m, p) the model was generated with.
  std::map<std::string, Int> parameters;
  std::vector<HomologyClass> reflection_spheres;
  /// Coordinates that a diffeomorphism may permute freely (blow-up symmetry).
  std::vector<std::size_t> permutable;
  std::vector<SurfaceEntry> surfaces;
  std::vector<BasicClass> basic_classes;
  std::vector<Relation> relations;
  std::vector<NamedConstruction> constructions;
  /// Orthogonal blocks of coordinates used by the restricted profile search.
  std::vector<std::vector<std::size_t>> profile_blocks;
  /// Free-text remarks: inferred data, conjectures.
  std::vector<std::string> notes;

  std::size_t rank() const noexcept { return form.rank(); }
  Int euler_characteristic() const;
  const SurfaceEntry* find_surface(const std::string& label) const;

  friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;
};

}  // namespace mingenus
