#pragma once

// Genus dispatcher: closed formulas where the model's route has one,
// otherwise certified lower bounds against constructed upper bounds.

#include <vector>

#include "mingenus/bounds.hpp"
#include "mingenus/genus_formulas.hpp"
#include "mingenus/lattice.hpp"
#include "mingenus/model.hpp"

namespace mingenus {

/// Range of coefficients tried for surfaces that are not basis vectors
/// (e.g. A = 2B + C - 2D) when decomposing a class.
inline constexpr Int kExtraSurfaceRange = 2;

/// Every lower-bound certificate that applies to the class.
std::vector<BoundCertificate> lower_certificates(const ManifoldModel& model, const HomologyClass& a);

/// Every upper bound the surface constructions give for the class, one
/// justification per construction family (value = best genus in that family).
std::vector<Justification> upper_constructions(const ManifoldModel& model, const HomologyClass& a);

/// Smallest genus among configurations built from the model's surfaces
/// representing a (decomposition into basis surfaces plus up to
/// kExtraSurfaceRange copies of each extra surface). None when some needed
/// coordinate has no surface.
std::optional<Int> combination_upper(const ManifoldModel& model, const HomologyClass& a);

/// Genus of the class: exact when a formula or matching certificates apply,
/// an interval otherwise. Throws BadCoordinates when the rank is wrong.
GenusResult evaluate_genus(const ManifoldModel& model, const HomologyClass& a);

}  // namespace mingenus
