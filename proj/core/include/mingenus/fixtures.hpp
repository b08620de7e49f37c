#pragma once

// Built-in manifold models and the families they come from.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mingenus/catalog.hpp"
#include "mingenus/model.hpp"

namespace mingenus::fixtures {

ManifoldModel cp2();
ManifoldModel cp2_cp2bar();
ManifoldModel s2xs2();
/// CP2 # 2CP2bar with the reflection spheres the reduction uses.
ManifoldModel cp2_2cp2bar();
/// CP2 # 3CP2bar.
ManifoldModel cp2_3cp2bar();
/// Homology S2 x S2 family, invariant +-n.
ManifoldModel xn(Int n);
/// Knot surgery on E(n) along T(2, 2m+1) (m = 0: E(n) itself).
ManifoldModel enk(Int n, Int m);
ManifoldModel k3();
ManifoldModel en(Int n);
/// Logarithmic transform of multiplicity p (odd) on K3.
ManifoldModel e2p(Int p);
/// Exotic CP2 # 2CP2bar with basis B, C, D.
ManifoldModel ap();
/// Same lattice and basic classes as ap, invariants +-n.
ManifoldModel zn(Int n);
/// Exotic CP2 # 3CP2bar with basis B, C, D1, D2.
ManifoldModel bk();
ManifoldModel vn(Int n);

/// Names accepted by model_by_name.
std::vector<std::string> model_names();

/// Parameter names (with defaults) a family takes, e.g. xn -> {n: 1}.
std::map<std::string, Int> default_parameters(const std::string& name);

/// Build a model from its name and parameters (missing ones defaulted).
/// Throws UnknownManifold or PreconditionViolated.
ManifoldModel model_by_name(const std::string& name, const std::map<std::string, Int>& params = {});

/// The models shipped in fixtures/fixtures.cat.
Catalog builtin_catalog();

/// Catalog entry with this name and parameters (defaults filled in) if
/// present, else the built-in generator.
ManifoldModel resolve_model(const Catalog& catalog, const std::string& name,
                            const std::map<std::string, Int>& params = {});

}  // namespace mingenus::fixtures
