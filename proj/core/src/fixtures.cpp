#include "mingenus/fixtures.hpp"

#include "mingenus/error.hpp"
#include "mingenus/sw.hpp"

namespace mingenus::fixtures {

namespace {

HomologyClass unit(std::size_t rank, std::size_t i) { return HomologyClass::unit(rank, i); }

Int kappa_of(const ManifoldModel& m, const HomologyClass& c) {
  return m.basic_classes.empty() ? 0 : evaluate(m.basic_classes.front().kappa, c);
}

void add_surface(ManifoldModel& m, std::string label, const HomologyClass& c, Int genus, bool symplectic,
                 bool inferred = false) {
  m.surfaces.push_back({std::move(label), c, genus, kappa_of(m, c), symplectic, inferred});
}

// Lattice block [[-n, 1], [1, 0]] + (2n-2) H + n (-E8), with the layout of
// EnkLayout.
IntersectionForm elliptic_form(Int n, Int section_square) {
  IntersectionForm f({{section_square, 1}, {1, 0}});
  for (Int i = 0; i < 2 * n - 2; ++i) f = f.direct_sum(IntersectionForm::hyperbolic());
  for (Int j = 0; j < n; ++j) f = f.direct_sum(IntersectionForm::e8_negative());
  return f;
}

void add_elliptic_common(ManifoldModel& m, Int n) {
  const EnkLayout layout{n};
  const std::size_t r = layout.rank();
  for (std::size_t i = 0; i < layout.hyperbolic_count(); ++i) {
    add_surface(m, "x" + std::to_string(i + 1), unit(r, layout.hyperbolic_x(i)), 1, false);
    add_surface(m, "y" + std::to_string(i + 1), unit(r, layout.hyperbolic_y(i)), 1, false);
  }
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
    for (std::size_t k = 0; k < 8; ++k) {
      const auto c = unit(r, layout.e8_start(j) + k);
      add_surface(m, "r" + std::to_string(j + 1) + "." + std::to_string(k + 1), c, 0, false);
      m.reflection_spheres.push_back(c);
    }
  m.profile_blocks.push_back({layout.section(), layout.fiber()});
  for (std::size_t i = 0; i < layout.hyperbolic_count(); ++i)
    m.profile_blocks.push_back({layout.hyperbolic_x(i), layout.hyperbolic_y(i)});
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    std::vector<std::size_t> block;
    for (std::size_t k = 0; k < 8; ++k) block.push_back(layout.e8_start(j) + k);
    m.profile_blocks.push_back(std::move(block));
  }
}

ManifoldModel exotic_cp2_2(std::string name, std::string title, Int n) {
  ManifoldModel m;
  m.name = std::move(name);
  m.title = std::move(title);
  m.form = IntersectionForm({{0, 1, 0}, {1, 0, 0}, {0, 0, -1}});
  m.flags = {true, true, true};
  m.route = GenusRoute::surfaces;
  m.parameters["n"] = n;
  m.basic_classes = {{"K", {2, 4, 3}, n}, {"-K", {-2, -4, -3}, -n}};
  add_surface(m, "B", {1, 0, 0}, 2, true);
  add_surface(m, "C", {0, 1, 0}, 3, true);
  add_surface(m, "D", {0, 0, 1}, 2, true);
  add_surface(m, "A", {2, 1, -2}, 2, true);
  m.relations.push_back({"A", {{2, "B"}, {1, "C"}, {-2, "D"}}});
  m.constructions.push_back({"annulus-substitution", {1, 1, -1}, 5,
                             "punctured tori of B and reversed D replaced by an annulus"});
  m.constructions.push_back({"braided-torus", {1, 0, 1}, 3, "twice-braided torus in place of the tori of B and D"});
  m.notes.push_back("conjecture: no homologically essential embedded spheres or tori");
  m.notes.push_back("conjecture: all members of the family have equivalent genus functions");
  return m;
}

ManifoldModel exotic_cp2_3(std::string name, std::string title, Int n) {
  ManifoldModel m;
  m.name = std::move(name);
  m.title = std::move(title);
  m.form = IntersectionForm({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  m.flags = {true, true, true};
  m.route = GenusRoute::surfaces;
  m.parameters["n"] = n;
  m.basic_classes = {{"K", {2, 2, 1, 1}, n}, {"-K", {-2, -2, -1, -1}, -n}};
  add_surface(m, "B", {1, 0, 0, 0}, 2, true);
  add_surface(m, "C", {0, 1, 0, 0}, 2, true);
  add_surface(m, "D1", {0, 0, 1, 0}, 1, true);
  add_surface(m, "D2", {0, 0, 0, 1}, 1, true);
  add_surface(m, "A", {1, 1, -1, -1}, 2, true, true);
  add_surface(m, "S", {0, 0, 1, -1}, 0, false, true);
  m.reflection_spheres.push_back({0, 0, 1, -1});
  m.relations.push_back({"A", {{1, "B"}, {1, "C"}, {-1, "D1"}, {-1, "D2"}}});
  m.notes.push_back("pairings of D1, D2 with B and C are not fixed by the construction data and are set to 0");
  m.notes.push_back("A and the (-2)-sphere S are inferred from the pairings and from S being disjoint from A");
  m.notes.push_back("conjecture: all members of the family have equivalent genus functions");
  return m;
}

}  // namespace

ManifoldModel cp2() {
  ManifoldModel m;
  m.name = "cp2";
  m.title = "complex projective plane";
  m.form = IntersectionForm::diagonal({1});
  m.flags.symplectic = true;
  m.route = GenusRoute::cp2;
  m.reflection_spheres = {{1}};
  return m;
}

ManifoldModel cp2_cp2bar() {
  ManifoldModel m;
  m.name = "cp2cp2bar";
  m.title = "CP2 # CP2bar";
  m.form = IntersectionForm::diagonal({1, -1});
  m.flags.symplectic = true;
  m.route = GenusRoute::cp2_cp2bar;
  m.reflection_spheres = {{1, 0}, {0, 1}};
  return m;
}

ManifoldModel s2xs2() {
  ManifoldModel m;
  m.name = "s2xs2";
  m.title = "S2 x S2";
  m.form = IntersectionForm::hyperbolic();
  m.flags.symplectic = true;
  m.route = GenusRoute::s2xs2;
  m.reflection_spheres = {{1, 1}, {1, -1}};
  m.profile_blocks = {{0, 1}};
  return m;
}

ManifoldModel cp2_2cp2bar() {
  ManifoldModel m;
  m.name = "cp2x2";
  m.title = "CP2 # 2CP2bar";
  m.form = IntersectionForm::cp2_blowup(2);
  m.flags.symplectic = true;
  m.route = GenusRoute::blowup;
  m.reflection_spheres = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {2, 1, 1}};
  m.permutable = {1, 2};
  return m;
}

ManifoldModel cp2_3cp2bar() {
  ManifoldModel m;
  m.name = "cp2x3";
  m.title = "CP2 # 3CP2bar";
  m.form = IntersectionForm::cp2_blowup(3);
  m.flags.symplectic = true;
  m.route = GenusRoute::blowup;
  m.reflection_spheres = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                          {1, 1, 1, 0}, {2, 1, 1, 0}, {1, 1, 1, 1}};
  m.permutable = {1, 2, 3};
  return m;
}

ManifoldModel xn(Int n) {
  if (n < 1) throw PreconditionViolated("xn: n must be >= 1");
  ManifoldModel m;
  m.name = "xn";
  m.title = "homology S2 x S2 from torus surgeries";
  m.form = IntersectionForm::hyperbolic();
  m.flags = {true, true, n == 1};
  m.route = GenusRoute::xn;
  m.parameters["n"] = n;
  m.basic_classes = xn_basic_classes(n);
  add_surface(m, "x", {1, 0}, 2, n == 1);
  add_surface(m, "y", {0, 1}, 2, n == 1);
  m.profile_blocks = {{0, 1}};
  return m;
}

ManifoldModel enk(Int n, Int m_knot) {
  if (n < 2 || m_knot < 0) throw PreconditionViolated("enk: needs n >= 2 and m >= 0");
  ManifoldModel m;
  m.name = "enk";
  m.title = "knot surgery on E(n) along the (2,2m+1) torus knot";
  m.form = elliptic_form(n, -n);
  m.flags = {true, true, true};
  m.route = GenusRoute::surfaces;
  m.parameters = {{"n", n}, {"m", m_knot}};
  m.basic_classes = enk_basic_classes(n, m_knot);
  const EnkLayout layout{n};
  add_surface(m, "S", unit(layout.rank(), layout.section()), m_knot, true);
  add_surface(m, "F", unit(layout.rank(), layout.fiber()), 1, true);
  if (m_knot == 0 && n == 2) m.reflection_spheres.push_back(unit(layout.rank(), layout.section()));
  add_elliptic_common(m, n);
  return m;
}

ManifoldModel k3() {
  ManifoldModel m = enk(2, 0);
  m.name = "k3";
  m.title = "K3 surface";
  m.parameters.clear();
  return m;
}

ManifoldModel en(Int n) {
  ManifoldModel m = enk(n, 0);
  m.name = "en";
  m.title = "elliptic surface E(n)";
  m.parameters = {{"n", n}};
  return m;
}

ManifoldModel e2p(Int p) {
  if (p < 1 || p % 2 == 0) throw PreconditionViolated("e2p: p must be odd and >= 1");
  ManifoldModel m;
  m.name = "e2p";
  m.title = "logarithmic transform E(2)_p";
  m.form = elliptic_form(2, 0);
  m.flags = {true, true, false};
  m.route = GenusRoute::surfaces;
  m.parameters = {{"p", p}};
  m.basic_classes = e2p_basic_classes(p);
  const EnkLayout layout{2};
  add_surface(m, "f", unit(layout.rank(), layout.fiber()), 1, false);
  add_elliptic_common(m, 2);
  m.notes.push_back("coordinate 0 is a class sigma dual to the fiber; no surface representing it is recorded");
  return m;
}

ManifoldModel ap() {
  ManifoldModel m = exotic_cp2_2("ap", "exotic CP2 # 2CP2bar (AP)", 1);
  m.parameters.clear();
  return m;
}

ManifoldModel zn(Int n) {
  if (n < 1) throw PreconditionViolated("zn: n must be >= 1");
  return exotic_cp2_2("zn", "exotic CP2 # 2CP2bar family Z_n", n);
}

ManifoldModel bk() {
  ManifoldModel m = exotic_cp2_3("bk", "exotic CP2 # 3CP2bar (BK)", 1);
  m.parameters.clear();
  return m;
}

ManifoldModel vn(Int n) {
  if (n < 1) throw PreconditionViolated("vn: n must be >= 1");
  return exotic_cp2_3("vn", "exotic CP2 # 3CP2bar family V_n", n);
}

std::vector<std::string> model_names() {
  return {"cp2", "cp2cp2bar", "s2xs2", "cp2x2", "cp2x3", "xn", "k3", "en", "enk", "e2p", "ap", "zn", "bk", "vn"};
}

std::map<std::string, Int> default_parameters(const std::string& name) {
  if (name == "xn") return {{"n", 1}};
  if (name == "en") return {{"n", 3}};
  if (name == "enk") return {{"n", 2}, {"m", 1}};
  if (name == "e2p") return {{"p", 3}};
  if (name == "zn" || name == "vn") return {{"n", 2}};
  for (const auto& n : model_names())
    if (n == name) return {};
  throw UnknownManifold("unknown manifold '" + name + "'");
}

ManifoldModel model_by_name(const std::string& name, const std::map<std::string, Int>& params) {
  auto p = default_parameters(name);
  for (const auto& [k, v] : params) {
    if (!p.contains(k)) throw PreconditionViolated("manifold " + name + " takes no parameter '" + k + "'");
    p[k] = v;
  }
  if (name == "cp2") return cp2();
  if (name == "cp2cp2bar") return cp2_cp2bar();
  if (name == "s2xs2") return s2xs2();
  if (name == "cp2x2") return cp2_2cp2bar();
  if (name == "cp2x3") return cp2_3cp2bar();
  if (name == "xn") return xn(p["n"]);
  if (name == "k3") return k3();
  if (name == "en") return en(p["n"]);
  if (name == "enk") return enk(p["n"], p["m"]);
  if (name == "e2p") return e2p(p["p"]);
  if (name == "ap") return ap();
  if (name == "zn") return zn(p["n"]);
  if (name == "bk") return bk();
  if (name == "vn") return vn(p["n"]);
  throw UnknownManifold("unknown manifold '" + name + "'");
}

Catalog builtin_catalog() {
  Catalog c;
  for (const auto& n : model_names()) c.models.push_back(model_by_name(n));
  return c;
}

ManifoldModel resolve_model(const Catalog& catalog, const std::string& name, const std::map<std::string, Int>& params) {
  std::map<std::string, Int> wanted;
  bool known = true;
  try {
    wanted = default_parameters(name);
  } catch (const UnknownManifold&) {
    known = false;
  }
  for (const auto& [k, v] : params) wanted[k] = v;
  for (const auto& m : catalog.models)
    if (m.name == name && m.parameters == wanted) return m;
  if (!known) {
    for (const auto& m : catalog.models)
      if (m.name == name && params.empty()) return m;
    throw UnknownManifold("unknown manifold '" + name + "'");
  }
  return model_by_name(name, params);
}

}  // namespace mingenus::fixtures
