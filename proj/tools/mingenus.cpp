#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mingenus/catalog.hpp"
#include "mingenus/commands.hpp"
#include "mingenus/error.hpp"
#include "mingenus/fixtures.hpp"

namespace {

using namespace mingenus;

struct Options {
  std::string manifold;
  std::vector<std::string> coords;
  std::string format = "text";
  bool trace = false;
  Int range = 3;
  Int bound = 0;
  bool unrestricted = false;
  std::optional<Int> n, m, p;
  std::string path;
};

// MINGENUS_CATALOG, then the source tree copy, then the installed copy,
// then the compiled-in models.
Catalog load_default_catalog(std::string* origin) {
  if (const char* env = std::getenv("MINGENUS_CATALOG"); env && *env) {
    *origin = env;
    return load_catalog(env);
  }
  for (const char* candidate : {MINGENUS_DEFAULT_CATALOG, MINGENUS_INSTALLED_CATALOG}) {
    if (std::filesystem::exists(candidate)) {
      *origin = candidate;
      return load_catalog(candidate);
    }
  }
  *origin = "(built-in)";
  return fixtures::builtin_catalog();
}

std::map<std::string, Int> params_of(const Options& o) {
  std::map<std::string, Int> p;
  if (o.n) p["n"] = *o.n;
  if (o.m) p["m"] = *o.m;
  if (o.p) p["p"] = *o.p;
  return p;
}

OutputFormat format_of(const Options& o) { return *parse_format(o.format); }

void add_common(CLI::App* sub, Options& o, bool with_coords) {
  sub->add_option("manifold", o.manifold, "manifold name (cp2, cp2cp2bar, s2xs2, cp2x2, cp2x3, xn, k3, en, enk, e2p, "
                                          "ap, zn, bk, vn)")
      ->required();
  if (with_coords) sub->add_option("coords", o.coords, "class coordinates in the model basis")->required();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--n", o.n, "family parameter n");
  sub->add_option("--m", o.m, "knot parameter m (enk)");
  sub->add_option("--p", o.p, "multiplicity p (e2p)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal genus functions of 4-manifold homology classes"};
  app.require_subcommand(1);
  Options o;

  auto* genus = app.add_subcommand("genus", "minimal genus (exact or certified interval) of a class");
  add_common(genus, o, true);
  auto* reduce_cmd = app.add_subcommand("reduce", "canonical orbit representative in CP2 # kCP2bar");
  add_common(reduce_cmd, o, true);
  reduce_cmd->add_flag("--trace", o.trace, "print the moves, one per line");
  auto* orbit = app.add_subcommand("orbit", "orbit of a class under the model's reflections, inside a box");
  add_common(orbit, o, true);
  orbit->add_option("--bound", o.bound, "box bound on |coordinates| (default: max |coordinate| of the class)");
  auto* bounds = app.add_subcommand("bounds", "all lower-bound certificates and upper-bound constructions");
  add_common(bounds, o, true);
  auto* table = app.add_subcommand("table", "genus of every class with coordinates in [-R, R]");
  add_common(table, o, false);
  table->add_option("--range", o.range, "coordinate range R");
  auto* profile = app.add_subcommand("profile", "genus profile search");
  add_common(profile, o, false);
  o.bound = 0;
  profile->add_option("--bound", o.bound, "bound on |coordinates| of candidate vectors (default 3)");
  profile->add_flag("--unrestricted", o.unrestricted, "search the whole box instead of the block sublattice");
  auto* sw = app.add_subcommand("sw", "Seiberg-Witten basic classes and invariants");
  add_common(sw, o, false);
  auto* validate_cmd = app.add_subcommand("validate", "parse and validate a catalog file");
  validate_cmd->add_option("path", o.path, "catalog file (default: the catalog in use)");
  validate_cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    std::string origin;
    if (validate_cmd->parsed()) {
      if (o.path.empty()) {
        load_default_catalog(&origin);
        o.path = origin;
      }
      if (o.path == "(built-in)") {
        std::cout << render_violations(validate(fixtures::builtin_catalog()), format_of(o));
        return kExitExact;
      }
      const auto v = cmd_validate(o.path);
      std::cout << render_violations(v, format_of(o));
      return v.empty() ? kExitExact : kExitError;
    }

    const Catalog catalog = load_default_catalog(&origin);
    const ManifoldModel model = fixtures::resolve_model(catalog, o.manifold, params_of(o));
    const auto fmt = format_of(o);

    if (genus->parsed()) {
      const auto a = parse_coordinates(model, o.coords);
      const auto r = cmd_genus(model, a);
      std::cout << render_genus(model, a, r, fmt);
      return exit_code_for(r);
    }
    if (reduce_cmd->parsed()) {
      const auto a = parse_coordinates(model, o.coords);
      std::cout << render_reduce(model, a, cmd_reduce(model, a), o.trace, fmt);
      return kExitExact;
    }
    if (orbit->parsed()) {
      const auto a = parse_coordinates(model, o.coords);
      const Int b = o.bound > 0 ? o.bound : a.max_abs();
      std::cout << render_orbit(model, a, b, cmd_orbit(model, a, b), fmt);
      return kExitExact;
    }
    if (bounds->parsed()) {
      const auto a = parse_coordinates(model, o.coords);
      std::cout << render_bounds(model, a, cmd_bounds(model, a), fmt);
      return kExitExact;
    }
    if (table->parsed()) {
      std::cout << render_table(cmd_table(model, o.range), fmt);
      return kExitExact;
    }
    if (profile->parsed()) {
      ProfileOptions po;
      po.norm_bound = o.bound > 0 ? o.bound : 3;
      po.restrict_to_blocks = !o.unrestricted;
      const auto p = cmd_profile(model, po);
      std::cout << render_profile(model, p, fmt);
      return p.is_exact() ? kExitExact : kExitInterval;
    }
    if (sw->parsed()) {
      std::cout << render_sw(model, cmd_sw(model), fmt);
      return kExitExact;
    }
  } catch (const UnknownManifold& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownManifold;
  } catch (const BadCoordinates& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadCoordinates;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
