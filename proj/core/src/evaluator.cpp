#include "mingenus/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mingenus/error.hpp"
#include "mingenus/reduction.hpp"
#include "mingenus/surface_calculus.hpp"

namespace mingenus {

namespace {

Int abs_checked(Int x) { return x < 0 ? checked::neg(x) : x; }

HomologyClass normalized_blowup(const HomologyClass& c) {
  HomologyClass n = c;
  for (auto& x : n) x = abs_checked(x);
  std::sort(n.begin() + 1, n.end(), std::greater<>());
  return n;
}

// Tube a sphere-or-curve in CP2 # CP2bar with curves in the remaining
// CP2bar summands; best choice of which exceptional coordinate to pair.
Int connected_sum_bound(const HomologyClass& n) {
  Int best = std::numeric_limits<Int>::max();
  for (std::size_t i = 1; i < n.rank(); ++i) {
    Int g = genus_cp2_cp2bar(n[0], n[i]);
    for (std::size_t j = 1; j < n.rank(); ++j)
      if (j != i) g = tube_genus(g, genus_cp2(n[j]));
    best = std::min(best, g);
  }
  return best;
}

std::string describe(const std::vector<std::pair<std::string, Int>>& inputs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : inputs) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

Justification from_certificate(const BoundCertificate& c) {
  std::string name = to_string(c.source);
  if (!c.basic_class_id.empty()) name += ":" + c.basic_class_id;
  return {"bound", name, c.value, describe(c.inputs)};
}

bool is_unit_like(const HomologyClass& c, std::size_t& index) {
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] != 1 || ++nonzero > 1) return false;
    index = i;
  }
  return nonzero == 1;
}

void check_rank(const ManifoldModel& model, const HomologyClass& a) {
  if (a.rank() != model.rank())
    throw BadCoordinates("manifold " + model.name + " has rank " + std::to_string(model.rank()) + ", got " +
                         std::to_string(a.rank()) + " coordinates");
}

std::vector<Justification> blowup_upper(const ManifoldModel& model, const HomologyClass& a) {
  std::vector<HomologyClass> path{a};
  std::string trace_note = "no reduction";
  try {
    const auto red = reduce(a);
    path = red.trace.path(model.form);
    trace_note = std::to_string(red.trace.steps.size()) + " moves to " + red.canonical.to_string();
  } catch (const NonTermination&) {
  }
  Int config = std::numeric_limits<Int>::max(), sum = config, recipe = config;
  for (const auto& c : path) {
    const auto n = normalized_blowup(c);
    std::vector<Int> b(n.begin() + 1, n.end());
    config = std::min(config, blowup_configuration_upper_bound(n[0], b));
    sum = std::min(sum, connected_sum_bound(n));
    if (n.rank() == 3 && square(model.form, n) < 0 && 2 * n[0] >= n[1] + n[2] && n[0] >= n[2])
      recipe = std::min(recipe, negative_square_upper_bound(n[0], n[1], n[2]));
  }
  std::vector<Justification> out;
  out.push_back({"construction", "line-configuration", config, trace_note});
  out.push_back({"construction", "connected-sum", sum, "curve in CP2#CP2bar tubed with plane curves"});
  if (recipe != std::numeric_limits<Int>::max())
    out.push_back({"construction", "exceptional-copies", recipe, "pencil curve plus exceptional push-offs"});
  return out;
}

}  // namespace

std::optional<Int> combination_upper(const ManifoldModel& model, const HomologyClass& a) {
  check_rank(model, a);
  const std::size_t r = model.rank();
  std::vector<const SurfaceEntry*> unit(r, nullptr);
  std::vector<const SurfaceEntry*> extra;
  for (const auto& s : model.surfaces) {
    std::size_t idx = 0;
    if (is_unit_like(s.cls, idx)) {
      if (!unit[idx] || s.genus < unit[idx]->genus) unit[idx] = &s;
    } else if (!s.cls.is_zero()) {
      extra.push_back(&s);
    }
  }

  std::optional<Int> best;
  std::vector<Int> t(extra.size(), -kExtraSurfaceRange);
  while (true) {
    HomologyClass residual = a;
    for (std::size_t e = 0; e < extra.size(); ++e) residual = residual - t[e] * extra[e]->cls;
    bool feasible = true;
    std::vector<const SurfaceEntry*> used;
    std::vector<Int> mult;
    for (std::size_t e = 0; e < extra.size(); ++e)
      if (t[e] != 0) {
        used.push_back(extra[e]);
        mult.push_back(t[e]);
      }
    for (std::size_t i = 0; i < r && feasible; ++i) {
      if (residual[i] == 0) continue;
      if (!unit[i]) {
        feasible = false;
        break;
      }
      used.push_back(unit[i]);
      mult.push_back(residual[i]);
    }
    if (feasible && !used.empty()) {
      std::vector<WeightedSurface> ws;
      std::vector<std::vector<Int>> pairings(used.size(), std::vector<Int>(used.size(), 0));
      for (std::size_t i = 0; i < used.size(); ++i) {
        ws.push_back({used[i]->label, used[i]->genus, square(model.form, used[i]->cls), mult[i]});
        for (std::size_t j = 0; j < used.size(); ++j) pairings[i][j] = pairing(model.form, used[i]->cls, used[j]->cls);
      }
      const Int g = resolve_and_tube_genus(combination_configuration(ws, pairings));
      if (!best || g < *best) best = g;
    }
    std::size_t k = 0;
    while (k < t.size() && t[k] == kExtraSurfaceRange) t[k++] = -kExtraSurfaceRange;
    if (k == t.size()) break;
    ++t[k];
  }
  return best;
}

std::vector<BoundCertificate> lower_certificates(const ManifoldModel& model, const HomologyClass& a) {
  check_rank(model, a);
  std::vector<BoundCertificate> out;
  if (adjunction_hypotheses_hold(model)) out.push_back(adjunction_lower(model, a));
  if (model.route == GenusRoute::blowup && a.rank() == 3) {
    if (auto c = characteristic_sphere_obstruction(a)) out.push_back(*c);
    if (auto c = furuta_char_bound(a)) out.push_back(*c);
  }
  if (out.empty()) {
    BoundCertificate trivial;
    out.push_back(trivial);
  }
  return out;
}

std::vector<Justification> upper_constructions(const ManifoldModel& model, const HomologyClass& a) {
  check_rank(model, a);
  if (model.route == GenusRoute::blowup) return blowup_upper(model, a);

  std::vector<HomologyClass> images{a};
  for (const auto& s : model.reflection_spheres) {
    auto img = reflect(model.form, s, a);
    if (std::find(images.begin(), images.end(), img) == images.end()) images.push_back(std::move(img));
  }
  std::vector<Justification> out;
  std::optional<Int> combo;
  std::string combo_detail = "basis surfaces";
  for (const auto& c : images) {
    const auto g = combination_upper(model, c);
    if (g && (!combo || *g < *combo)) {
      combo = g;
      combo_detail = c == a ? "basis surfaces" : "basis surfaces after reflection to " + c.to_string();
    }
  }
  if (combo) out.push_back({"construction", "surface-combination", *combo, combo_detail});
  for (const auto& nc : model.constructions)
    for (const auto& c : images)
      if (nc.cls == c || nc.cls == -c) {
        out.push_back({"construction", nc.label, nc.genus, nc.note});
        break;
      }
  return out;
}

GenusResult evaluate_genus(const ManifoldModel& model, const HomologyClass& a) {
  check_rank(model, a);
  if (a.is_zero()) return GenusResult::zero_class();

  switch (model.route) {
    case GenusRoute::cp2:
      return GenusResult::exact_value(genus_cp2(a[0]), {"formula", "thom-degree", 0, "(d-1)(d-2)/2"});
    case GenusRoute::cp2_cp2bar:
      return GenusResult::exact_value(genus_cp2_cp2bar(a[0], a[1]), {"formula", "cp2-cp2bar", 0, ""});
    case GenusRoute::s2xs2:
      return GenusResult::exact_value(genus_s2xs2(a[0], a[1]), {"formula", "s2xs2", 0, "(|a|-1)(|b|-1)"});
    case GenusRoute::xn:
      return GenusResult::exact_value(genus_xn(a[0], a[1]), {"formula", "homology-s2xs2", 0, "(|a|+1)(|b|+1)"});
    case GenusRoute::blowup:
      if (square(model.form, a) >= 0) {
        const auto red = reduce_nonnegative(a);
        return GenusResult::exact_value(genus_cp2k_nonnegative(a),
                                        {"formula", "blowup-reduction", 0, "canonical " + red.canonical.to_string()});
      }
      break;
    case GenusRoute::surfaces:
      break;
  }

  GenusResult r;
  for (const auto& c : lower_certificates(model, a)) {
    r.lower = std::max(r.lower, c.value);
    r.provenance.push_back(from_certificate(c));
  }
  for (const auto& j : upper_constructions(model, a)) {
    if (!r.upper || j.value < *r.upper) r.upper = j.value;
    r.provenance.push_back(j);
  }
  r.exact = r.upper && *r.upper == r.lower;
  r.check();
  return r;
}

}  // namespace mingenus
