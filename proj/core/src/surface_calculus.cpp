#include "mingenus/surface_calculus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "mingenus/error.hpp"

namespace mingenus {

namespace {

Int abs_checked(Int x) { return x < 0 ? checked::neg(x) : x; }

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t SurfaceConfiguration::add_component(std::string label, Int genus) {
  if (genus < 0) throw PreconditionViolated("component genus must be non-negative");
  for (const auto& c : components_)
    if (c.label == label) throw PreconditionViolated("duplicate component label '" + label + "'");
  components_.push_back({std::move(label), genus});
  return components_.size() - 1;
}

void SurfaceConfiguration::add_intersections(std::size_t first, std::size_t second, Int multiplicity, int sign) {
  if (first >= components_.size() || second >= components_.size())
    throw PreconditionViolated("intersection refers to a missing component");
  if (multiplicity < 1) throw PreconditionViolated("intersection multiplicity must be >= 1");
  if (sign != 1 && sign != -1) throw PreconditionViolated("intersection sign must be +1 or -1");
  intersections_.push_back({first, second, multiplicity, sign});
}

Int SurfaceConfiguration::total_points() const {
  Int n = 0;
  for (const auto& p : intersections_) n = checked::add(n, p.multiplicity);
  return n;
}

Int SurfaceConfiguration::total_genus() const {
  Int g = 0;
  for (const auto& c : components_) g = checked::add(g, c.genus);
  return g;
}

bool SurfaceConfiguration::all_points_positive() const {
  return std::all_of(intersections_.begin(), intersections_.end(), [](const auto& p) { return p.sign > 0; });
}

std::vector<std::vector<std::size_t>> SurfaceConfiguration::connected_groups() const {
  const std::size_t n = components_.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : intersections_) {
    const auto a = find_root(parent, p.first);
    const auto b = find_root(parent, p.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find_root(parent, i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

SurfaceConfiguration SurfaceConfiguration::permuted(std::span<const std::size_t> order) const {
  if (order.size() != components_.size()) throw PreconditionViolated("permutation length differs");
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inverse[order[i]] = i;
  SurfaceConfiguration out;
  for (auto idx : order) out.components_.push_back(components_.at(idx));
  for (const auto& p : intersections_)
    out.intersections_.push_back({inverse[p.first], inverse[p.second], p.multiplicity, p.sign});
  return out;
}

Int resolve_genus(const SurfaceConfiguration& config) {
  if (config.components().empty()) throw PreconditionViolated("resolve_genus: empty configuration");
  if (!config.is_connected())
    throw DisconnectedConfiguration("resolve_genus: intersection graph is disconnected; tube the pieces first");
  const auto c = static_cast<Int>(config.components().size());
  return checked::add(checked::sub(checked::add(config.total_genus(), config.total_points()), c), 1);
}

Int resolve_and_tube_genus(const SurfaceConfiguration& config) {
  if (config.components().empty()) throw PreconditionViolated("resolve_and_tube_genus: empty configuration");
  const auto c = static_cast<Int>(config.components().size());
  const auto groups = static_cast<Int>(config.connected_groups().size());
  return checked::add(checked::sub(checked::add(config.total_genus(), config.total_points()), c), groups);
}

Int tube_genus(Int g1, Int g2) {
  if (g1 < 0 || g2 < 0) throw PreconditionViolated("tube_genus: negative genus");
  return checked::add(g1, g2);
}

Int cover_genus(Int g, Int t) {
  if (g < 1) throw PreconditionViolated("cover_genus: a sphere has no connected cover of this kind");
  if (t < 1) throw PreconditionViolated("cover_genus: degree must be >= 1");
  return checked::add(checked::mul(t, g - 1), 1);
}

SurfaceConfiguration blowup_configuration(std::span<const Int> pencils, Int generic,
                                          std::span<const Int> exceptional_copies) {
  if (exceptional_copies.size() != pencils.size())
    throw PreconditionViolated("blowup_configuration: one exceptional count per pencil");
  if (generic < 0) throw PreconditionViolated("blowup_configuration: negative generic line count");
  SurfaceConfiguration config;
  // Line components tagged with their pencil (pencils.size() for generic).
  std::vector<std::size_t> line_pencil;
  std::vector<std::size_t> line_index;
  for (std::size_t i = 0; i < pencils.size(); ++i) {
    if (pencils[i] < 0 || exceptional_copies[i] < 0)
      throw PreconditionViolated("blowup_configuration: negative count");
    for (Int j = 0; j < pencils[i]; ++j) {
      line_index.push_back(config.add_component("L" + std::to_string(i + 1) + "." + std::to_string(j + 1), 0));
      line_pencil.push_back(i);
    }
  }
  for (Int j = 0; j < generic; ++j) {
    line_index.push_back(config.add_component("L0." + std::to_string(j + 1), 0));
    line_pencil.push_back(pencils.size());
  }
  // Two lines survive a transverse point unless they share a blown-up point.
  for (std::size_t x = 0; x < line_index.size(); ++x)
    for (std::size_t y = x + 1; y < line_index.size(); ++y)
      if (line_pencil[x] != line_pencil[y] || line_pencil[x] == pencils.size())
        config.add_intersections(line_index[x], line_index[y], 1, 1);

  for (std::size_t i = 0; i < pencils.size(); ++i) {
    std::vector<std::size_t> copies;
    for (Int j = 0; j < exceptional_copies[i]; ++j)
      copies.push_back(config.add_component("E" + std::to_string(i + 1) + "." + std::to_string(j + 1), 0));
    for (std::size_t u = 0; u < copies.size(); ++u) {
      for (std::size_t x = 0; x < line_index.size(); ++x)
        if (line_pencil[x] == i) config.add_intersections(copies[u], line_index[x], 1, -1);
      for (std::size_t v = u + 1; v < copies.size(); ++v) config.add_intersections(copies[u], copies[v], 1, -1);
    }
  }
  return config;
}

Int blowup_configuration_genus(std::span<const Int> pencils, Int generic, std::span<const Int> exceptional_copies) {
  if (exceptional_copies.size() != pencils.size())
    throw PreconditionViolated("blowup_configuration_genus: one exceptional count per pencil");
  if (generic < 0) throw PreconditionViolated("blowup_configuration_genus: negative generic line count");
  Int lines = generic;
  Int components = generic;
  Int points = 0;
  Int nonempty_pencils = 0;
  std::size_t last_pencil = 0;
  for (std::size_t i = 0; i < pencils.size(); ++i) {
    const Int m = pencils[i], e = exceptional_copies[i];
    if (m < 0 || e < 0) throw PreconditionViolated("blowup_configuration_genus: negative count");
    lines = checked::add(lines, m);
    components = checked::add(components, checked::add(m, e));
    points = checked::sub(points, checked::mul(m, m - 1) / 2);
    points = checked::add(points, checked::add(checked::mul(e, m), checked::mul(e, e - 1) / 2));
    if (m > 0) {
      ++nonempty_pencils;
      last_pencil = i;
    }
  }
  if (components == 0) return 0;
  points = checked::add(points, checked::mul(lines, lines - 1) / 2);

  Int groups = 0;
  const Int line_families = generic + nonempty_pencils;
  if (line_families >= 2 || generic == 1) {
    groups = 1;
    for (std::size_t i = 0; i < pencils.size(); ++i)
      if (exceptional_copies[i] > 0 && pencils[i] == 0) ++groups;
  } else if (nonempty_pencils == 1) {
    // A lone pencil: its lines are disjoint unless copies of its exceptional
    // sphere join them.
    groups = exceptional_copies[last_pencil] > 0 ? 1 : pencils[last_pencil];
    for (std::size_t i = 0; i < pencils.size(); ++i)
      if (i != last_pencil && exceptional_copies[i] > 0) ++groups;
  } else {
    for (Int e : exceptional_copies)
      if (e > 0) ++groups;
  }
  return checked::add(checked::sub(points, components), groups);
}

Int line_arrangement_genus(Int a, std::span<const Int> multiplicities) {
  Int total = 0;
  for (Int b : multiplicities) {
    if (b < 0) throw PreconditionViolated("line_arrangement_genus: negative multiplicity");
    total = checked::add(total, b);
  }
  if (a < total) throw PreconditionViolated("line_arrangement_genus: needs a >= sum of multiplicities");
  if (a == 0) return 0;
  const std::vector<Int> none(multiplicities.size(), 0);
  return resolve_and_tube_genus(blowup_configuration(multiplicities, a - total, none));
}

Int negative_square_upper_bound(Int a, Int b1, Int b2) {
  const Int sq = checked::sub(checked::mul(a, a), checked::add(checked::mul(b1, b1), checked::mul(b2, b2)));
  if (a < 0 || b2 < 0 || b1 < b2) throw PreconditionViolated("negative_square_upper_bound: input not normalized");
  if (checked::mul(2, a) < checked::add(b1, b2) || a < b2 || sq >= 0)
    throw PreconditionViolated("negative_square_upper_bound: needs 2a >= b1 + b2, a >= b2 and negative square");
  const std::vector<Int> pencils{a - b2, b2};
  const std::vector<Int> extra{b1 + b2 - a, 0};
  return resolve_and_tube_genus(blowup_configuration(pencils, 0, extra));
}

Int blowup_configuration_upper_bound(Int a, std::span<const Int> b) {
  if (a < 0) throw PreconditionViolated("blowup_configuration_upper_bound: a must be >= 0");
  for (Int x : b)
    if (x < 0) throw PreconditionViolated("blowup_configuration_upper_bound: b must be >= 0");
  Int best = std::numeric_limits<Int>::max();
  std::vector<Int> pencils(b.size(), 0);
  std::vector<Int> extra(b.size(), 0);
  // Enumerate pencil sizes m_i in [0, min(b_i, a)] with sum m_i <= a.
  auto recurse = [&](auto&& self, std::size_t i, Int used) -> void {
    if (i == b.size()) {
      for (std::size_t j = 0; j < b.size(); ++j) extra[j] = b[j] - pencils[j];
      const Int generic = a - used;
      if (used + generic == 0 && std::all_of(extra.begin(), extra.end(), [](Int e) { return e == 0; })) {
        best = 0;  // zero class
        return;
      }
      best = std::min(best, blowup_configuration_genus(pencils, generic, extra));
      return;
    }
    const Int cap = std::min(b[i], a - used);
    for (Int m = 0; m <= cap; ++m) {
      pencils[i] = m;
      self(self, i + 1, used + m);
    }
    pencils[i] = 0;
  };
  recurse(recurse, 0, 0);
  return best;
}

SurfaceConfiguration combination_configuration(std::span<const WeightedSurface> surfaces,
                                               const std::vector<std::vector<Int>>& pairings) {
  const std::size_t n = surfaces.size();
  if (pairings.size() != n) throw PreconditionViolated("combination_configuration: pairing matrix size");
  SurfaceConfiguration config;
  struct Piece {
    std::size_t surface;
    std::size_t component;
    Int sheets;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = surfaces[i];
    const Int t = abs_checked(s.multiplicity);
    if (t == 0) continue;
    const std::string base = (s.multiplicity < 0 ? "-" : "") + s.label;
    if (s.self_intersection == 0 && s.genus >= 1) {
      const auto c = config.add_component(t == 1 ? base : base + "^" + std::to_string(t), cover_genus(s.genus, t));
      pieces.push_back({i, c, t});
      continue;
    }
    std::vector<std::size_t> copies;
    for (Int j = 0; j < t; ++j) {
      copies.push_back(config.add_component(base + "#" + std::to_string(j + 1), s.genus));
      pieces.push_back({i, copies.back(), 1});
    }
    const Int self = abs_checked(s.self_intersection);
    const int self_sign = s.self_intersection < 0 ? -1 : 1;
    if (self > 0)
      for (std::size_t u = 0; u < copies.size(); ++u)
        for (std::size_t v = u + 1; v < copies.size(); ++v) config.add_intersections(copies[u], copies[v], self, self_sign);
  }
  for (std::size_t x = 0; x < pieces.size(); ++x) {
    for (std::size_t y = x + 1; y < pieces.size(); ++y) {
      const auto i = pieces[x].surface, j = pieces[y].surface;
      if (i == j) continue;
      const Int q = pairings[i][j];
      if (q == 0) continue;
      const Int count = checked::mul(checked::mul(pieces[x].sheets, pieces[y].sheets), abs_checked(q));
      int sign = q < 0 ? -1 : 1;
      if ((surfaces[i].multiplicity < 0) != (surfaces[j].multiplicity < 0)) sign = -sign;
      config.add_intersections(pieces[x].component, pieces[y].component, count, sign);
    }
  }
  return config;
}

}  // namespace mingenus
