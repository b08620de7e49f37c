// Independent brute-force checks of derived values.
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mingenus/evaluator.hpp"
#include "mingenus/fixtures.hpp"
#include "mingenus/genus_formulas.hpp"
#include "mingenus/reduction.hpp"
#include "mingenus/surface_calculus.hpp"
#include "mingenus/sw.hpp"

using namespace mingenus;

namespace {

using Poly = std::map<Int, Int>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) r[ea + eb] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

// det(V - t V^T) by permutation expansion.
Poly seifert_determinant(const std::vector<std::vector<Int>>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term{{0, inversions % 2 ? -1 : 1}};
    for (std::size_t i = 0; i < n && !term.empty(); ++i) {
      Poly entry;
      if (v[i][perm[i]]) entry[0] += v[i][perm[i]];
      if (v[perm[i]][i]) entry[1] -= v[perm[i]][i];
      std::erase_if(entry, [](const auto& kv) { return kv.second == 0; });
      term = entry.empty() ? Poly{} : poly_mul(term, entry);
    }
    for (auto [e, c] : term) total[e] += c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

// Shift to a symmetric Laurent polynomial with value 1 at t = 1.
LaurentPolynomial normalize_alexander(const Poly& p) {
  const Int shift = (p.begin()->first + p.rbegin()->first) / 2;
  Int sum = 0;
  for (auto [e, c] : p) sum += c;
  std::map<Int, Int> out;
  for (auto [e, c] : p) out[e - shift] = sum < 0 ? -c : c;
  return LaurentPolynomial(out);
}

// Seifert matrix of the (2, 2m+1) torus knot from its standard
// 2m-band surface.
std::vector<std::vector<Int>> torus_seifert(Int m) {
  const auto n = static_cast<std::size_t>(2 * m);
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = -1;
    if (i + 1 < n) v[i][i + 1] = 1;
  }
  return v;
}

// Lines in CP2, b_i of them through P_i (blown up), the rest generic.
// Count surviving double points and components by union-find, then resolve
// each component and tube.
Int explicit_arrangement_genus(Int a, const std::vector<Int>& b) {
  std::vector<int> owner;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (Int k = 0; k < b[i]; ++k) owner.push_back(static_cast<int>(i));
  while (static_cast<Int>(owner.size()) < a) owner.push_back(-1);
  const std::size_t n = owner.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Int points = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (owner[i] >= 0 && owner[i] == owner[j]) continue;  // separated by the blow-up
      ++points;
      parent[find(i)] = find(j);
    }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
  const Int groups = static_cast<Int>(roots.size());
  return n == 0 ? 0 : points - static_cast<Int>(n) + groups;
}

}  // namespace

TEST(Oracle, AlexanderFromSeifertMatrix) {
  for (Int m = 1; m <= 4; ++m) EXPECT_EQ(normalize_alexander(seifert_determinant(torus_seifert(m))), alexander_torus_2q(m)) << m;
}

TEST(Oracle, LineArrangementExplicit) {
  for (Int a = 0; a <= 14; ++a)
    for (Int b1 = 0; b1 <= a; ++b1)
      for (Int b2 = 0; b1 + b2 <= a; ++b2)
        for (Int b3 = 0; b1 + b2 + b3 <= a && b3 <= 3; ++b3) {
          const std::vector<Int> b{b1, b2, b3};
          EXPECT_EQ(line_arrangement_genus(a, b), explicit_arrangement_genus(a, b)) << a << ":" << b1 << "," << b2 << "," << b3;
          EXPECT_EQ(genus_blowup_canonical(a, b), explicit_arrangement_genus(a, b)) << a << ":" << b1 << "," << b2 << "," << b3;
        }
}

TEST(Oracle, OrbitContainsReductionPath) {
  const auto m = fixtures::cp2_2cp2bar();
  for (Int a = 0; a <= 9; ++a)
    for (Int b1 = 0; b1 <= 9; ++b1)
      for (Int b2 = 0; b2 <= 9; ++b2) {
        const HomologyClass c{a, b1, b2};
        if (square(m.form, c) < 0) continue;
        const auto r = reduce_nonnegative(c);
        const auto path = r.trace.path(m.form);
        Int bound = 0;
        for (const auto& p : path) bound = std::max(bound, p.max_abs());
        const auto orbit = orbit_bfs(m, c, bound);
        for (const auto& p : path) ASSERT_TRUE(std::binary_search(orbit.begin(), orbit.end(), p)) << c;
        // Every class in the orbit reduces to the same canonical form.
        for (const auto& o : orbit) ASSERT_EQ(reduce_nonnegative(o).canonical, r.canonical) << c << " ~ " << o;
      }
}

TEST(Oracle, CombinationMatchesXnFormula) {
  // Xn genus from explicit grids of genus-2 surfaces, including covers.
  for (Int a = 0; a <= 4; ++a)
    for (Int b = 0; b <= 4; ++b) {
      if (!a && !b) continue;
      SurfaceConfiguration c;
      std::vector<std::size_t> xs, ys;
      if (a) xs.push_back(c.add_component("x", cover_genus(2, a)));
      if (b) ys.push_back(c.add_component("y", cover_genus(2, b)));
      if (a && b) c.add_intersections(xs[0], ys[0], a * b);
      EXPECT_EQ(resolve_genus(c), genus_xn(a, b)) << a << "," << b;
    }
}

TEST(Oracle, ApCombinationByHand) {
  // B + C + D: B and C meet once (genus 5), D is disjoint and is tubed on (7).
  SurfaceConfiguration c;
  const auto b = c.add_component("B", 2);
  const auto cc = c.add_component("C", 3);
  c.add_component("D", 2);
  c.add_intersections(b, cc, 1);
  EXPECT_EQ(resolve_and_tube_genus(c), 7);
  EXPECT_EQ(*combination_upper(fixtures::ap(), {1, 1, 1}), 7);
}
