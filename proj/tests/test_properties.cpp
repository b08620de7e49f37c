#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mingenus/catalog.hpp"
#include "mingenus/error.hpp"
#include "mingenus/evaluator.hpp"
#include "mingenus/fixtures.hpp"
#include "mingenus/json_io.hpp"
#include "mingenus/profile.hpp"
#include "mingenus/reduction.hpp"
#include "mingenus/surface_calculus.hpp"

using namespace mingenus;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 g(20261018);
  return g;
}

Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

HomologyClass random_class(std::size_t rank, Int bound) {
  HomologyClass c(rank);
  for (auto& x : c) x = uniform(-bound, bound);
  return c;
}

// Random vector of square +-1 or +-2 under the form.
HomologyClass random_mirror(const IntersectionForm& form) {
  while (true) {
    auto s = random_class(form.rank(), 3);
    if (is_licensed_mirror_square(square(form, s))) return s;
  }
}

std::vector<IntersectionForm> forms() {
  return {IntersectionForm::cp2_blowup(2), IntersectionForm::cp2_blowup(3), IntersectionForm::hyperbolic(),
          fixtures::ap().form, fixtures::bk().form, IntersectionForm::diagonal({1, 1, -1})};
}

}  // namespace

TEST(Property, ReflectionInvolutiveIsometry) {
  const auto fs = forms();
  for (int trial = 0; trial < 10000; ++trial) {
    const auto& f = fs[static_cast<std::size_t>(trial) % fs.size()];
    const auto s = random_mirror(f);
    const auto a = random_class(f.rank(), 40);
    const auto b = random_class(f.rank(), 40);
    const auto ra = reflect(f, s, a);
    ASSERT_EQ(reflect(f, s, ra), a);
    ASSERT_EQ(pairing(f, ra, reflect(f, s, b)), pairing(f, a, b));
    ASSERT_EQ(reflect(f, s, s), -s);
  }
}

TEST(Property, ReductionPreservesSquareAndIsIdempotent) {
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t rank = trial % 2 ? 3 : 4;
    const auto a = random_class(rank, 60);
    const auto form = blowup_form_for(a);
    const auto r = reduce(a);
    ASSERT_EQ(square(form, r.canonical), square(form, a)) << a;
    ASSERT_EQ(r.trace.replay(form), r.canonical) << a;
    ASSERT_EQ(reduce(r.canonical).canonical, r.canonical) << a;
    if (square(form, a) >= 0) ASSERT_TRUE(is_nonnegative_canonical(r.canonical)) << a;
  }
}

TEST(Property, GenusSignAndPermutationSymmetry) {
  const auto m2 = fixtures::cp2_2cp2bar();
  const auto m3 = fixtures::cp2_3cp2bar();
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& m = trial % 2 ? m2 : m3;
    auto a = random_class(m.rank(), 12);
    const auto base = evaluate_genus(m, a);
    auto b = a;
    b[static_cast<std::size_t>(uniform(0, static_cast<Int>(m.rank()) - 1))] *= -1;
    std::reverse(b.begin() + 1, b.end());
    const auto other = evaluate_genus(m, b);
    ASSERT_EQ(other.lower, base.lower) << a;
    ASSERT_EQ(other.upper, base.upper) << a;
  }
}

TEST(Property, ResolveGenusPermutationInvariant) {
  for (int trial = 0; trial < 2000; ++trial) {
    SurfaceConfiguration c;
    const auto n = static_cast<std::size_t>(uniform(1, 6));
    for (std::size_t i = 0; i < n; ++i) c.add_component("s" + std::to_string(i), uniform(0, 4));
    for (std::size_t i = 1; i < n; ++i) c.add_intersections(static_cast<std::size_t>(uniform(0, static_cast<Int>(i) - 1)), i, uniform(1, 3));
    for (int extra = 0; extra < 3; ++extra)
      c.add_intersections(static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1)),
                          static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1)), uniform(1, 2), uniform(0, 1) ? 1 : -1);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng());
    ASSERT_EQ(resolve_genus(c.permuted(order)), resolve_genus(c));
    ASSERT_GE(resolve_genus(c), c.total_genus());
  }
}

TEST(Property, FixtureValidation) {
  EXPECT_TRUE(validate(fixtures::builtin_catalog()).empty());
  for (const auto& name : fixtures::model_names()) EXPECT_TRUE(validate(fixtures::model_by_name(name)).empty()) << name;
}

TEST(Property, JsonRoundTrip) {
  const auto ap = fixtures::ap();
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_class(3, 4);
    const GenusRecord rec{ap.name, ap.parameters, a, evaluate_genus(ap, a)};
    ASSERT_EQ(genus_record_from_json(to_json(rec)), rec);
  }
  const auto e = fixtures::e2p(3);
  HomologyClass sigma(22);
  sigma[0] = 1;
  const GenusRecord unknown{e.name, e.parameters, sigma, evaluate_genus(e, sigma)};
  EXPECT_EQ(genus_record_from_json(to_json(unknown)), unknown);

  TableRecord t;
  t.manifold = "cp2x2";
  t.range = 1;
  const auto m = fixtures::cp2_2cp2bar();
  for (Int x = -1; x <= 1; ++x)
    for (Int y = -1; y <= 1; ++y)
      for (Int z = -1; z <= 1; ++z) t.rows.push_back({t.manifold, {}, {x, y, z}, evaluate_genus(m, {x, y, z})});
  EXPECT_EQ(table_record_from_json(to_json(t)), t);

  const ProfileRecord p{"e2p", e.parameters, profile_search(e, {})};
  EXPECT_EQ(profile_record_from_json(to_json(p)), p);

  EXPECT_THROW(genus_record_from_json("{"), ParseError);
  EXPECT_THROW(genus_record_from_json(R"({"schema":"mingenus.table","version":1})"), ParseError);
  EXPECT_THROW(genus_record_from_json(R"({"schema":"mingenus.genus","version":1})"), ParseError);
}

TEST(Property, CatalogRoundTripAcrossFamilies) {
  Catalog c;
  for (Int n = 1; n <= 4; ++n) c.models.push_back(fixtures::xn(n));
  for (Int m = 0; m <= 2; ++m) c.models.push_back(fixtures::enk(3, m));
  c.models.push_back(fixtures::vn(3));
  EXPECT_EQ(parse_catalog(serialize_catalog(c)), c);
}

TEST(Property, IntervalsAreOrdered) {
  for (const auto& m : {fixtures::ap(), fixtures::zn(3), fixtures::bk(), fixtures::cp2_2cp2bar(), fixtures::cp2_3cp2bar()}) {
    for (int trial = 0; trial < 600; ++trial) {
      const auto a = random_class(m.rank(), 5);
      const auto r = evaluate_genus(m, a);
      ASSERT_NO_THROW(r.check()) << m.name << " " << a;
      ASSERT_GE(r.lower, 0);
      if (r.upper) ASSERT_LE(r.lower, *r.upper) << m.name << " " << a;
    }
  }
}

TEST(Property, FamilyMembersShareGenusFunctions) {
  // Z_n and V_n differ only in the invariants' magnitude.
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_class(3, 4);
    EXPECT_EQ(evaluate_genus(fixtures::zn(1), a).lower, evaluate_genus(fixtures::zn(4), a).lower);
    const auto b = random_class(4, 3);
    EXPECT_EQ(evaluate_genus(fixtures::vn(1), b).upper, evaluate_genus(fixtures::vn(4), b).upper);
  }
}
