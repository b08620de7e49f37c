#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mingenus/catalog.hpp"
#include "mingenus/error.hpp"
#include "mingenus/fixtures.hpp"

using namespace mingenus;

namespace {

bool has_invariant(const std::vector<Violation>& v, const std::string& tag) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.invariant == tag; });
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mingenus-test-" + name);
}

const char* kMinimal =
    "mingenus-catalog 1\n"
    "# a comment\n"
    "model tiny\n"
    "title a tiny model\n"
    "b1 0\n"
    "flags symplectic\n"
    "route cp2\n"
    "gram 1\n"
    "sphere 1\n"
    "end\n";

}  // namespace

TEST(Catalog, BuiltinsValidate) {
  for (const auto& m : fixtures::builtin_catalog().models) {
    const auto v = validate(m);
    EXPECT_TRUE(v.empty()) << m.name << ": " << (v.empty() ? "" : v.front().to_string());
  }
  EXPECT_TRUE(validate(fixtures::builtin_catalog()).empty());
}

TEST(Catalog, FamiliesValidateAcrossParameters) {
  for (Int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(validate(fixtures::xn(n)).empty()) << n;
    EXPECT_TRUE(validate(fixtures::zn(n)).empty()) << n;
    EXPECT_TRUE(validate(fixtures::vn(n)).empty()) << n;
  }
  for (Int n = 2; n <= 4; ++n)
    for (Int m = 0; m <= 4; ++m) EXPECT_TRUE(validate(fixtures::enk(n, m)).empty()) << n << "," << m;
  for (Int p = 1; p <= 9; p += 2) EXPECT_TRUE(validate(fixtures::e2p(p)).empty()) << p;
}

TEST(Catalog, RoundTrip) {
  const auto c = fixtures::builtin_catalog();
  const auto text = serialize_catalog(c);
  EXPECT_EQ(parse_catalog(text), c);
  EXPECT_EQ(serialize_catalog(parse_catalog(text)), text);
}

TEST(Catalog, ShippedFileMatchesBuiltins) {
  EXPECT_EQ(read_file(MINGENUS_FIXTURES_FILE), serialize_catalog(fixtures::builtin_catalog()));
}

TEST(Catalog, MinimalParses) {
  const auto c = parse_catalog(kMinimal);
  ASSERT_EQ(c.models.size(), 1u);
  EXPECT_EQ(c.models[0].name, "tiny");
  EXPECT_EQ(c.models[0].route, GenusRoute::cp2);
  EXPECT_TRUE(validate(c).empty());
  ASSERT_NE(c.find("tiny"), nullptr);
  EXPECT_EQ(c.find("nope"), nullptr);
}

TEST(Catalog, ParseErrorsCarryPosition) {
  try {
    parse_catalog("mingenus-catalog 1\nmodel x\nroute nowhere\nend\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
  EXPECT_THROW(parse_catalog("not-a-catalog 1\n"), ParseError);
  EXPECT_THROW(parse_catalog("mingenus-catalog 99\n"), ParseError);
  EXPECT_THROW(parse_catalog("mingenus-catalog 1\nmodel x\ngram 1\n"), ParseError);
  EXPECT_THROW(parse_catalog("mingenus-catalog 1\nmodel x\nb1 seven\nend\n"), ParseError);
}

TEST(Catalog, InvalidGramIsValidationError) {
  EXPECT_THROW(parse_catalog("mingenus-catalog 1\nmodel x\nroute cp2\ngram 1 2\ngram 3 1\nend\n"), ValidationError);
}

TEST(Validate, AlteredKappaBreaksParity) {
  auto ap = fixtures::ap();
  for (auto& b : ap.basic_classes) b.kappa[1] = b.kappa[1] > 0 ? 3 : -3;
  EXPECT_TRUE(has_invariant(validate(ap), "kappa-characteristic"));
}

TEST(Validate, BadSphereSquare) {
  auto m = fixtures::cp2_2cp2bar();
  m.reflection_spheres.push_back({1, 1, 0});
  EXPECT_TRUE(has_invariant(validate(m), "sphere-square"));
}

TEST(Validate, Square3SphereFileRejectedOnLoad) {
  std::string text = kMinimal;
  text.replace(text.find("gram 1\n"), 7, "gram 3\n");
  text.replace(text.find("route cp2"), 9, "route surfaces");
  const auto path = temp_path("sq3.cat");
  {
    std::ofstream out(path);
    out << text;
  }
  EXPECT_THROW(load_catalog(path), ValidationError);
  std::filesystem::remove(path);
}

TEST(Validate, SimpleTypeAndSurfaceChecks) {
  auto ap = fixtures::ap();
  ap.surfaces[0].genus = 0;  // B as a sphere of square 0 breaks genus bookkeeping
  EXPECT_FALSE(validate(ap).empty());

  auto bk = fixtures::bk();
  bk.basic_classes[0].sw_value = 0;
  EXPECT_TRUE(has_invariant(validate(bk), "sw-nonzero"));

  auto k3 = fixtures::k3();
  k3.b1 = 1;
  EXPECT_FALSE(validate(k3).empty());

  auto route = fixtures::cp2();
  route.route = GenusRoute::s2xs2;
  EXPECT_TRUE(has_invariant(validate(route), "route"));
}

TEST(Validate, DuplicateModels) {
  Catalog c;
  c.models = {fixtures::cp2(), fixtures::cp2()};
  EXPECT_TRUE(has_invariant(validate(c), "duplicate"));
}

TEST(Validate, RelationMustHold) {
  auto ap = fixtures::ap();
  ap.relations[0].terms[0].first = 3;
  EXPECT_TRUE(has_invariant(validate(ap), "relation"));
}

TEST(Catalog, SaveLoadRoundTrip) {
  const auto path = temp_path("save.cat");
  const auto c = fixtures::builtin_catalog();
  save_catalog(c, path);
  EXPECT_EQ(load_catalog(path), c);
  std::filesystem::remove(path);
}

TEST(Fixtures, ResolveModel) {
  const auto c = fixtures::builtin_catalog();
  EXPECT_EQ(fixtures::resolve_model(c, "xn", {{"n", 7}}).basic_classes[0].sw_value, 7);
  EXPECT_EQ(fixtures::resolve_model(c, "ap").name, "ap");
  EXPECT_THROW(fixtures::resolve_model(c, "nowhere"), UnknownManifold);
  EXPECT_THROW(fixtures::model_by_name("e2p", {{"p", 4}}), PreconditionViolated);
  for (const auto& n : fixtures::model_names()) EXPECT_NO_THROW(fixtures::model_by_name(n)) << n;
}

TEST(Fixtures, EulerCharacteristics) {
  EXPECT_EQ(fixtures::k3().euler_characteristic(), 24);
  EXPECT_EQ(fixtures::cp2().euler_characteristic(), 3);
  EXPECT_EQ(fixtures::ap().euler_characteristic(), 5);
}
