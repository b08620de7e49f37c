#pragma once

// Manifold catalog: line-oriented keyed text format, load/save, validation.
// Grammar: docs/catalog-format.md.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mingenus/model.hpp"

namespace mingenus {

inline constexpr int kCatalogSchemaVersion = 1;

struct Catalog {
  int schema_version = kCatalogSchemaVersion;
  std::vector<ManifoldModel> models;

  /// First model with this name, or nullptr.
  const ManifoldModel* find(const std::string& name) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;
};

struct Violation {
  std::string model;
  /// Short invariant tag, e.g. "sphere-square", "kappa-characteristic".
  std::string invariant;
  std::string message;

  std::string to_string() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Throws ParseError (with line and column) on malformed text. Does not
/// validate.
Catalog parse_catalog(std::string_view text);

/// Canonical text form; parse_catalog(serialize_catalog(c)) == c.
std::string serialize_catalog(const Catalog& catalog);

/// Every violated invariant of the model; empty when it is consistent.
std::vector<Violation> validate(const ManifoldModel& model);
std::vector<Violation> validate(const Catalog& catalog);

/// Parse and validate; throws ParseError or ValidationError (naming the
/// model and invariant of the first violation).
Catalog load_catalog(const std::filesystem::path& path);
/// Validate then write the canonical form.
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);

}  // namespace mingenus
