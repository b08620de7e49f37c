#pragma once

// JSON encoding of results, schema docs/genus-result.schema.json. Only
// strings cross this interface.

#include <map>
#include <string>
#include <vector>

#include "mingenus/bounds.hpp"
#include "mingenus/genus_formulas.hpp"
#include "mingenus/model.hpp"
#include "mingenus/profile.hpp"
#include "mingenus/reduction.hpp"

namespace mingenus {

inline constexpr int kJsonSchemaVersion = 1;

/// One evaluated class.
struct GenusRecord {
  std::string manifold;
  std::map<std::string, Int> parameters;
  HomologyClass cls;
  GenusResult result;

  friend bool operator==(const GenusRecord&, const GenusRecord&) = default;
};

struct TableRecord {
  std::string manifold;
  std::map<std::string, Int> parameters;
  Int range = 0;
  std::vector<GenusRecord> rows;

  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

struct ProfileRecord {
  std::string manifold;
  std::map<std::string, Int> parameters;
  Profile profile;

  friend bool operator==(const ProfileRecord&, const ProfileRecord&) = default;
};

std::string to_json(const GenusRecord& record);
std::string to_json(const TableRecord& table);
std::string to_json(const ProfileRecord& record);
std::string to_json(const std::string& manifold, const std::vector<BasicClass>& classes);
std::string to_json(const std::string& manifold, const HomologyClass& start, const Reduction& reduction,
                    const IntersectionForm& form);
std::string to_json(const std::string& manifold, const HomologyClass& cls,
                    const std::vector<BoundCertificate>& lower, const std::vector<Justification>& upper);

/// Inverse of to_json; throws ParseError on malformed or mismatching input.
GenusRecord genus_record_from_json(const std::string& text);
TableRecord table_record_from_json(const std::string& text);
ProfileRecord profile_record_from_json(const std::string& text);

}  // namespace mingenus
