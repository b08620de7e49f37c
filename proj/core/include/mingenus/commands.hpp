#pragma once

// Command layer behind the mingenus tool: each command returns structured
// data, and a matching render_* function formats it.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mingenus/bounds.hpp"
#include "mingenus/catalog.hpp"
#include "mingenus/genus_formulas.hpp"
#include "mingenus/json_io.hpp"
#include "mingenus/model.hpp"
#include "mingenus/profile.hpp"
#include "mingenus/reduction.hpp"

namespace mingenus {

enum class OutputFormat { text, json, csv };
std::optional<OutputFormat> parse_format(const std::string& s);

inline constexpr int kExitExact = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInterval = 2;
inline constexpr int kExitUnknownManifold = 3;
inline constexpr int kExitBadCoordinates = 4;

/// Largest --range accepted by cmd_table.
inline constexpr Int kTableRangeCap = 100;
/// Largest number of rows cmd_table produces.
inline constexpr std::size_t kTableRowCap = 2'000'000;

/// Integers, one per basis element; throws BadCoordinates otherwise.
HomologyClass parse_coordinates(const ManifoldModel& model, const std::vector<std::string>& words);

GenusResult cmd_genus(const ManifoldModel& model, const HomologyClass& a);

/// Blow-up models only (WrongRoutine otherwise).
Reduction cmd_reduce(const ManifoldModel& model, const HomologyClass& a);

std::vector<HomologyClass> cmd_orbit(const ManifoldModel& model, const HomologyClass& a, Int bound);

struct BoundsReport {
  std::vector<BoundCertificate> lower;
  std::vector<Justification> upper;
};
BoundsReport cmd_bounds(const ManifoldModel& model, const HomologyClass& a);

/// Every class with coordinates in [-range, range], in lexicographic order.
/// Throws CapExceeded past kTableRangeCap or kTableRowCap.
TableRecord cmd_table(const ManifoldModel& model, Int range);

Profile cmd_profile(const ManifoldModel& model, const ProfileOptions& options);

std::vector<BasicClass> cmd_sw(const ManifoldModel& model);

/// Parse and validate a catalog file; parse errors propagate.
std::vector<Violation> cmd_validate(const std::filesystem::path& path);

/// Exit code for a genus result: exact or interval.
int exit_code_for(const GenusResult& r);

std::string render_genus(const ManifoldModel& model, const HomologyClass& a, const GenusResult& r, OutputFormat f);
std::string render_reduce(const ManifoldModel& model, const HomologyClass& a, const Reduction& red, bool trace,
                          OutputFormat f);
std::string render_orbit(const ManifoldModel& model, const HomologyClass& a, Int bound,
                         const std::vector<HomologyClass>& orbit, OutputFormat f);
std::string render_bounds(const ManifoldModel& model, const HomologyClass& a, const BoundsReport& b, OutputFormat f);
std::string render_table(const TableRecord& table, OutputFormat f);
std::string render_profile(const ManifoldModel& model, const Profile& p, OutputFormat f);
std::string render_sw(const ManifoldModel& model, const std::vector<BasicClass>& classes, OutputFormat f);
std::string render_violations(const std::vector<Violation>& v, OutputFormat f);

}  // namespace mingenus
