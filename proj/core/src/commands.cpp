#include "mingenus/commands.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mingenus/error.hpp"
#include "mingenus/evaluator.hpp"

namespace mingenus {

namespace {

using json = nlohmann::ordered_json;

std::string paren(const HomologyClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.rank(); ++i) s += (i ? ", " : "") + std::to_string(c[i]);
  return s + ")";
}

std::string csv_coords(const HomologyClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.rank(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

std::string csv_header(std::size_t rank) {
  std::string s;
  for (std::size_t i = 0; i < rank; ++i) s += (i ? ",x" : "x") + std::to_string(i + 1);
  return s;
}

std::string interval(const GenusResult& r) {
  if (r.exact) return std::to_string(r.lower);
  return "[" + std::to_string(r.lower) + ", " + (r.upper ? std::to_string(*r.upper) : "?") + "]";
}

std::string label(const ManifoldModel& m) {
  std::string s = m.name;
  for (const auto& [k, v] : m.parameters) s += " " + k + "=" + std::to_string(v);
  return s;
}

}  // namespace

std::optional<OutputFormat> parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return std::nullopt;
}

HomologyClass parse_coordinates(const ManifoldModel& model, const std::vector<std::string>& words) {
  if (words.size() != model.rank())
    throw BadCoordinates("manifold " + model.name + " needs " + std::to_string(model.rank()) + " coordinates, got " +
                         std::to_string(words.size()));
  HomologyClass c(model.rank());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    Int v = 0;
    auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() || p != w.data() + w.size()) throw BadCoordinates("coordinate '" + w + "' is not an integer");
    c[i] = v;
  }
  return c;
}

GenusResult cmd_genus(const ManifoldModel& model, const HomologyClass& a) { return evaluate_genus(model, a); }

Reduction cmd_reduce(const ManifoldModel& model, const HomologyClass& a) {
  if (model.route != GenusRoute::blowup)
    throw WrongRoutine("reduce works on CP2 # 2CP2bar and CP2 # 3CP2bar, not " + model.name);
  if (a.rank() != model.rank()) throw BadCoordinates("wrong number of coordinates for " + model.name);
  return reduce(a);
}

std::vector<HomologyClass> cmd_orbit(const ManifoldModel& model, const HomologyClass& a, Int bound) {
  if (a.rank() != model.rank()) throw BadCoordinates("wrong number of coordinates for " + model.name);
  return orbit_bfs(model, a, bound);
}

BoundsReport cmd_bounds(const ManifoldModel& model, const HomologyClass& a) {
  if (a.rank() != model.rank()) throw BadCoordinates("wrong number of coordinates for " + model.name);
  return {lower_certificates(model, a), upper_constructions(model, a)};
}

TableRecord cmd_table(const ManifoldModel& model, Int range) {
  if (range < 0) throw PreconditionViolated("table range must be >= 0");
  if (range > kTableRangeCap)
    throw CapExceeded("table range " + std::to_string(range) + " exceeds the cap " + std::to_string(kTableRangeCap));
  const std::size_t side = static_cast<std::size_t>(2 * range + 1);
  std::size_t rows = 1;
  for (std::size_t i = 0; i < model.rank(); ++i) {
    if (rows > kTableRowCap / side) throw CapExceeded("table of " + model.name + " would exceed the row cap");
    rows *= side;
  }
  TableRecord t;
  t.manifold = model.name;
  t.parameters = model.parameters;
  t.range = range;
  t.rows.reserve(rows);
  HomologyClass c(model.rank());
  for (auto& x : c) x = -range;
  while (true) {
    t.rows.push_back({model.name, model.parameters, c, evaluate_genus(model, c)});
    std::size_t k = c.rank();
    while (k > 0 && c[k - 1] == range) c[--k] = -range;
    if (k == 0) break;
    ++c[k - 1];
  }
  return t;
}

Profile cmd_profile(const ManifoldModel& model, const ProfileOptions& options) { return profile_search(model, options); }

std::vector<BasicClass> cmd_sw(const ManifoldModel& model) { return model.basic_classes; }

std::vector<Violation> cmd_validate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return validate(parse_catalog(buf.str()));
}

int exit_code_for(const GenusResult& r) { return r.exact ? kExitExact : kExitInterval; }

std::string render_genus(const ManifoldModel& model, const HomologyClass& a, const GenusResult& r, OutputFormat f) {
  if (f == OutputFormat::json) return to_json(GenusRecord{model.name, model.parameters, a, r}) + "\n";
  if (f == OutputFormat::csv) {
    return csv_header(a.rank()) + ",lower,upper,exact\n" + csv_coords(a) + "," + std::to_string(r.lower) + "," +
           (r.upper ? std::to_string(*r.upper) : "") + "," + (r.exact ? "true" : "false") + "\n";
  }
  std::ostringstream os;
  os << label(model) << " " << paren(a) << ": genus " << interval(r) << (r.exact ? " (exact)" : " (interval)") << "\n";
  for (const auto& j : r.provenance) {
    os << "  " << j.kind << " " << j.name;
    if (j.kind != "formula" && j.kind != "convention") os << " = " << j.value;
    if (!j.detail.empty()) os << " (" << j.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_reduce(const ManifoldModel& model, const HomologyClass& a, const Reduction& red, bool trace,
                          OutputFormat f) {
  if (f == OutputFormat::json) return to_json(model.name, a, red, model.form) + "\n";
  if (f == OutputFormat::csv) return csv_header(a.rank()) + "\n" + csv_coords(red.canonical) + "\n";
  std::string s = "canonical " + paren(red.canonical) + "\n";
  if (trace) s += red.trace.to_text(model.form);
  return s;
}

std::string render_orbit(const ManifoldModel& model, const HomologyClass& a, Int bound,
                         const std::vector<HomologyClass>& orbit, OutputFormat f) {
  if (f == OutputFormat::json) {
    json o{{"schema", "mingenus.orbit"}, {"version", kJsonSchemaVersion}, {"manifold", model.name},
           {"class", a.to_vector()}, {"bound", bound}};
    json arr = json::array();
    for (const auto& c : orbit) arr.push_back(c.to_vector());
    o["orbit"] = std::move(arr);
    return o.dump(2) + "\n";
  }
  std::string s = f == OutputFormat::csv ? csv_header(a.rank()) + "\n" : "";
  for (const auto& c : orbit) s += (f == OutputFormat::csv ? csv_coords(c) : paren(c)) + "\n";
  return s;
}

std::string render_bounds(const ManifoldModel& model, const HomologyClass& a, const BoundsReport& b, OutputFormat f) {
  if (f == OutputFormat::json) return to_json(model.name, a, b.lower, b.upper) + "\n";
  std::ostringstream os;
  if (f == OutputFormat::csv) {
    os << "side,name,value\n";
    for (const auto& c : b.lower)
      os << "lower," << to_string(c.source) << (c.basic_class_id.empty() ? "" : ":" + c.basic_class_id) << "," << c.value
         << "\n";
    for (const auto& j : b.upper) os << "upper," << j.name << "," << j.value << "\n";
    return os.str();
  }
  os << label(model) << " " << paren(a) << "\n";
  for (const auto& c : b.lower) {
    os << "  lower " << c.value << " from " << to_string(c.source);
    if (!c.basic_class_id.empty()) os << " (basic class " << c.basic_class_id << ")";
    for (const auto& [k, v] : c.inputs) os << " " << k << "=" << v;
    os << "\n";
  }
  for (const auto& j : b.upper) os << "  upper " << j.value << " from " << j.name << (j.detail.empty() ? "" : " (" + j.detail + ")") << "\n";
  if (b.upper.empty()) os << "  upper unknown\n";
  return os.str();
}

std::string render_table(const TableRecord& table, OutputFormat f) {
  if (f == OutputFormat::json) return to_json(table) + "\n";
  std::ostringstream os;
  const std::size_t rank = table.rows.empty() ? 0 : table.rows.front().cls.rank();
  if (f == OutputFormat::csv) {
    os << csv_header(rank) << ",lower,upper,exact\n";
    for (const auto& r : table.rows)
      os << csv_coords(r.cls) << "," << r.result.lower << "," << (r.result.upper ? std::to_string(*r.result.upper) : "")
         << "," << (r.result.exact ? "true" : "false") << "\n";
    return os.str();
  }
  for (const auto& r : table.rows) os << paren(r.cls) << " " << interval(r.result) << "\n";
  return os.str();
}

std::string render_profile(const ManifoldModel& model, const Profile& p, OutputFormat f) {
  if (f == OutputFormat::json) return to_json(ProfileRecord{model.name, model.parameters, p}) + "\n";
  std::ostringstream os;
  if (f == OutputFormat::csv) {
    os << "entry,lower,upper,exact\n";
    for (std::size_t i = 0; i < p.size(); ++i)
      os << i + 1 << "," << p.lower[i] << "," << (p.upper[i] ? std::to_string(*p.upper[i]) : "") << ","
         << (p.exact[i] ? "true" : "false") << "\n";
    return os.str();
  }
  os << label(model) << " profile (";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << (i ? ", " : "");
    if (p.exact[i]) os << p.lower[i];
    else os << "[" << p.lower[i] << ", " << (p.upper[i] ? std::to_string(*p.upper[i]) : "?") << "]";
  }
  os << ")" << (p.is_exact() ? " exact" : " interval") << " within radius " << p.radius
     << (p.restricted ? " on the block sublattice" : "") << "\n";
  os << "  lower witness:";
  for (const auto& v : p.lower_witness.vectors) os << " " << paren(v);
  os << "\n  upper witness:";
  for (const auto& v : p.upper_witness.vectors) os << " " << paren(v);
  os << "\n";
  return os.str();
}

std::string render_sw(const ManifoldModel& model, const std::vector<BasicClass>& classes, OutputFormat f) {
  if (f == OutputFormat::json) return to_json(model.name, classes) + "\n";
  std::ostringstream os;
  if (f == OutputFormat::csv) {
    os << "id,sw," << csv_header(model.rank()) << "\n";
    for (const auto& b : classes) os << b.id << "," << b.sw_value << "," << csv_coords(HomologyClass(std::span<const Int>(b.kappa))) << "\n";
    return os.str();
  }
  os << label(model) << ": " << classes.size() << " basic classes\n";
  for (const auto& b : classes) os << "  " << b.id << " sw " << b.sw_value << " kappa " << paren(HomologyClass(std::span<const Int>(b.kappa))) << "\n";
  return os.str();
}

std::string render_violations(const std::vector<Violation>& v, OutputFormat f) {
  if (f == OutputFormat::json) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back({{"model", x.model}, {"invariant", x.invariant}, {"message", x.message}});
    json o{{"schema", "mingenus.validate"}, {"version", kJsonSchemaVersion}, {"violations", arr}};
    return o.dump(2) + "\n";
  }
  std::string s = f == OutputFormat::csv ? "model,invariant,message\n" : "";
  for (const auto& x : v) s += f == OutputFormat::csv ? x.model + "," + x.invariant + ",\"" + x.message + "\"\n" : x.to_string() + "\n";
  if (v.empty() && f == OutputFormat::text) s = "ok: no violations\n";
  return s;
}

}  // namespace mingenus
