#include "mingenus/json_io.hpp"

#include <json.hpp>

#include "mingenus/error.hpp"

namespace mingenus {

namespace {

using json = nlohmann::ordered_json;

json header(const char* kind) { return json{{"schema", std::string("mingenus.") + kind}, {"version", kJsonSchemaVersion}}; }

json coords(const HomologyClass& c) { return json(c.to_vector()); }

json params(const std::map<std::string, Int>& p) {
  json o = json::object();
  for (const auto& [k, v] : p) o[k] = v;
  return o;
}

json justification(const Justification& j) {
  return {{"kind", j.kind}, {"name", j.name}, {"value", j.value}, {"detail", j.detail}};
}

void put_result(json& o, const GenusResult& r) {
  o["lower"] = r.lower;
  o["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  o["exact"] = r.exact;
  o["zero_convention"] = r.zero_convention;
  json prov = json::array();
  for (const auto& j : r.provenance) prov.push_back(justification(j));
  o["provenance"] = std::move(prov);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
}

void expect_schema(const json& j, const char* kind) {
  const std::string want = std::string("mingenus.") + kind;
  if (!j.is_object() || j.value("schema", "") != want) throw ParseError("expected a " + want + " document", 1, 1);
  if (j.value("version", 0) != kJsonSchemaVersion) throw ParseError("unsupported schema version", 1, 1);
}

HomologyClass read_class(const json& j) {
  const auto v = j.get<std::vector<Int>>();
  return HomologyClass(std::span<const Int>(v));
}

std::map<std::string, Int> read_params(const json& j) { return j.get<std::map<std::string, Int>>(); }

GenusResult read_result(const json& o) {
  GenusResult r;
  r.lower = o.at("lower").get<Int>();
  if (!o.at("upper").is_null()) r.upper = o.at("upper").get<Int>();
  r.exact = o.at("exact").get<bool>();
  r.zero_convention = o.at("zero_convention").get<bool>();
  for (const auto& p : o.at("provenance"))
    r.provenance.push_back({p.at("kind").get<std::string>(), p.at("name").get<std::string>(), p.at("value").get<Int>(),
                            p.at("detail").get<std::string>()});
  return r;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace

std::string to_json(const GenusRecord& record) {
  json o = header("genus");
  o["manifold"] = record.manifold;
  o["parameters"] = params(record.parameters);
  o["class"] = coords(record.cls);
  put_result(o, record.result);
  return o.dump(2);
}

std::string to_json(const TableRecord& table) {
  json o = header("table");
  o["manifold"] = table.manifold;
  o["parameters"] = params(table.parameters);
  o["range"] = table.range;
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row;
    row["class"] = coords(r.cls);
    put_result(row, r.result);
    rows.push_back(std::move(row));
  }
  o["rows"] = std::move(rows);
  return o.dump(2);
}

std::string to_json(const ProfileRecord& record) {
  const auto& p = record.profile;
  json o = header("profile");
  o["manifold"] = record.manifold;
  o["parameters"] = params(record.parameters);
  o["radius"] = p.radius;
  o["restricted"] = p.restricted;
  o["candidates"] = p.candidates;
  o["lower"] = p.lower;
  json up = json::array();
  for (const auto& u : p.upper) up.push_back(u ? json(*u) : json(nullptr));
  o["upper"] = std::move(up);
  o["exact"] = p.exact;
  json lw = json::array(), uw = json::array();
  for (const auto& v : p.lower_witness.vectors) lw.push_back(coords(v));
  for (const auto& v : p.upper_witness.vectors) uw.push_back(coords(v));
  o["lower_witness"] = std::move(lw);
  o["upper_witness"] = std::move(uw);
  return o.dump(2);
}

std::string to_json(const std::string& manifold, const std::vector<BasicClass>& classes) {
  json o = header("sw");
  o["manifold"] = manifold;
  json arr = json::array();
  for (const auto& b : classes) arr.push_back({{"id", b.id}, {"sw", b.sw_value}, {"kappa", b.kappa}});
  o["basic_classes"] = std::move(arr);
  return o.dump(2);
}

std::string to_json(const std::string& manifold, const HomologyClass& start, const Reduction& reduction,
                    const IntersectionForm& form) {
  json o = header("reduce");
  o["manifold"] = manifold;
  o["class"] = coords(start);
  o["canonical"] = coords(reduction.canonical);
  json steps = json::array();
  HomologyClass current = reduction.trace.start;
  for (const auto& m : reduction.trace.steps) {
    current = m.apply(form, current);
    json s;
    switch (m.kind) {
      case Move::Kind::sign_flip:
        s = {{"move", "flip"}, {"index", m.index}};
        break;
      case Move::Kind::permute:
        s = {{"move", "permute"}, {"permutation", m.permutation}};
        break;
      case Move::Kind::reflect:
        s = {{"move", "reflect"}, {"mirror", coords(m.mirror)}};
        break;
    }
    s["result"] = coords(current);
    steps.push_back(std::move(s));
  }
  o["trace"] = std::move(steps);
  return o.dump(2);
}

std::string to_json(const std::string& manifold, const HomologyClass& cls, const std::vector<BoundCertificate>& lower,
                    const std::vector<Justification>& upper) {
  json o = header("bounds");
  o["manifold"] = manifold;
  o["class"] = coords(cls);
  json lo = json::array();
  for (const auto& c : lower) {
    json inputs = json::object();
    for (const auto& [k, v] : c.inputs) inputs[k] = v;
    lo.push_back({{"value", c.value}, {"source", to_string(c.source)}, {"basic_class", c.basic_class_id}, {"inputs", inputs}});
  }
  json up = json::array();
  for (const auto& j : upper) up.push_back(justification(j));
  o["lower"] = std::move(lo);
  o["upper"] = std::move(up);
  return o.dump(2);
}

GenusRecord genus_record_from_json(const std::string& text) {
  const json j = parse_text(text);
  expect_schema(j, "genus");
  return guarded([&] {
    GenusRecord r;
    r.manifold = j.at("manifold").get<std::string>();
    r.parameters = read_params(j.at("parameters"));
    r.cls = read_class(j.at("class"));
    r.result = read_result(j);
    return r;
  });
}

TableRecord table_record_from_json(const std::string& text) {
  const json j = parse_text(text);
  expect_schema(j, "table");
  return guarded([&] {
    TableRecord t;
    t.manifold = j.at("manifold").get<std::string>();
    t.parameters = read_params(j.at("parameters"));
    t.range = j.at("range").get<Int>();
    for (const auto& row : j.at("rows")) t.rows.push_back({t.manifold, t.parameters, read_class(row.at("class")), read_result(row)});
    return t;
  });
}

ProfileRecord profile_record_from_json(const std::string& text) {
  const json j = parse_text(text);
  expect_schema(j, "profile");
  return guarded([&] {
    ProfileRecord r;
    r.manifold = j.at("manifold").get<std::string>();
    r.parameters = read_params(j.at("parameters"));
    auto& p = r.profile;
    p.radius = j.at("radius").get<Int>();
    p.restricted = j.at("restricted").get<bool>();
    p.candidates = j.at("candidates").get<std::size_t>();
    p.lower = j.at("lower").get<std::vector<Int>>();
    for (const auto& u : j.at("upper")) p.upper.push_back(u.is_null() ? std::nullopt : std::optional<Int>(u.get<Int>()));
    p.exact = j.at("exact").get<std::vector<bool>>();
    for (const auto& v : j.at("lower_witness")) p.lower_witness.vectors.push_back(read_class(v));
    for (const auto& v : j.at("upper_witness")) p.upper_witness.vectors.push_back(read_class(v));
    return r;
  });
}

}  // namespace mingenus
