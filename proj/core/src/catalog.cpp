#include "mingenus/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "mingenus/bounds.hpp"
#include "mingenus/error.hpp"

namespace mingenus {

// ---------------------------------------------------------------- model.hpp

std::string to_string(GenusRoute route) {
  switch (route) {
    case GenusRoute::cp2:
      return "cp2";
    case GenusRoute::cp2_cp2bar:
      return "cp2-cp2bar";
    case GenusRoute::s2xs2:
      return "s2xs2";
    case GenusRoute::xn:
      return "xn";
    case GenusRoute::blowup:
      return "blowup";
    case GenusRoute::surfaces:
      return "surfaces";
  }
  return "surfaces";
}

std::optional<GenusRoute> parse_route(const std::string& s) {
  for (auto r : {GenusRoute::cp2, GenusRoute::cp2_cp2bar, GenusRoute::s2xs2, GenusRoute::xn, GenusRoute::blowup,
                 GenusRoute::surfaces})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

Int ManifoldModel::euler_characteristic() const { return 2 - 2 * b1 + static_cast<Int>(rank()); }

const SurfaceEntry* ManifoldModel::find_surface(const std::string& label) const {
  for (const auto& s : surfaces)
    if (s.label == label) return &s;
  return nullptr;
}

// ------------------------------------------------------------------ catalog

const ManifoldModel* Catalog::find(const std::string& name) const {
  for (const auto& m : models)
    if (m.name == name) return &m;
  return nullptr;
}

std::string Violation::to_string() const { return model + ": " + invariant + ": " + message; }

namespace {

struct Token {
  std::string_view text;
  int column = 1;
};

class LineReader {
 public:
  LineReader(std::string_view line, int number) : line_(line), number_(number) {
    std::size_t i = 0;
    while (i < line_.size()) {
      while (i < line_.size() && (line_[i] == ' ' || line_[i] == '\t')) ++i;
      if (i >= line_.size()) break;
      const std::size_t start = i;
      while (i < line_.size() && line_[i] != ' ' && line_[i] != '\t') ++i;
      tokens_.push_back({line_.substr(start, i - start), static_cast<int>(start) + 1});
    }
  }

  bool empty() const { return tokens_.empty(); }
  std::size_t size() const { return tokens_.size(); }
  const Token& at(std::size_t i) const {
    if (i >= tokens_.size()) fail("missing field", static_cast<int>(line_.size()) + 1);
    return tokens_[i];
  }
  std::string word(std::size_t i) const { return std::string(at(i).text); }

  Int integer(std::size_t i) const {
    const auto& t = at(i);
    Int v = 0;
    const auto* b = t.text.data();
    const auto* e = b + t.text.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) fail("expected an integer, got '" + std::string(t.text) + "'", t.column);
    return v;
  }

  std::vector<Int> integers_from(std::size_t i, std::size_t stop) const {
    std::vector<Int> out;
    for (std::size_t k = i; k < stop; ++k) out.push_back(integer(k));
    return out;
  }

  /// Raw text after token i (single separating blank removed).
  std::string rest_after(std::size_t i) const {
    const auto& t = at(i);
    std::size_t pos = static_cast<std::size_t>(t.column - 1) + t.text.size();
    while (pos < line_.size() && (line_[pos] == ' ' || line_[pos] == '\t')) ++pos;
    return std::string(line_.substr(pos));
  }

  void expect(std::size_t i, std::string_view word) const {
    if (at(i).text != word) fail("expected '" + std::string(word) + "', got '" + std::string(at(i).text) + "'", at(i).column);
  }

  std::size_t find(std::string_view word, std::size_t from = 0) const {
    for (std::size_t k = from; k < tokens_.size(); ++k)
      if (tokens_[k].text == word) return k;
    return tokens_.size();
  }

  [[noreturn]] void fail(const std::string& msg, int column) const { throw ParseError(msg, number_, column); }
  [[noreturn]] void fail_at(std::size_t i, const std::string& msg) const { fail(msg, at(i).column); }

 private:
  std::string_view line_;
  int number_;
  std::vector<Token> tokens_;
};

std::string join(const HomologyClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.rank(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s;
}

std::string join(std::span<const Int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

template <typename T>
std::string join_indices(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

struct PendingModel {
  ManifoldModel model;
  std::vector<std::vector<Int>> gram;
  int line = 0;
};

void parse_model_line(PendingModel& pm, const LineReader& r) {
  auto& m = pm.model;
  const std::string key = r.word(0);
  if (key == "title") {
    m.title = r.size() > 1 ? r.rest_after(0) : "";
  } else if (key == "b1") {
    m.b1 = r.integer(1);
  } else if (key == "flags") {
    for (std::size_t i = 1; i < r.size(); ++i) {
      const auto f = r.word(i);
      if (f == "simple-type") m.flags.simple_type = true;
      else if (f == "adjunction") m.flags.adjunction_applicable = true;
      else if (f == "symplectic") m.flags.symplectic = true;
      else if (f != "none") r.fail_at(i, "unknown flag '" + f + "'");
    }
  } else if (key == "route") {
    auto route = parse_route(r.word(1));
    if (!route) r.fail_at(1, "unknown route '" + r.word(1) + "'");
    m.route = *route;
  } else if (key == "param") {
    m.parameters[r.word(1)] = r.integer(2);
  } else if (key == "gram") {
    pm.gram.push_back(r.integers_from(1, r.size()));
  } else if (key == "sphere") {
    m.reflection_spheres.emplace_back(std::span<const Int>(r.integers_from(1, r.size())));
  } else if (key == "permute") {
    for (std::size_t i = 1; i < r.size(); ++i) {
      const Int v = r.integer(i);
      if (v < 0) r.fail_at(i, "negative coordinate index");
      m.permutable.push_back(static_cast<std::size_t>(v));
    }
  } else if (key == "surface") {
    // surface <label> genus <g> kappa <k> [symplectic] [inferred] class <c...>
    SurfaceEntry s;
    s.label = r.word(1);
    r.expect(2, "genus");
    s.genus = r.integer(3);
    r.expect(4, "kappa");
    s.kappa = r.integer(5);
    std::size_t i = 6;
    for (; i < r.size() && r.at(i).text != "class"; ++i) {
      if (r.at(i).text == "symplectic") s.symplectic = true;
      else if (r.at(i).text == "inferred") s.inferred = true;
      else r.fail_at(i, "unknown surface attribute '" + r.word(i) + "'");
    }
    r.expect(i, "class");
    s.cls = HomologyClass(std::span<const Int>(r.integers_from(i + 1, r.size())));
    m.surfaces.push_back(std::move(s));
  } else if (key == "basic") {
    // basic <id> sw <v> kappa <k...>
    BasicClass b;
    b.id = r.word(1);
    r.expect(2, "sw");
    b.sw_value = r.integer(3);
    r.expect(4, "kappa");
    b.kappa = r.integers_from(5, r.size());
    m.basic_classes.push_back(std::move(b));
  } else if (key == "relation") {
    // relation <target> = <coef> <label> ...
    Relation rel;
    rel.target = r.word(1);
    r.expect(2, "=");
    if ((r.size() - 3) % 2 != 0 || r.size() == 3) r.fail("relation needs coefficient/label pairs", r.at(r.size() - 1).column);
    for (std::size_t i = 3; i + 1 < r.size(); i += 2) rel.terms.emplace_back(r.integer(i), r.word(i + 1));
    m.relations.push_back(std::move(rel));
  } else if (key == "construction") {
    // construction <label> genus <g> class <c...> note <text>
    NamedConstruction c;
    c.label = r.word(1);
    r.expect(2, "genus");
    c.genus = r.integer(3);
    r.expect(4, "class");
    const std::size_t note = r.find("note", 5);
    c.cls = HomologyClass(std::span<const Int>(r.integers_from(5, note)));
    if (note < r.size()) c.note = note + 1 < r.size() ? r.rest_after(note) : "";
    m.constructions.push_back(std::move(c));
  } else if (key == "block") {
    std::vector<std::size_t> block;
    for (std::size_t i = 1; i < r.size(); ++i) {
      const Int v = r.integer(i);
      if (v < 0) r.fail_at(i, "negative coordinate index");
      block.push_back(static_cast<std::size_t>(v));
    }
    m.profile_blocks.push_back(std::move(block));
  } else if (key == "note") {
    m.notes.push_back(r.size() > 1 ? r.rest_after(0) : "");
  } else {
    r.fail_at(0, "unknown field '" + key + "'");
  }
}

}  // namespace

Catalog parse_catalog(std::string_view text) {
  Catalog cat;
  bool header = false;
  std::optional<PendingModel> current;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const LineReader r(line, number);
    if (r.empty() || r.at(0).text.front() == '#') continue;

    if (!header) {
      r.expect(0, "mingenus-catalog");
      const Int v = r.integer(1);
      if (v != kCatalogSchemaVersion) r.fail_at(1, "unsupported schema version " + std::to_string(v));
      cat.schema_version = static_cast<int>(v);
      header = true;
      continue;
    }
    const auto key = r.word(0);
    if (!current) {
      if (key != "model") r.fail_at(0, "expected 'model', got '" + key + "'");
      current.emplace();
      current->model.name = r.word(1);
      current->line = number;
      continue;
    }
    if (key == "model") r.fail_at(0, "model '" + current->model.name + "' is missing 'end'");
    if (key == "end") {
      if (current->gram.empty()) r.fail("model '" + current->model.name + "' has no gram rows", 1);
      try {
        current->model.form = IntersectionForm(current->gram);
      } catch (const InvalidForm& e) {
        throw ValidationError("model " + current->model.name + ": gram: " + e.what());
      }
      cat.models.push_back(std::move(current->model));
      current.reset();
      continue;
    }
    parse_model_line(*current, r);
  }
  if (!header) throw ParseError("missing 'mingenus-catalog' header", number, 1);
  if (current) throw ParseError("model '" + current->model.name + "' is missing 'end'", number, 1);
  return cat;
}

std::string serialize_catalog(const Catalog& catalog) {
  std::ostringstream os;
  os << "mingenus-catalog " << catalog.schema_version << "\n";
  for (const auto& m : catalog.models) {
    os << "\nmodel " << m.name << "\n";
    if (!m.title.empty()) os << "title " << m.title << "\n";
    os << "b1 " << m.b1 << "\n";
    os << "flags";
    if (m.flags.simple_type) os << " simple-type";
    if (m.flags.adjunction_applicable) os << " adjunction";
    if (m.flags.symplectic) os << " symplectic";
    if (!m.flags.simple_type && !m.flags.adjunction_applicable && !m.flags.symplectic) os << " none";
    os << "\n";
    os << "route " << to_string(m.route) << "\n";
    for (const auto& [k, v] : m.parameters) os << "param " << k << " " << v << "\n";
    for (const auto& row : m.form.gram()) os << "gram " << join(row) << "\n";
    for (const auto& s : m.reflection_spheres) os << "sphere " << join(s) << "\n";
    if (!m.permutable.empty()) os << "permute " << join_indices(m.permutable) << "\n";
    for (const auto& s : m.surfaces) {
      os << "surface " << s.label << " genus " << s.genus << " kappa " << s.kappa;
      if (s.symplectic) os << " symplectic";
      if (s.inferred) os << " inferred";
      os << " class " << join(s.cls) << "\n";
    }
    for (const auto& b : m.basic_classes) os << "basic " << b.id << " sw " << b.sw_value << " kappa " << join(b.kappa) << "\n";
    for (const auto& rel : m.relations) {
      os << "relation " << rel.target << " =";
      for (const auto& [c, l] : rel.terms) os << " " << c << " " << l;
      os << "\n";
    }
    for (const auto& c : m.constructions) {
      os << "construction " << c.label << " genus " << c.genus << " class " << join(c.cls);
      if (!c.note.empty()) os << " note " << c.note;
      os << "\n";
    }
    for (const auto& b : m.profile_blocks) os << "block " << join_indices(b) << "\n";
    for (const auto& n : m.notes) os << "note " << n << "\n";
    os << "end\n";
  }
  return os.str();
}

std::vector<Violation> validate(const ManifoldModel& m) {
  std::vector<Violation> out;
  auto add = [&](std::string inv, std::string msg) { out.push_back({m.name, std::move(inv), std::move(msg)}); };
  const std::size_t r = m.rank();
  const auto& form = m.form;

  if (r == 0) {
    add("gram", "empty intersection form");
    return out;
  }
  if (m.b1 < 0) add("b1", "negative first Betti number");

  for (const auto& s : m.reflection_spheres) {
    if (s.rank() != r) {
      add("rank", "sphere " + s.to_string() + " has " + std::to_string(s.rank()) + " coordinates");
      continue;
    }
    const Int sq = square(form, s);
    if (!is_licensed_mirror_square(sq))
      add("sphere-square", "sphere " + s.to_string() + " has square " + std::to_string(sq) + ", not in {+-1, +-2}");
  }

  for (std::size_t i = 0; i < m.permutable.size(); ++i) {
    const auto a = m.permutable[i];
    if (a >= r) {
      add("permute", "index " + std::to_string(a) + " out of range");
      continue;
    }
    for (std::size_t j = i + 1; j < m.permutable.size(); ++j) {
      const auto b = m.permutable[j];
      if (b >= r) continue;
      bool iso = form.entry(a, a) == form.entry(b, b);
      for (std::size_t k = 0; k < r && iso; ++k)
        if (k != a && k != b && form.entry(a, k) != form.entry(b, k)) iso = false;
      if (!iso)
        add("permute", "swapping coordinates " + std::to_string(a) + " and " + std::to_string(b) + " is not an isometry");
    }
  }

  std::set<std::string> ids;
  bool kappa_ok = true;
  for (const auto& b : m.basic_classes) {
    if (!ids.insert(b.id).second) add("basic-id", "duplicate basic class id '" + b.id + "'");
    if (b.kappa.size() != r) {
      add("rank", "basic class " + b.id + " has " + std::to_string(b.kappa.size()) + " kappa values");
      kappa_ok = false;
      continue;
    }
    if (b.sw_value == 0) add("sw-nonzero", "basic class " + b.id + " has invariant 0");
    for (std::size_t i = 0; i < r; ++i) {
      if ((b.kappa[i] - form.entry(i, i)) % 2 != 0) {
        add("kappa-characteristic", "basic class " + b.id + " has kappa(e" + std::to_string(i) + ") = " +
                                        std::to_string(b.kappa[i]) + " of the wrong parity against e" +
                                        std::to_string(i) + ".e" + std::to_string(i) + " = " +
                                        std::to_string(form.entry(i, i)));
        break;
      }
    }
    if (m.flags.simple_type) {
      std::vector<std::vector<Int>> g = form.gram();
      const Int det = determinant(g);
      if (det != 1 && det != -1) {
        add("simple-type", "form is not unimodular, cannot square kappa of " + b.id);
      } else {
        const Int k2 = square(form, dual_class(form, b.kappa));
        const Int expected = 3 * form.signature() + 2 * m.euler_characteristic();
        if (k2 != expected)
          add("simple-type", "basic class " + b.id + " has square " + std::to_string(k2) + ", expected 3 sigma + 2 chi = " +
                                 std::to_string(expected));
      }
    }
  }

  std::set<std::string> labels;
  for (const auto& s : m.surfaces) {
    if (!labels.insert(s.label).second) add("surface-label", "duplicate surface label '" + s.label + "'");
    if (s.cls.rank() != r) {
      add("rank", "surface " + s.label + " has " + std::to_string(s.cls.rank()) + " coordinates");
      continue;
    }
    if (s.genus < 0) add("surface-genus", "surface " + s.label + " has negative genus");
    if (!m.basic_classes.empty() && kappa_ok) {
      const Int k = evaluate(m.basic_classes.front().kappa, s.cls);
      if (k != s.kappa)
        add("surface-kappa", "surface " + s.label + " lists kappa " + std::to_string(s.kappa) + " but the first basic class gives " +
                                 std::to_string(k));
    }
    if (s.symplectic) {
      const Int sq = square(form, s.cls);
      if (2 * s.genus - 2 != sq + s.kappa)
        add("adjunction-equality", "symplectic surface " + s.label + ": 2g-2 = " + std::to_string(2 * s.genus - 2) +
                                       " but square + kappa = " + std::to_string(sq + s.kappa));
    }
  }

  for (const auto& c : m.constructions) {
    if (c.cls.rank() != r) add("rank", "construction " + c.label + " has " + std::to_string(c.cls.rank()) + " coordinates");
    if (c.genus < 0) add("construction-genus", "construction " + c.label + " has negative genus");
  }

  for (const auto& rel : m.relations) {
    const auto* target = m.find_surface(rel.target);
    if (!target) {
      add("relation", "relation target '" + rel.target + "' is not a surface");
      continue;
    }
    HomologyClass sum(r);
    bool ok = target->cls.rank() == r;
    for (const auto& [coef, label] : rel.terms) {
      const auto* s = m.find_surface(label);
      if (!s || s->cls.rank() != r) {
        add("relation", "relation term '" + label + "' is not a surface of the right rank");
        ok = false;
        break;
      }
      sum = sum + coef * s->cls;
    }
    if (ok && sum != target->cls)
      add("relation", rel.target + " = " + target->cls.to_string() + " but the relation gives " + sum.to_string());
  }

  if (m.flags.adjunction_applicable) {
    const bool hyp = m.flags.simple_type && m.b1 == 0 && !m.basic_classes.empty() &&
                     (form.b2_plus() > 1 || (form.b2_plus() == 1 && form.b2_minus() <= 9));
    if (!hyp)
      add("adjunction-flag", "adjunction flagged but the hypotheses (simple type, b1 = 0, b2+ > 1 or b2+ = 1 with b2- <= 9, "
                             "a basic class) fail");
  }

  std::vector<int> owner(r, -1);
  for (std::size_t bi = 0; bi < m.profile_blocks.size(); ++bi) {
    for (auto i : m.profile_blocks[bi]) {
      if (i >= r) {
        add("block", "block index " + std::to_string(i) + " out of range");
        continue;
      }
      if (owner[i] >= 0) add("block", "coordinate " + std::to_string(i) + " lies in two blocks");
      owner[i] = static_cast<int>(bi);
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      if (owner[i] >= 0 && owner[j] >= 0 && owner[i] != owner[j] && form.entry(i, j) != 0)
        add("block", "blocks " + std::to_string(owner[i]) + " and " + std::to_string(owner[j]) + " are not orthogonal");

  const auto diag_is = [&](std::initializer_list<Int> d) {
    if (r != d.size()) return false;
    return form == IntersectionForm::diagonal(d);
  };
  switch (m.route) {
    case GenusRoute::cp2:
      if (!diag_is({1})) add("route", "route cp2 needs the form (1)");
      break;
    case GenusRoute::cp2_cp2bar:
      if (!diag_is({1, -1})) add("route", "route cp2-cp2bar needs diag(1, -1)");
      break;
    case GenusRoute::s2xs2:
    case GenusRoute::xn:
      if (!(form == IntersectionForm::hyperbolic())) add("route", "route " + to_string(m.route) + " needs the hyperbolic form");
      break;
    case GenusRoute::blowup:
      if (!diag_is({1, -1, -1}) && !diag_is({1, -1, -1, -1})) add("route", "route blowup needs diag(1,-1,-1) or diag(1,-1,-1,-1)");
      break;
    case GenusRoute::surfaces:
      break;
  }
  return out;
}

std::vector<Violation> validate(const Catalog& catalog) {
  std::vector<Violation> out;
  std::set<std::pair<std::string, std::map<std::string, Int>>> seen;
  for (const auto& m : catalog.models) {
    if (!seen.insert({m.name, m.parameters}).second)
      out.push_back({m.name, "duplicate", "model listed twice with the same parameters"});
    auto v = validate(m);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Catalog cat = parse_catalog(buf.str());
  const auto v = validate(cat);
  if (!v.empty()) throw ValidationError(v.front().to_string());
  return cat;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
  const auto v = validate(catalog);
  if (!v.empty()) throw ValidationError(v.front().to_string());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write catalog " + path.string());
  out << serialize_catalog(catalog);
  if (!out) throw Error("failed writing catalog " + path.string());
}

}  // namespace mingenus
