#include "ortholat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ortholat/error.hpp"

namespace ortholat {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) raise(errc::parse_error, "malformed JSON");
  return doc;
}

GradeNegation parse_grade_negation(const json& j) {
  GradeNegation neg;
  std::string family = j.is_string() ? j.get<std::string>()
                                     : j.value("family", std::string("standard"));
  if (family == "standard")
    neg.family = GradeNegationFamily::standard;
  else if (family == "lambda") {
    neg.family = GradeNegationFamily::lambda;
    if (!j.is_object() || !j.contains("lambda"))
      raise(errc::schema_error, "lambda negation needs a \"lambda\" parameter");
    neg.lambda = parse_rat(j.at("lambda").get<std::string>());
  } else if (family == "yager") {
    neg.family = GradeNegationFamily::yager;
    if (!j.is_object() || !j.contains("p"))
      raise(errc::schema_error, "yager negation needs a \"p\" parameter");
    neg.p = parse_rat(j.at("p").get<std::string>());
  } else if (family == "discrete")
    neg.family = GradeNegationFamily::discrete;
  else if (family == "dual-discrete")
    neg.family = GradeNegationFamily::dual_discrete;
  else
    raise(errc::schema_error, "unknown negation family '" + family + "'");
  return neg;
}

MembershipFn membership_from_json(const json& j, const std::vector<std::string>& universe,
                                  const std::string& name) {
  if (!j.is_object()) raise(errc::schema_error, "membership function must be an object");
  const json& grades = j.contains("grades") ? j.at("grades") : j;
  std::vector<Rat> values;
  for (const auto& point : universe) {
    if (!grades.contains(point))
      raise(errc::schema_error, "function '" + name + "' missing grade at '" + point + "'");
    values.push_back(parse_rat(grades.at(point).get<std::string>()));
  }
  return make_membership(name, universe, values);
}

}  // namespace

Poset StructureDocument::to_poset() const { return Poset::from_covers(elements, covers); }

UnaryMap StructureDocument::negation_map(const Poset& p) const {
  UnaryMap map(static_cast<std::size_t>(p.size()), -1);
  for (const auto& [from, to] : negation) {
    auto fi = p.find(from);
    auto ti = p.find(to);
    if (!fi || !ti) raise(errc::schema_error, "negation names unknown element");
    map[static_cast<std::size_t>(*fi)] = *ti;
  }
  for (int i = 0; i < p.size(); ++i)
    if (map[static_cast<std::size_t>(i)] < 0)
      raise(errc::schema_error, "negation undefined on '" + p.label(i) + "'");
  return map;
}

StructureDocument parse_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) raise(errc::schema_error, "document must be a JSON object");

  StructureDocument out;
  if (doc.contains("elements")) {
    out.has_order = true;
    for (const auto& e : doc.at("elements")) {
      if (!e.is_string()) raise(errc::schema_error, "element labels must be strings");
      out.elements.push_back(e.get<std::string>());
    }
    if (doc.contains("covers"))
      for (const auto& c : doc.at("covers")) {
        if (!c.is_array() || c.size() != 2)
          raise(errc::schema_error, "covers must be [lower, upper] pairs");
        out.covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
      }
    if (doc.contains("negation") && doc.at("negation").is_object())
      for (const auto& [k, v] : doc.at("negation").items())
        out.negation.emplace(k, v.get<std::string>());
    if (doc.contains("implication")) {
      const json& imp = doc.at("implication");
      if (imp.is_string())
        out.implication_kind = imp.get<std::string>();
      else if (imp.is_object() && imp.contains("kind"))
        out.implication_kind = imp.at("kind").get<std::string>();
      else if (imp.is_object() && imp.contains("table")) {
        for (const auto& row : imp.at("table")) {
          std::vector<std::string> cells;
          for (const auto& cell : row) cells.push_back(cell.get<std::string>());
          out.implication_table.push_back(std::move(cells));
        }
      } else
        raise(errc::schema_error, "implication must be a kind or a table");
    }
  }

  if (doc.contains("functions")) {
    out.has_functions = true;
    if (!doc.contains("universe")) raise(errc::schema_error, "function bundle needs a universe");
    for (const auto& u : doc.at("universe")) out.universe.push_back(u.get<std::string>());
    const json& fns = doc.at("functions");
    if (fns.is_array()) {
      for (const auto& f : fns) {
        if (!f.contains("name")) raise(errc::schema_error, "function entries need names");
        out.functions.push_back(
            membership_from_json(f, out.universe, f.at("name").get<std::string>()));
      }
    } else if (fns.is_object()) {
      for (const auto& [name, body] : fns.items())
        out.functions.push_back(membership_from_json(body, out.universe, name));
    } else
      raise(errc::schema_error, "functions must be an array or object");

    if (doc.contains("negation") && !doc.at("negation").is_null()) {
      const json& neg = doc.at("negation");
      bool is_map = neg.is_object() && !neg.contains("family");
      if (is_map) {
        for (const auto& [k, v] : neg.items()) out.negation.emplace(k, v.get<std::string>());
      } else {
        out.grade_negation = parse_grade_negation(neg);
      }
    } else if (!out.has_order) {
      out.grade_negation = GradeNegation{};  // standard by default
    }
    if (doc.contains("operators")) {
      const json& ops = doc.at("operators");
      out.op_source = ops.is_string() ? ops.get<std::string>()
                                      : ops.value("source", std::string("induced"));
      if (ops.is_object() && ops.contains("family"))
        out.op_source = ops.at("family").get<std::string>();
    } else {
      out.op_source = "induced";
    }
  }

  if (!out.has_order && !out.has_functions)
    raise(errc::schema_error, "document has neither \"elements\" nor \"functions\"");
  return out;
}

StructureDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string write_poset_document(const Poset& p, const UnaryMap* negation) {
  json doc;
  doc["elements"] = json::array();
  for (int i = 0; i < p.size(); ++i) doc["elements"].push_back(p.label(i));
  doc["covers"] = json::array();
  for (const auto& [lo, hi] : p.cover_pairs())
    doc["covers"].push_back(json::array({p.label(lo), p.label(hi)}));
  if (negation) {
    json neg = json::object();
    for (int i = 0; i < p.size(); ++i)
      neg[p.label(i)] = p.label((*negation)[static_cast<std::size_t>(i)]);
    doc["negation"] = neg;
  }
  return doc.dump(2);
}

std::string membership_json(const MembershipFn& f) {
  json doc;
  doc["universe"] = f.universe;
  json grades = json::object();
  for (int i = 0; i < f.points(); ++i)
    grades[f.universe[static_cast<std::size_t>(i)]] = rat_str(f.at(i));
  doc["grades"] = grades;
  return doc.dump(2);
}

MembershipFn parse_membership(const std::string& text, std::string name) {
  json doc = parse_json(text);
  if (!doc.contains("universe")) raise(errc::schema_error, "membership doc needs a universe");
  std::vector<std::string> universe;
  for (const auto& u : doc.at("universe")) universe.push_back(u.get<std::string>());
  return membership_from_json(doc, universe, name);
}

std::string dot_from_poset(const Poset& p) {
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (p.height(a) != p.height(b)) return p.height(a) < p.height(b);
    return p.label(a) < p.label(b);
  });

  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle, fixedsize=false];\n";
  for (int i : order) out << "  \"" << p.label(i) << "\";\n";

  auto covers = p.cover_pairs();
  std::sort(covers.begin(), covers.end(), [&](auto a, auto b) {
    if (p.label(a.first) != p.label(b.first)) return p.label(a.first) < p.label(b.first);
    return p.label(a.second) < p.label(b.second);
  });
  for (const auto& [lo, hi] : covers)
    out << "  \"" << p.label(lo) << "\" -> \"" << p.label(hi) << "\";\n";

  int max_height = 0;
  for (int i = 0; i < p.size(); ++i) max_height = std::max(max_height, p.height(i));
  for (int h = 0; h <= max_height && p.size() > 0; ++h) {
    bool any = false;
    for (int i : order)
      if (p.height(i) == h) any = true;
    if (!any) continue;
    out << "  { rank=same;";
    for (int i : order)
      if (p.height(i) == h) out << " \"" << p.label(i) << "\";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<int> display_order(const Lattice& lat) {
  std::vector<int> order(static_cast<std::size_t>(lat.size()));
  for (int i = 0; i < lat.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (lat.poset().height(a) != lat.poset().height(b))
      return lat.poset().height(a) > lat.poset().height(b);
    return lat.label(a) < lat.label(b);
  });
  return order;
}

namespace {

bool marked(const std::vector<std::pair<int, int>>* marks, int x, int y) {
  if (!marks) return false;
  for (const auto& [a, b] : *marks)
    if (a == x && b == y) return true;
  return false;
}

}  // namespace

std::string render_table_text(const Lattice& lat, const Implication& imp,
                              const std::vector<std::pair<int, int>>* marks) {
  auto order = display_order(lat);
  auto glyphs = [](const std::string& s) {
    std::size_t count = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++count;
    return count;
  };
  std::size_t width = 2;
  for (int i = 0; i < lat.size(); ++i) width = std::max(width, glyphs(lat.label(i)) + 1);

  auto pad = [&](const std::string& s) {
    std::string out = s;
    while (glyphs(out) < width + 1) out = " " + out;
    return out;
  };

  std::ostringstream out;
  out << pad("→") << " |";
  for (int c : order) out << pad(lat.label(c));
  out << "\n" << std::string(width + 1, '-') << "-+" << std::string(order.size() * (width + 1), '-')
      << "\n";
  for (int r : order) {
    out << pad(lat.label(r)) << " |";
    for (int c : order) {
      std::string cell = lat.label(imp.at(r, c));
      if (marked(marks, r, c)) cell += "*";
      out << pad(cell);
    }
    out << "\n";
  }
  return out.str();
}

std::string render_table_json(const Lattice& lat, const Implication& imp,
                              const std::vector<std::pair<int, int>>* marks) {
  auto order = display_order(lat);
  json doc;
  doc["source"] = imp.source;
  doc["order"] = json::array();
  for (int i : order) doc["order"].push_back(lat.label(i));
  doc["rows"] = json::array();
  for (int r : order) {
    json row = json::array();
    for (int c : order) row.push_back(lat.label(imp.at(r, c)));
    doc["rows"].push_back(row);
  }
  if (marks) {
    json cells = json::array();
    for (const auto& [x, y] : *marks)
      cells.push_back(json::array({lat.label(x), lat.label(y)}));
    doc["diff-classical"] = cells;
  }
  return doc.dump(2);
}

std::string classification_report_json(const Lattice& lat) {
  json doc;
  doc["lattice"] = true;
  doc["bounded"] = lat.bounded();
  json witnesses = json::object();

  auto mod = is_modular(lat);
  doc["modular"] = mod.modular;
  if (!mod.modular)
    witnesses["modular"] = json::array({lat.label(mod.witness[0]), lat.label(mod.witness[1]),
                                        lat.label(mod.witness[2])});
  auto dist = is_distributive(lat);
  doc["distributive"] = dist.distributive;
  if (!dist.distributive)
    witnesses["distributive"] =
        json::array({lat.label(dist.witness[0]), lat.label(dist.witness[1]),
                     lat.label(dist.witness[2])});
  doc["witnesses"] = witnesses;
  return doc.dump(2);
}

}  // namespace ortholat
