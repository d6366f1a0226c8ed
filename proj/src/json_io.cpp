#include "nnscf/json_io.hpp"

#include "nnscf/errors.hpp"

#include <fstream>
#include <sstream>

namespace nnscf {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw parse_error(msg);
}

std::int64_t get_int(const Json& j, const std::string& key) {
  require(j.contains(key), "missing field \"" + key + "\"");
  require(j.at(key).is_number_integer(), "\"" + key + "\" must be an integer");
  return j.at(key).get<std::int64_t>();
}

std::string get_string(const Json& j, const std::string& key) {
  require(j.contains(key), "missing field \"" + key + "\"");
  require(j.at(key).is_string(), "\"" + key + "\" must be a string");
  return j.at(key).get<std::string>();
}

FieldElement label_from_json(const Json& j, const FieldPtr& field) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    require(!s.empty(), "empty arc label");
    std::int64_t v = 0;
    for (char ch : s) {
      require(ch >= '0' && ch <= '9', "arc label must be a base-10 residue: " + s);
      v = v * 10 + (ch - '0');
      require(v <= field->q(), "arc label out of range: " + s);
    }
    require(field->e() == 1, "string labels are only valid over prime fields");
    return field->make_element({v});
  }
  require(j.is_array(), "arc label must be a string or a coefficient list");
  std::vector<std::int64_t> coeffs;
  for (const auto& c : j) {
    require(c.is_number_integer(), "label coefficients must be integers");
    coeffs.push_back(c.get<std::int64_t>());
  }
  require(static_cast<int>(coeffs.size()) == field->e(),
          "label coefficient list must have one entry per basis power");
  return field->make_element(coeffs);
}

Json label_to_json(const FieldElement& v) {
  if (v.field()->e() == 1) return Json(std::to_string(v.coeffs().at(0)));
  Json arr = Json::array();
  for (auto c : v.coeffs()) arr.push_back(c);
  return arr;
}

}  // namespace

Json field_to_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["e"] = field.e();
  if (field.e() > 1) {
    Json mod = Json::array();
    for (auto c : field.modulus()) mod.push_back(c);
    j["modulus"] = mod;
  }
  return j;
}

FieldPtr field_from_json(const Json& j) {
  require(j.is_object(), "field must be an object");
  std::int64_t p = get_int(j, "p");
  int e = j.contains("e") ? static_cast<int>(get_int(j, "e")) : 1;
  std::vector<std::int64_t> modulus;
  if (j.contains("modulus")) {
    require(j.at("modulus").is_array(), "\"modulus\" must be an array");
    for (const auto& c : j.at("modulus")) {
      require(c.is_number_integer(), "modulus coefficients must be integers");
      modulus.push_back(c.get<std::int64_t>());
    }
  }
  return Field::make(p, e, modulus);
}

Json cyc_to_json(const CycNumber& c) {
  Json j;
  j["p"] = c.p();
  Json coords = Json::array();
  for (const auto& r : c.coords()) coords.push_back(rational_to_string(r));
  j["coords"] = coords;
  return j;
}

CycNumber cyc_from_json(const Json& j) {
  require(j.is_object(), "cyclotomic number must be an object");
  std::int64_t p = get_int(j, "p");
  require(j.contains("coords") && j.at("coords").is_array(), "\"coords\" must be an array");
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) {
    require(c.is_string(), "coordinates must be rational strings");
    coords.push_back(parse_rational(c.get<std::string>()));
  }
  return CycNumber(p, std::move(coords));
}

Json poset_to_json(const Poset& poset) {
  Json j;
  j["elements"] = poset.elements();
  Json covers = Json::array();
  for (const auto& [a, b] : poset.cover_pairs()) covers.push_back(Json::array({a, b}));
  j["covers"] = covers;
  return j;
}

Poset poset_from_json(const Json& j) {
  require(j.is_object(), "poset must be an object");
  require(j.contains("elements") && j.at("elements").is_array(),
          "poset needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    require(e.is_string(), "poset elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    require(j.at("covers").is_array(), "\"covers\" must be an array");
    for (const auto& c : j.at("covers")) {
      require(c.is_array() && c.size() == 2 && c.at(0).is_string() && c.at(1).is_string(),
              "each cover must be a pair of element names");
      covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
  }
  try {
    return Poset(std::move(elements), covers);
  } catch (const value_error& err) {
    throw parse_error(std::string("invalid poset: ") + err.what());
  }
}

Json arcs_to_json(const ArcDiagram& d) {
  Json arcs = Json::array();
  for (const auto& arc : d.arcs()) {
    Json a;
    a["from"] = arc.from;
    a["to"] = arc.to;
    a["label"] = label_to_json(arc.label);
    arcs.push_back(a);
  }
  return arcs;
}

ArcDiagram arcs_from_json(const Json& j, const Poset& poset, const FieldPtr& field) {
  require(j.is_array(), "\"arcs\" must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : j) {
    require(a.is_object(), "each arc must be an object");
    arcs.push_back(Arc{get_string(a, "from"), get_string(a, "to"),
                       label_from_json(a.contains("label") ? a.at("label") : Json("1"), field)});
  }
  try {
    return ArcDiagram(poset, field, std::move(arcs));
  } catch (const value_error& err) {
    throw parse_error(std::string("invalid arc diagram: ") + err.what());
  }
}

Json diagram_to_json(const ArcDiagram& d) {
  Json j;
  j["poset"] = poset_to_json(d.poset());
  j["field"] = field_to_json(*d.field());
  j["arcs"] = arcs_to_json(d);
  return j;
}

ArcDiagram diagram_from_json(const Json& j) {
  require(j.is_object(), "diagram must be an object");
  require(j.contains("poset"), "diagram needs a \"poset\"");
  require(j.contains("field"), "diagram needs a \"field\"");
  Poset poset = poset_from_json(j.at("poset"));
  FieldPtr field = field_from_json(j.at("field"));
  return arcs_from_json(j.contains("arcs") ? j.at("arcs") : Json::array(), poset, field);
}

Json group_element_to_json(const GroupElement& g) {
  Json entries = Json::array();
  for (const auto& [pos, v] : g.f().entries()) {
    Json e;
    e["row"] = g.poset().label(pos.first);
    e["col"] = g.poset().label(pos.second);
    Json val = Json::array();
    for (auto c : v.coeffs()) val.push_back(c);
    e["value"] = val;
    entries.push_back(e);
  }
  Json j;
  j["entries"] = entries;
  return j;
}

GroupElement group_element_from_json(const Json& j, const Poset& poset, const FieldPtr& field) {
  require(j.is_object(), "group element must be an object");
  AlgebraElement x(poset, field);
  if (j.contains("entries")) {
    require(j.at("entries").is_array(), "\"entries\" must be an array");
    for (const auto& e : j.at("entries")) {
      require(e.is_object(), "each entry must be an object");
      std::string row = get_string(e, "row");
      std::string col = get_string(e, "col");
      require(e.contains("value") && e.at("value").is_array(),
              "entry \"value\" must be a coefficient list");
      std::vector<std::int64_t> coeffs;
      for (const auto& c : e.at("value")) {
        require(c.is_number_integer(), "entry coefficients must be integers");
        coeffs.push_back(c.get<std::int64_t>());
      }
      require(static_cast<int>(coeffs.size()) == field->e(),
              "entry value must have one coefficient per basis power");
      try {
        x.set_entry(poset.index_of(row), poset.index_of(col), field->make_element(coeffs));
      } catch (const value_error& err) {
        throw parse_error(std::string("invalid entry: ") + err.what());
      }
    }
  }
  return GroupElement(std::move(x));
}

Json scf_vector_to_json(const ScfVector& v) {
  Json j;
  j["poset"] = poset_to_json(v.poset());
  j["field"] = field_to_json(*v.field());
  j["basis"] = basis_name(v.basis());
  Json terms = Json::array();
  for (const auto& [d, c] : v.coeffs()) {
    Json t;
    t["arcs"] = arcs_to_json(d);
    t["coeff"] = cyc_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

ScfVector scf_vector_from_json(const Json& j) {
  require(j.is_object(), "vector must be an object");
  require(j.contains("poset"), "vector needs a \"poset\"");
  require(j.contains("field"), "vector needs a \"field\"");
  Poset poset = poset_from_json(j.at("poset"));
  FieldPtr field = field_from_json(j.at("field"));
  ScfBasis basis = ScfBasis::kappa;
  if (j.contains("basis")) {
    try {
      basis = basis_from_name(get_string(j, "basis"));
    } catch (const value_error& err) {
      throw parse_error(err.what());
    }
  }
  ScfVector v(poset, field, basis);
  if (j.contains("terms")) {
    require(j.at("terms").is_array(), "\"terms\" must be an array");
    for (const auto& t : j.at("terms")) {
      require(t.is_object() && t.contains("arcs"), "each term needs an \"arcs\" list");
      ArcDiagram d = arcs_from_json(t.at("arcs"), poset, field);
      CycNumber c = t.contains("coeff") ? cyc_from_json(t.at("coeff"))
                                        : CycNumber::one(field->p());
      try {
        v.add_term(d, c);
      } catch (const value_error& err) {
        throw parse_error(std::string("invalid term: ") + err.what());
      }
    }
  } else if (j.contains("arcs")) {
    // A bare diagram is accepted as a basis element.
    try {
      v.add_term(arcs_from_json(j.at("arcs"), poset, field), CycNumber::one(field->p()));
    } catch (const value_error& err) {
      throw parse_error(std::string("invalid diagram: ") + err.what());
    }
  }
  return v;
}

Json tensor_to_json(const TensorElement& t) {
  Json j;
  j["left_poset"] = poset_to_json(t.left_poset());
  j["right_poset"] = poset_to_json(t.right_poset());
  j["field"] = field_to_json(*t.field());
  j["basis"] = basis_name(t.basis());
  Json terms = Json::array();
  for (const auto& [k, c] : t.coeffs()) {
    Json term;
    term["left"] = arcs_to_json(k.first);
    term["right"] = arcs_to_json(k.second);
    term["coeff"] = cyc_to_json(c);
    terms.push_back(term);
  }
  j["terms"] = terms;
  return j;
}

Json table_to_json(const CharacterTable& table) {
  Json j;
  j["theory"] = table.theory == Theory::nonnesting ? "nonnesting" : "algebra";
  j["poset"] = poset_to_json(table.group.poset());
  j["field"] = field_to_json(*table.group.field());
  j["group_order"] = table.group.order().str();
  Json classes = Json::array();
  for (std::size_t i = 0; i < table.diagrams.size(); ++i) {
    Json c;
    c["arcs"] = arcs_to_json(table.diagrams[i]);
    c["size"] = table.class_sizes[i].str();
    c["representative"] = group_element_to_json(table.reps[i]);
    classes.push_back(c);
  }
  j["classes"] = classes;
  Json chars = Json::array();
  for (std::size_t i = 0; i < table.diagrams.size(); ++i) {
    Json c;
    c["arcs"] = arcs_to_json(table.diagrams[i]);
    c["degree"] = table.degrees[i].str();
    chars.push_back(c);
  }
  j["characters"] = chars;
  Json values = Json::array();
  for (const auto& row : table.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(cyc_to_json(v));
    values.push_back(r);
  }
  j["values"] = values;
  return j;
}

Json check_results_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.pass) j["witness"] = c.witness;
    arr.push_back(j);
  }
  return arr;
}

Json sct_report_to_json(const SctReport& report) {
  Json j;
  j["group_order"] = report.group_order.str();
  j["class_count"] = report.class_count;
  j["checks"] = check_results_to_json(report.checks);
  j["pass"] = report.pass();
  return j;
}

Json hopf_report_to_json(const HopfReport& report) {
  Json j;
  j["checks"] = check_results_to_json(report.checks);
  if (!report.noncommutative_witness.empty())
    j["noncommutative_witness"] = report.noncommutative_witness;
  j["pass"] = report.pass();
  return j;
}

Json free_report_to_json(const FreeReport& report) {
  Json j;
  Json a = Json::array();
  for (const auto& v : report.linear_atomic_counts) a.push_back(v.str());
  j["linear_atomic_counts"] = a;
  Json d = Json::array();
  for (const auto& v : report.linear_dims) d.push_back(v.str());
  j["linear_dims"] = d;
  j["checks"] = check_results_to_json(report.checks);
  j["pass"] = report.pass();
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& err) {
    throw parse_error("invalid JSON in " + path + ": " + err.what());
  }
}

}  // namespace nnscf
