#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "nnscf/errors.hpp"
#include "nnscf/hopf.hpp"
#include "nnscf/json_io.hpp"

using namespace nnscf;

namespace {

const Int kLimit = Int(1) << 20;

Poset chain(int n) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= n; ++i) elems.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset(elems, covers);
}

Arc arc(const FieldPtr& f, const std::string& a, const std::string& b, std::int64_t label = 1) {
  return Arc{a, b, f->make_element({label})};
}

}  // namespace

TEST_CASE("field serialization round trips") {
  FieldPtr f4 = Field::make(2, 2, {1, 1, 1});
  FieldPtr back = field_from_json(field_to_json(*f4));
  CHECK(back->same(*f4));
  FieldPtr f7 = Field::make(7);
  CHECK(field_from_json(field_to_json(*f7))->same(*f7));
  CHECK(field_to_json(*f7).contains("modulus") == false);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"e": 2})")), parse_error);
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"p": "2"})")), parse_error);
}

TEST_CASE("cyclotomic serialization round trips") {
  CycNumber z = CycNumber::zeta_pow(5, 3).scaled(Rational(-7, 2)) + CycNumber::one(5);
  CHECK(cyc_from_json(cyc_to_json(z)) == z);
  CHECK_THROWS_AS(cyc_from_json(Json::parse(R"({"p": 5, "coords": [1]})")), parse_error);
}

TEST_CASE("poset serialization round trips") {
  Poset p({"b", "a", "c"}, {{"c", "a"}});
  Poset back = poset_from_json(poset_to_json(p));
  CHECK(back == p);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"covers": []})")), parse_error);
  CHECK_THROWS_AS(
      poset_from_json(Json::parse(R"({"elements": ["1"], "covers": [["1", "1"]]})")),
      parse_error);
  CHECK_THROWS_AS(
      poset_from_json(Json::parse(R"({"elements": ["1", "2"], "covers": [["1"]]})")),
      parse_error);
}

TEST_CASE("diagram serialization round trips over prime and extension fields") {
  FieldPtr f3 = Field::make(3);
  ArcDiagram d(chain(3), f3, {arc(f3, "1", "2", 2)});
  ArcDiagram back = diagram_from_json(diagram_to_json(d));
  CHECK(back == d);
  CHECK(diagram_to_json(d)["arcs"][0]["label"] == Json("2"));

  FieldPtr f4 = Field::make(2, 2, {1, 1, 1});
  ArcDiagram d4(chain(2), f4, {Arc{"1", "2", f4->make_element({0, 1})}});
  CHECK(diagram_from_json(diagram_to_json(d4)) == d4);
  CHECK(diagram_to_json(d4)["arcs"][0]["label"] == Json::parse("[0, 1]"));

  // Labels must parse and be in range.
  Json bad = diagram_to_json(d);
  bad["arcs"][0]["label"] = "x";
  CHECK_THROWS_AS(diagram_from_json(bad), parse_error);
  bad["arcs"][0]["label"] = "0";
  CHECK_THROWS_AS(diagram_from_json(bad), parse_error);
}

TEST_CASE("group elements serialize by their entries") {
  FieldPtr f4 = Field::make(2, 2, {1, 1, 1});
  Poset p = chain(3);
  AlgebraElement x(p, f4);
  x.set_entry(0, 2, f4->make_element({1, 1}));
  GroupElement g(x);
  GroupElement back = group_element_from_json(group_element_to_json(g), p, f4);
  CHECK(back == g);
  GroupElement id = group_element_from_json(Json::parse(R"({"entries": []})"), p, f4);
  CHECK(id == GroupElement::identity(p, f4));
  CHECK_THROWS_AS(
      group_element_from_json(
          Json::parse(R"({"entries": [{"row": "2", "col": "1", "value": [1, 0]}]})"), p, f4),
      parse_error);
}

TEST_CASE("vectors and tensors serialize with their basis") {
  FieldPtr f2 = Field::make(2);
  Poset p = chain(3);
  ScfVector v(p, f2, ScfBasis::character);
  v.add_term(ArcDiagram(p, f2, {arc(f2, "1", "3")}), CycNumber::zeta_pow(2, 1));
  v.add_term(ArcDiagram::empty(p, f2), CycNumber::from_rational(2, Rational(5, 3)));
  ScfVector back = scf_vector_from_json(scf_vector_to_json(v));
  CHECK(back == v);
  // A bare diagram parses as a single basis element.
  ScfVector one = scf_vector_from_json(Json::parse(
      R"({"poset": {"elements": ["1"], "covers": []}, "field": {"p": 2}, "arcs": []})"));
  CHECK(one.basis() == ScfBasis::kappa);
  CHECK(one.coeffs().size() == 1);
  TensorElement t = hopf_coproduct(scf_vector_from_json(scf_vector_to_json(v)).in_basis(
                                       ScfBasis::kappa, kLimit),
                                   {"1", "2"}, kLimit);
  Json tj = tensor_to_json(t);
  CHECK(tj.contains("terms"));
  CHECK(tj["basis"] == "kappa");
}

TEST_CASE("reports and tables serialize to stable JSON") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(2), f2);
  CharacterTable table = build_table(grp, Theory::nonnesting, kLimit);
  Json tj = table_to_json(table);
  CHECK(tj["group_order"] == "2");
  CHECK(tj["classes"].size() == 2);
  CHECK(tj["values"][0][0] == cyc_to_json(CycNumber::one(2)));
  SctReport report = verify_sct(grp, kLimit);
  Json rj = sct_report_to_json(report);
  CHECK(rj["pass"] == true);
  CHECK(dump_json(rj) == dump_json(sct_report_to_json(verify_sct(grp, kLimit))));
}

TEST_CASE("file loading reports parse failures") {
  const std::string good = "/tmp/nnscf_io_good.json";
  const std::string bad = "/tmp/nnscf_io_bad.json";
  {
    std::ofstream out(good);
    out << "{\"elements\": [\"1\"], \"covers\": []}\n";
  }
  {
    std::ofstream out(bad);
    out << "{nope\n";
  }
  CHECK(poset_from_json(load_json_file(good)).size() == 1);
  CHECK_THROWS_AS(load_json_file(bad), parse_error);
  CHECK_THROWS_AS(load_json_file("/tmp/nnscf_io_missing.json"), parse_error);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("dump is deterministic with a trailing newline") {
  Json j;
  j["b"] = 1;
  j["a"] = 2;
  std::string s = dump_json(j);
  CHECK(s.back() == '\n');
  // Ordered serialization preserves insertion order.
  CHECK(s.find("\"b\"") < s.find("\"a\""));
  CHECK(dump_json(j) == s);
}
