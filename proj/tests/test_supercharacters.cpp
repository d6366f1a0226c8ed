#include "doctest.h"

#include <vector>

#include "nnscf/errors.hpp"
#include "nnscf/supercharacter.hpp"

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

Poset fan6() {
  return Poset({"1", "2", "3", "4", "5", "6"},
               {{"1", "3"}, {"1", "4"}, {"2", "6"}, {"3", "6"}, {"4", "6"}, {"5", "6"}});
}

Arc arc(const FieldPtr& f, const std::string& a, const std::string& b, std::int64_t label = 1) {
  return Arc{a, b, f->make_element({label})};
}

CycNumber cyc(std::int64_t p, std::int64_t n) { return CycNumber::from_rational(p, Rational(n)); }

}  // namespace

TEST_CASE("theta is the trace composed with the additive character") {
  FieldPtr f2 = Field::make(2);
  CHECK(theta(f2->zero()) == cyc(2, 1));
  CHECK(theta(f2->one()) == cyc(2, -1));
  FieldPtr f3 = Field::make(3);
  CHECK(theta(f3->element(1)) == CycNumber::zeta_pow(3, 1));
  CHECK(theta(f3->element(2)) == CycNumber::zeta_pow(3, 2));
  FieldPtr f4 = Field::make(2, 2, {1, 1, 1});
  CHECK(theta(f4->one()) == cyc(2, 1));                    // trace 0
  CHECK(theta(f4->make_element({0, 1})) == cyc(2, -1));    // trace 1
  // theta is multiplicative over addition.
  for (std::int64_t a = 0; a < 4; ++a)
    for (std::int64_t b = 0; b < 4; ++b)
      CHECK(theta(f4->element(a) + f4->element(b)) == theta(f4->element(a)) * theta(f4->element(b)));
}

TEST_CASE("the full table of the three-chain over GF(2)") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  CharacterTable t = build_table(grp, Theory::nonnesting, kLimit);
  REQUIRE(t.diagrams.size() == 5);
  // Diagram order: {}, {1~2}, {1~2,2~3}, {1~3}, {2~3}.
  CHECK(t.degrees == std::vector<Int>{1, 1, 1, 4, 1});
  CHECK(t.class_sizes == std::vector<Int>{1, 2, 2, 1, 2});
  std::vector<std::vector<std::int64_t>> expected = {
      {1, 1, 1, 1, 1},
      {1, -1, -1, 1, 1},
      {1, -1, 1, 1, -1},
      {4, 0, 0, -4, 0},
      {1, 1, -1, 1, -1},
  };
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(t.values[i][j] == cyc(2, expected[i][j]));
}

TEST_CASE("closed-form values match the induced-restricted oracle") {
  FieldPtr f3 = Field::make(3);
  PatternGroup grp(chain(3), f3);
  auto nn = enumerate_nonnesting(chain(3), f3, kLimit);
  for (const auto& eta : nn) {
    ClassFunction oracle = ind_res_character(grp, eta, kLimit);
    for (const auto& nu : nn)
      CHECK(supercharacter_value(grp, eta, nu) == oracle.value(grp.class_representative(nu)));
    CHECK(supercharacter_degree(grp, eta) == grp.subgroup_index(eta));
  }
}

TEST_CASE("supercharacters sum to the regular character") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(fan6(), f2);
  auto nn = enumerate_nonnesting(fan6(), f2, kLimit);
  // Value at the identity is the group order, zero elsewhere; spot-check the
  // identity column and one nontrivial class.
  Int degree_sum = 0;
  for (const auto& eta : nn) degree_sum += supercharacter_degree(grp, eta);
  CycNumber at_rep = CycNumber::zero(2);
  ArcDiagram nu(fan6(), f2, {arc(f2, "1", "6")});
  for (const auto& eta : nn) at_rep = at_rep + supercharacter_value(grp, eta, nu);
  CHECK(degree_sum == 128);
  CHECK(at_rep.is_zero());
}

TEST_CASE("orthogonality of distinct supercharacters") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  auto nn = enumerate_nonnesting(chain(3), f2, kLimit);
  std::vector<ClassFunction> chars;
  for (const auto& eta : nn) chars.push_back(ind_res_character(grp, eta, kLimit));
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      CycNumber ip = inner_product(chars[i], chars[j]);
      if (i != j) CHECK(ip.is_zero());
      else CHECK_FALSE(ip.is_zero());
    }
  // The norm of the four-dimensional character is 4.
  CHECK(inner_product(chars[3], chars[3]) == cyc(2, 4));
}

TEST_CASE("verification suite passes on small groups") {
  FieldPtr f2 = Field::make(2);
  SctReport r1 = verify_sct(PatternGroup(chain(3), f2), kLimit);
  CHECK(r1.pass());
  CHECK(r1.group_order == 8);
  CHECK(r1.class_count == 5);
  CHECK(r1.checks.size() == 6);
  SctReport r2 = verify_sct(PatternGroup(fan6(), f2), kLimit);
  CHECK(r2.pass());
  SctReport r3 = verify_sct(PatternGroup(chain(3), Field::make(3)), kLimit);
  CHECK(r3.pass());
  SctReport r4 = verify_sct(PatternGroup(Poset(), f2), kLimit);
  CHECK(r4.pass());
  SctReport r5 = verify_sct(PatternGroup(chain(2), Field::make(2, 2, {1, 1, 1})), kLimit);
  CHECK(r5.pass());
}

TEST_CASE("algebra theory on a chain matches the nonnesting theory at n = 3") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  CharacterTable a = build_table(grp, Theory::algebra, kLimit);
  CharacterTable b = build_table(grp, Theory::nonnesting, kLimit);
  REQUIRE(a.diagrams.size() == b.diagrams.size());
  CHECK(a.diagrams == b.diagrams);
  CHECK(a.degrees == b.degrees);
  CHECK(a.values == b.values);
  CHECK(a.class_sizes == b.class_sizes);
}

TEST_CASE("algebra-theory values match the dual-orbit oracle at n = 4") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(4), f2);
  CharacterTable t = build_table(grp, Theory::algebra, kLimit);
  REQUIRE(t.diagrams.size() == 15);
  // Dimension exponent: twice the open arc lengths, minus the crossings.
  auto expected_degree = [](const ArcDiagram& d) {
    const Poset& p = d.poset();
    std::int64_t e = 0;
    for (const auto& a : d.arcs()) e += p.index_of(a.to) - p.index_of(a.from) - 1;
    e = 2 * e - d.crossing_count();
    return int_pow(Int(2), static_cast<std::uint64_t>(e));
  };
  for (std::size_t i = 0; i < t.diagrams.size(); ++i) {
    ClassFunction oracle =
        dual_orbit_character(grp, Functional::from_diagram(t.diagrams[i]), kLimit);
    for (std::size_t j = 0; j < t.diagrams.size(); ++j)
      CHECK(oracle.value(t.reps[j]) == t.values[i][j]);
    CHECK(t.degrees[i] == expected_degree(t.diagrams[i]));
  }
  ArcDiagram nesting(chain(4), f2, {arc(f2, "1", "4"), arc(f2, "2", "3")});
  CHECK(algebra_degree(grp, nesting) == 16);  // exponent 2*(2+0) with no crossings
}

TEST_CASE("the algebra theory requires a linear order") {
  FieldPtr f2 = Field::make(2);
  CHECK_THROWS_AS(build_table(PatternGroup(fan6(), f2), Theory::algebra, kLimit), value_error);
}

TEST_CASE("coarsened characters and classes recover the pattern theory on chains") {
  for (std::int64_t q : {2, 3}) {
    FieldPtr f = Field::make(q);
    PatternGroup grp(chain(3), f);
    auto nn = enumerate_nonnesting(chain(3), f, kLimit);
    for (const auto& eta : nn) {
      ClassFunction coarse = coarsened_character(grp, eta, kLimit);
      ClassFunction fine = ind_res_character(grp, eta, kLimit);
      CHECK(coarse == fine);
      auto kc = coarsened_class(grp, eta, kLimit);
      auto km = grp.class_members(eta, kLimit);
      CHECK(kc == km);
    }
  }
}

TEST_CASE("the coarsened top character of the four-chain splits as 16 plus 16") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(4), f2);
  ArcDiagram top(chain(4), f2, {arc(f2, "1", "4")});
  ClassFunction coarse = coarsened_character(grp, top, kLimit);
  CHECK(coarse.value(grp.identity()) == cyc(2, 32));
  CHECK(supercharacter_degree(grp, top) == 32);
  // Exactly two set partitions have big part {1~4}: itself (dimension 16)
  // and {1~4, 2~3} (dimension 16).
  auto fibers = big_fiber_characters(grp, kLimit);
  for (const auto& [eta, fn] : fibers)
    if (eta == top) CHECK(fn == coarse);
}

TEST_CASE("class functions reject mismatched groups and report constancy") {
  FieldPtr f2 = Field::make(2);
  PatternGroup g3(chain(3), f2);
  ClassFunction fn(g3, kLimit);
  CHECK(fn.value(g3.identity()).is_zero());
  fn.set_value(g3.identity(), cyc(2, 5));
  CHECK(fn.value(g3.identity()) == cyc(2, 5));
  ClassFunction sum = fn + fn;
  CHECK(sum.value(g3.identity()) == cyc(2, 10));
  CHECK(sum.scaled(Rational(1, 2)) == fn);
}
