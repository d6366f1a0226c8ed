#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "nnscf/errors.hpp"
#include "nnscf/pattern_group.hpp"

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

}  // namespace

TEST_CASE("group order counts the strict pairs") {
  FieldPtr f2 = Field::make(2);
  CHECK(PatternGroup(chain(3), f2).order() == 8);
  CHECK(PatternGroup(chain(4), f2).order() == 64);
  CHECK(PatternGroup(fan6(), f2).order() == 128);  // seven strict pairs
  CHECK(PatternGroup(chain(3), Field::make(3)).order() == 27);
  CHECK(PatternGroup(Poset(), f2).order() == 1);
  CHECK_THROWS_AS(PatternGroup(chain(4), f2).check_limit(10), limit_error);
}

TEST_CASE("element indexing round trips and multiplication works") {
  FieldPtr f3 = Field::make(3);
  PatternGroup grp(chain(3), f3);
  std::set<std::string> seen;
  for (Int i = 0; i < grp.order(); ++i) {
    GroupElement g = grp.element_at(i);
    CHECK(grp.index_of(g) == i);
    seen.insert(g.key());
    CHECK(g * g.inverse() == grp.identity());
  }
  CHECK(seen.size() == 27);
  // (1 + e12)(1 + e23) = 1 + e12 + e23 + e13.
  AlgebraElement x(chain(3), f3);
  x.set_entry(0, 1, f3->one());
  AlgebraElement y(chain(3), f3);
  y.set_entry(1, 2, f3->one());
  GroupElement g = GroupElement(x) * GroupElement(y);
  CHECK(g.entry(0, 1) == f3->one());
  CHECK(g.entry(1, 2) == f3->one());
  CHECK(g.entry(0, 2) == f3->one());
  // Off-order entries are rejected.
  AlgebraElement bad(fan6(), f3);
  CHECK_THROWS_AS(bad.set_entry(0, 1, f3->one()), value_error);  // 1 and 2 incomparable
}

TEST_CASE("sml of a group element on the fan poset") {
  FieldPtr f7 = Field::make(7);
  Poset p = fan6();
  AlgebraElement x(p, f7);
  x.set_entry(p.index_of("1"), p.index_of("3"), f7->make_element({1}));  // a
  x.set_entry(p.index_of("1"), p.index_of("6"), f7->make_element({2}));  // b
  x.set_entry(p.index_of("2"), p.index_of("6"), f7->make_element({3}));  // c
  x.set_entry(p.index_of("4"), p.index_of("6"), f7->make_element({4}));  // e
  ArcDiagram s = sml_of(GroupElement(x));
  CHECK(s.to_string() == "{1~3:1, 2~6:3, 4~6:4}");
}

TEST_CASE("big of a functional on the fan poset") {
  FieldPtr f7 = Field::make(7);
  Poset p = fan6();
  Functional lam(p, f7);
  lam.set_coord(p.index_of("1"), p.index_of("3"), f7->make_element({1}));  // a
  lam.set_coord(p.index_of("1"), p.index_of("6"), f7->make_element({2}));  // b
  lam.set_coord(p.index_of("2"), p.index_of("6"), f7->make_element({3}));  // c
  lam.set_coord(p.index_of("4"), p.index_of("6"), f7->make_element({4}));  // e
  ArcDiagram b = big_of(lam);
  CHECK(b.to_string() == "{1~6:2, 2~6:3}");
}

TEST_CASE("superclass sizes and membership on the three-chain") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  auto nn = enumerate_nonnesting(chain(3), f2, kLimit);
  Int total = 0;
  for (const auto& nu : nn) {
    Int size = grp.class_size(nu);
    auto members = grp.class_members(nu, kLimit);
    CHECK(Int(static_cast<std::uint64_t>(members.size())) == size);
    CHECK(members == grp.class_members_brute(nu, kLimit));
    for (const auto& g : members) CHECK(grp.class_contains(nu, g));
    total += size;
  }
  CHECK(total == grp.order());  // superclasses partition the group
  ArcDiagram top(chain(3), f2, {arc(f2, "1", "3")});
  CHECK(grp.class_size(top) == 1);
  ArcDiagram mid(chain(3), f2, {arc(f2, "1", "2")});
  CHECK(grp.class_size(mid) == 2);
  CHECK(grp.class_free_pairs(mid) == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("class representatives and functionals match their diagrams") {
  FieldPtr f3 = Field::make(3);
  PatternGroup grp(chain(4), f3);
  auto nn = enumerate_nonnesting(chain(4), f3, kLimit);
  for (const auto& nu : nn) {
    CHECK(sml_of(grp.class_representative(nu)) == nu);
    CHECK(Functional::from_diagram(nu) == grp.class_functional(nu));
    CHECK(big_of(grp.class_functional(nu)) == nu);  // nonnesting big is itself
  }
}

TEST_CASE("pattern subgroup attached to a diagram") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  ArcDiagram top(chain(3), f2, {arc(f2, "1", "3")});
  auto blocked = grp.blocked_pairs(top);
  CHECK(blocked == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(grp.subgroup_index(top) == 4);
  auto members = grp.subgroup_members(top, kLimit);
  CHECK(members.size() == 2);  // only the 1~3 entry is free
  for (const auto& g : members) CHECK(grp.in_subgroup(top, g));
  ArcDiagram none = ArcDiagram::empty(chain(3), f2);
  CHECK(grp.subgroup_index(none) == 1);
  CHECK(grp.subgroup_members(none, kLimit).size() == 8);
}

TEST_CASE("two sided orbits close under the generators") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  AlgebraElement x(chain(3), f2);
  x.set_entry(0, 1, f2->one());
  auto orbit = grp.two_sided_orbit(x, kLimit);
  CHECK(orbit.size() == 2);  // e12 and e12 + e13
  Functional lam(chain(3), f2);
  lam.set_coord(0, 2, f2->one());
  auto dual = grp.dual_orbit(lam, kLimit);
  CHECK(dual.size() == 4);  // e13* plus any combination of e12*, e23*
}

TEST_CASE("functional enumeration covers the dual space") {
  FieldPtr f2 = Field::make(2);
  PatternGroup grp(chain(3), f2);
  std::set<std::string> keys;
  grp.for_each_functional(kLimit, [&](const Functional& lam) {
    CHECK(grp.index_of(lam) == Int(static_cast<std::uint64_t>(keys.size())));
    keys.insert(lam.key());
  });
  CHECK(keys.size() == 8);
}

TEST_CASE("split projection and embedding invert each other") {
  FieldPtr f2 = Field::make(2);
  Poset p = Poset::concat(Poset({"1", "2"}, {}), Poset({"3"}, {}));
  PatternGroup grp(p, f2);
  std::vector<std::string> S = {"1", "2"}, T = {"3"};
  grp.for_each(kLimit, [&](const GroupElement& g) {
    auto [u, v] = project_split(g, S, T);
    GroupElement back = embed_split(u, v, p);
    auto [u2, v2] = project_split(back, S, T);
    CHECK(u2 == u);
    CHECK(v2 == v);
  });
  // The projection is a homomorphism for a concat poset.
  grp.for_each(kLimit, [&](const GroupElement& g) {
    grp.for_each(kLimit, [&](const GroupElement& h) {
      auto [a1, b1] = project_split(g * h, S, T);
      auto [a2, b2] = project_split(g, S, T);
      auto [a3, b3] = project_split(h, S, T);
      CHECK(a1 == a2 * a3);
      CHECK(b1 == b2 * b3);
    });
  });
  CHECK_THROWS_AS(project_split(grp.identity(), {"1"}, {"3"}), value_error);
}
