#include "nnscf/supercharacter.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nnscf {

CycNumber theta(const FieldElement& x) {
  return CycNumber::zeta_pow(x.field()->p(), x.trace());
}

ClassFunction::ClassFunction(PatternGroup grp, const Int& limit) : grp_(std::move(grp)) {
  grp_.check_limit(limit);
  vals_.assign(static_cast<std::size_t>(grp_.order()),
               CycNumber::zero(grp_.field()->p()));
}

const CycNumber& ClassFunction::value(const GroupElement& g) const {
  return vals_.at(static_cast<std::size_t>(grp_.index_of(g)));
}

void ClassFunction::set_value(const GroupElement& g, const CycNumber& v) {
  vals_.at(static_cast<std::size_t>(grp_.index_of(g))) = v;
}

void ClassFunction::add_value(const GroupElement& g, const CycNumber& v) {
  auto& slot = vals_.at(static_cast<std::size_t>(grp_.index_of(g)));
  slot = slot + v;
}

void ClassFunction::set_value_at(std::size_t index, const CycNumber& v) {
  vals_.at(index) = v;
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  if (grp_.poset() != rhs.grp_.poset() || !grp_.field()->same(*rhs.grp_.field()))
    throw value_error("class functions live on different groups");
  ClassFunction out = *this;
  for (std::size_t i = 0; i < vals_.size(); ++i) out.vals_[i] = vals_[i] + rhs.vals_[i];
  return out;
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
  ClassFunction out = *this;
  for (auto& v : out.vals_) v = v.scaled(r);
  return out;
}

bool ClassFunction::operator==(const ClassFunction& rhs) const {
  if (grp_.poset() != rhs.grp_.poset() || !grp_.field()->same(*rhs.grp_.field()))
    throw value_error("class functions live on different groups");
  return vals_ == rhs.vals_;
}

CycNumber inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group().poset() != b.group().poset() || !a.group().field()->same(*b.group().field()))
    throw value_error("inner product across different groups");
  std::int64_t p = a.group().field()->p();
  CycNumber acc = CycNumber::zero(p);
  std::size_t n = static_cast<std::size_t>(a.group().order());
  for (std::size_t i = 0; i < n; ++i) acc = acc + a.value_at(i) * b.value_at(i).conj();
  return acc.div_rational(Rational(a.group().order()));
}

ClassFunction ind_res_character(const PatternGroup& grp, const ArcDiagram& eta,
                                const Int& limit) {
  ClassFunction out(grp, limit);
  Functional lambda = grp.class_functional(eta);
  Int degree = grp.subgroup_index(eta);
  Rational deg(degree);
  grp.for_each(limit, [&](const GroupElement& g) {
    if (!grp.in_subgroup(eta, g)) return;  // value stays zero
    out.set_value(g, theta(lambda.evaluate(g.f())).scaled(deg));
  });
  return out;
}

std::vector<std::pair<ArcDiagram, ClassFunction>> big_fiber_characters(const PatternGroup& grp,
                                                                       const Int& limit) {
  std::map<ArcDiagram, ClassFunction> fibers;
  grp.for_each_functional(limit, [&](const Functional& mu) {
    ArcDiagram d = big_of(mu);
    auto it = fibers.find(d);
    if (it == fibers.end()) it = fibers.emplace(d, ClassFunction(grp, limit)).first;
    ClassFunction& cf = it->second;
    std::size_t index = 0;
    grp.for_each(limit, [&](const GroupElement& g) {
      cf.set_value_at(index, cf.value_at(index) + theta(mu.evaluate(g.f())));
      ++index;
    });
  });
  std::vector<std::pair<ArcDiagram, ClassFunction>> out;
  for (auto& [d, cf] : fibers) out.emplace_back(d, cf);
  return out;
}

ClassFunction dual_orbit_character(const PatternGroup& grp, const Functional& lambda,
                                   const Int& limit) {
  ClassFunction out(grp, limit);
  auto orbit = grp.dual_orbit(lambda, limit);
  std::size_t index = 0;
  grp.for_each(limit, [&](const GroupElement& g) {
    CycNumber acc = CycNumber::zero(grp.field()->p());
    for (const auto& mu : orbit) acc = acc + theta(mu.evaluate(g.f()));
    out.set_value_at(index, acc);
    ++index;
  });
  return out;
}

Int supercharacter_degree(const PatternGroup& grp, const ArcDiagram& eta) {
  return grp.subgroup_index(eta);
}

CycNumber supercharacter_value(const PatternGroup& grp, const ArcDiagram& eta,
                               const ArcDiagram& nu) {
  const Poset& poset = grp.poset();
  std::int64_t p = grp.field()->p();
  // Vanishes when some arc of nu sits weakly inside an arc of eta without
  // being the same position.
  for (const auto& ea : eta.arcs()) {
    int i = poset.index_of(ea.from);
    int j = poset.index_of(ea.to);
    for (const auto& na : nu.arcs()) {
      int k = poset.index_of(na.from);
      int l = poset.index_of(na.to);
      if (i == k && j == l) continue;
      if (poset.less_eq(i, k) && poset.less_eq(l, j)) return CycNumber::zero(p);
    }
  }
  CycNumber acc = CycNumber::one(p);
  for (const auto& ea : eta.arcs()) {
    int i = poset.index_of(ea.from);
    int j = poset.index_of(ea.to);
    const FieldElement* nb = nu.label_at(i, j);
    if (nb != nullptr) acc = acc * theta(ea.label * *nb);
  }
  return acc.scaled(Rational(supercharacter_degree(grp, eta)));
}

Int algebra_degree(const PatternGroup& grp, const ArcDiagram& eta) {
  if (!grp.poset().is_linear()) throw value_error("algebra theory requires a linear order");
  const Poset& poset = grp.poset();
  std::int64_t gaps = 0;
  for (const auto& arc : eta.arcs())
    gaps += poset.index_of(arc.to) - poset.index_of(arc.from) - 1;
  std::int64_t exponent = 2 * gaps - eta.crossing_count();
  if (exponent < 0) throw check_error("negative exponent in algebra degree");
  return int_pow(grp.field()->q(), static_cast<std::uint64_t>(exponent));
}

CycNumber algebra_value(const PatternGroup& grp, const ArcDiagram& eta, const ArcDiagram& nu) {
  if (!grp.poset().is_linear()) throw value_error("algebra theory requires a linear order");
  const Poset& poset = grp.poset();
  std::int64_t p = grp.field()->p();
  // Vanishes when nu has an arc from i or into j strictly inside some arc
  // (i, j) of eta.
  for (const auto& ea : eta.arcs()) {
    int i = poset.index_of(ea.from);
    int j = poset.index_of(ea.to);
    for (const auto& na : nu.arcs()) {
      int k = poset.index_of(na.from);
      int l = poset.index_of(na.to);
      if (k == i && i < l && l < j) return CycNumber::zero(p);
      if (l == j && i < k && k < j) return CycNumber::zero(p);
    }
  }
  std::int64_t gaps = 0;
  for (const auto& arc : eta.arcs())
    gaps += poset.index_of(arc.to) - poset.index_of(arc.from) - 1;
  std::int64_t exponent =
      2 * gaps - eta.crossing_count() - ArcDiagram::nesting_count(nu, eta);
  Rational coeff = exponent >= 0
                       ? Rational(int_pow(grp.field()->q(), static_cast<std::uint64_t>(exponent)))
                       : Rational(1, int_pow(grp.field()->q(), static_cast<std::uint64_t>(-exponent)));
  CycNumber acc = CycNumber::one(p);
  for (const auto& ea : eta.arcs()) {
    int i = poset.index_of(ea.from);
    int j = poset.index_of(ea.to);
    const FieldElement* nb = nu.label_at(i, j);
    if (nb != nullptr) acc = acc * theta(ea.label * *nb);
  }
  return acc.scaled(coeff);
}

CharacterTable build_table(const PatternGroup& grp, Theory theory, const Int& limit) {
  CharacterTable table{theory, grp, {}, {}, {}, {}, {}};
  if (theory == Theory::nonnesting) {
    table.diagrams = enumerate_nonnesting(grp.poset(), grp.field(), limit);
    for (const auto& d : table.diagrams) {
      table.reps.push_back(grp.class_representative(d));
      table.class_sizes.push_back(grp.class_size(d));
      table.degrees.push_back(supercharacter_degree(grp, d));
    }
    for (const auto& eta : table.diagrams) {
      std::vector<CycNumber> row;
      row.reserve(table.diagrams.size());
      for (const auto& nu : table.diagrams) row.push_back(supercharacter_value(grp, eta, nu));
      table.values.push_back(std::move(row));
    }
  } else {
    if (!grp.poset().is_linear()) throw value_error("algebra theory requires a linear order");
    table.diagrams = enumerate_partitions(grp.poset(), grp.field(), limit);
    for (const auto& d : table.diagrams) {
      GroupElement rep = grp.class_representative(d);
      table.class_sizes.push_back(Int(grp.two_sided_orbit(rep.f(), limit).size()));
      table.reps.push_back(std::move(rep));
      table.degrees.push_back(algebra_degree(grp, d));
    }
    for (const auto& eta : table.diagrams) {
      std::vector<CycNumber> row;
      row.reserve(table.diagrams.size());
      for (const auto& nu : table.diagrams) row.push_back(algebra_value(grp, eta, nu));
      table.values.push_back(std::move(row));
    }
  }
  return table;
}

ClassFunction coarsened_character(const PatternGroup& grp, const ArcDiagram& eta,
                                  const Int& limit) {
  ClassFunction out(grp, limit);
  for (const auto& nu : enumerate_partitions(grp.poset(), grp.field(), limit)) {
    if (nu.big() != eta) continue;
    out = out + dual_orbit_character(grp, grp.class_functional(nu), limit);
  }
  return out;
}

std::vector<GroupElement> coarsened_class(const PatternGroup& grp, const ArcDiagram& eta,
                                          const Int& limit) {
  std::set<std::string> keys;
  std::vector<GroupElement> out;
  for (const auto& nu : enumerate_partitions(grp.poset(), grp.field(), limit)) {
    if (nu.sml() != eta) continue;
    GroupElement rep = grp.class_representative(nu);
    for (const auto& x : grp.two_sided_orbit(rep.f(), limit)) {
      GroupElement g(x);
      if (keys.insert(g.key()).second) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SctReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SctReport verify_sct(const PatternGroup& grp, const Int& limit) {
  SctReport report;
  report.group_order = grp.order();
  grp.check_limit(limit);

  CharacterTable table = build_table(grp, Theory::nonnesting, limit);
  std::size_t m = table.diagrams.size();
  report.class_count = static_cast<int>(m);
  std::map<ArcDiagram, std::size_t> row_of;
  for (std::size_t r = 0; r < m; ++r) row_of.emplace(table.diagrams[r], r);

  // Class membership of every element, via sml and via the closed-form
  // description; the two must agree and the sizes must add up.
  {
    CheckResult check{"superclasses-partition", true, ""};
    std::vector<Int> counted(m, Int(0));
    grp.for_each(limit, [&](const GroupElement& g) {
      if (!check.pass) return;
      ArcDiagram d = sml_of(g);
      auto it = row_of.find(d);
      if (it == row_of.end()) {
        check.pass = false;
        check.witness = "sml(" + g.to_string() + ") = " + d.to_string() + " is not nonnesting";
        return;
      }
      counted[it->second] += 1;
      for (std::size_t r = 0; r < m; ++r) {
        bool inside = grp.class_contains(table.diagrams[r], g);
        if (inside != (r == it->second)) {
          check.pass = false;
          check.witness = "membership of " + g.to_string() + " disagrees for class " +
                          table.diagrams[r].to_string();
          return;
        }
      }
    });
    if (check.pass) {
      Int total = 0;
      for (std::size_t r = 0; r < m; ++r) {
        if (counted[r] != table.class_sizes[r]) {
          check.pass = false;
          check.witness = "class " + table.diagrams[r].to_string() + " has " + counted[r].str() +
                          " members, closed form says " + table.class_sizes[r].str();
          break;
        }
        if (counted[r] == 0) {
          check.pass = false;
          check.witness = "class " + table.diagrams[r].to_string() + " is empty";
          break;
        }
        total += counted[r];
      }
      if (check.pass && total != grp.order()) {
        check.pass = false;
        check.witness = "classes cover " + total.str() + " of " + grp.order().str() + " elements";
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Superclasses are unions of conjugacy classes.
  {
    CheckResult check{"unions-of-conjugacy-classes", true, ""};
    grp.for_each(limit, [&](const GroupElement& h) {
      if (!check.pass) return;
      GroupElement hinv = h.inverse();
      grp.for_each(limit, [&](const GroupElement& g) {
        if (!check.pass) return;
        if (sml_of(h * g * hinv) != sml_of(g)) {
          check.pass = false;
          check.witness = "conjugating " + g.to_string() + " by " + h.to_string() +
                          " changes the superclass";
        }
      });
    });
    report.checks.push_back(std::move(check));
  }

  // As many supercharacters as superclasses, all distinct.
  {
    CheckResult check{"counts-match", true, ""};
    for (std::size_t a = 0; a < m && check.pass; ++a)
      for (std::size_t b = a + 1; b < m && check.pass; ++b)
        if (table.values[a] == table.values[b]) {
          check.pass = false;
          check.witness = "characters of " + table.diagrams[a].to_string() + " and " +
                          table.diagrams[b].to_string() + " coincide";
        }
    report.checks.push_back(std::move(check));
  }

  // Closed-form values match the induced characters pointwise (this includes
  // constancy on superclasses) and the big-fiber oracle sums.
  {
    CheckResult check{"values-match-oracles", true, ""};
    std::vector<ClassFunction> induced;
    induced.reserve(m);
    for (std::size_t r = 0; r < m; ++r)
      induced.push_back(ind_res_character(grp, table.diagrams[r], limit));
    grp.for_each(limit, [&](const GroupElement& g) {
      if (!check.pass) return;
      std::size_t cls = row_of.at(sml_of(g));
      for (std::size_t r = 0; r < m; ++r) {
        if (induced[r].value(g) != table.values[r][cls]) {
          check.pass = false;
          check.witness = "character of " + table.diagrams[r].to_string() + " at " +
                          g.to_string() + " is " + induced[r].value(g).to_string() +
                          ", closed form says " + table.values[r][cls].to_string();
          return;
        }
      }
    });
    if (check.pass) {
      auto fibers = big_fiber_characters(grp, limit);
      if (fibers.size() != m) {
        check.pass = false;
        check.witness = "big-fiber sums produce " + std::to_string(fibers.size()) +
                        " characters for " + std::to_string(m) + " diagrams";
      }
      for (auto& [d, cf] : fibers) {
        if (!check.pass) break;
        auto it = row_of.find(d);
        if (it == row_of.end()) {
          check.pass = false;
          check.witness = "big fiber of " + d.to_string() + " is not a nonnesting diagram";
          break;
        }
        if (cf != induced[it->second]) {
          check.pass = false;
          check.witness = "big-fiber sum of " + d.to_string() + " differs from the induced character";
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  // Distinct supercharacters are orthogonal; norms are positive rationals.
  {
    CheckResult check{"orthogonality", true, ""};
    std::int64_t p = grp.field()->p();
    for (std::size_t a = 0; a < m && check.pass; ++a)
      for (std::size_t b = a; b < m && check.pass; ++b) {
        CycNumber acc = CycNumber::zero(p);
        for (std::size_t c = 0; c < m; ++c)
          acc = acc + (table.values[a][c] * table.values[b][c].conj())
                          .scaled(Rational(table.class_sizes[c]));
        CycNumber ip = acc.div_rational(Rational(grp.order()));
        if (a == b) {
          if (!ip.is_rational() || ip.rational_value() <= 0) {
            check.pass = false;
            check.witness = "norm of " + table.diagrams[a].to_string() + " is " + ip.to_string();
          }
        } else if (!ip.is_zero()) {
          check.pass = false;
          check.witness = "characters of " + table.diagrams[a].to_string() + " and " +
                          table.diagrams[b].to_string() + " have inner product " + ip.to_string();
        }
      }
    report.checks.push_back(std::move(check));
  }

  // The characters sum to the regular character.
  {
    CheckResult check{"regular-sum", true, ""};
    std::int64_t p = grp.field()->p();
    GroupElement one = grp.identity();
    grp.for_each(limit, [&](const GroupElement& g) {
      if (!check.pass) return;
      std::size_t cls = row_of.at(sml_of(g));
      CycNumber acc = CycNumber::zero(p);
      for (std::size_t r = 0; r < m; ++r) acc = acc + table.values[r][cls];
      CycNumber expect =
          g == one ? CycNumber::from_rational(p, Rational(grp.order())) : CycNumber::zero(p);
      if (acc != expect) {
        check.pass = false;
        check.witness = "character sum at " + g.to_string() + " is " + acc.to_string();
      }
    });
    report.checks.push_back(std::move(check));
  }

  return report;
}

}  // namespace nnscf
