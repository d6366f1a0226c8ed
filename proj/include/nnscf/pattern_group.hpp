#pragma once

#include "nnscf/arc_diagram.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace nnscf {

// Sparse strictly-upper matrix supported on strict order pairs of the poset,
// keyed by canonical positions; absent entries are zero.
class AlgebraElement {
 public:
  AlgebraElement(Poset poset, FieldPtr field);

  const Poset& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  const std::map<std::pair<int, int>, FieldElement>& entries() const { return a_; }
  FieldElement entry(int i, int j) const;  // zero when absent
  void set_entry(int i, int j, const FieldElement& v);  // value_error off the strict order
  bool is_zero() const { return a_.empty(); }

  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement scaled(const FieldElement& c) const;
  static AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);

  bool operator==(const AlgebraElement& rhs) const;
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }
  bool operator<(const AlgebraElement& rhs) const;
  std::string key() const;  // canonical serialization of the support
  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& rhs) const;

  Poset poset_;
  FieldPtr field_;
  std::map<std::pair<int, int>, FieldElement> a_;
};

// Group element 1 + x with x strictly upper; the unit diagonal is implicit.
class GroupElement {
 public:
  explicit GroupElement(AlgebraElement x) : x_(std::move(x)) {}
  static GroupElement identity(Poset poset, FieldPtr field);

  const Poset& poset() const { return x_.poset(); }
  const FieldPtr& field() const { return x_.field(); }
  const AlgebraElement& f() const { return x_; }  // g - 1
  FieldElement entry(int i, int j) const { return x_.entry(i, j); }

  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

  bool operator==(const GroupElement& rhs) const { return x_ == rhs.x_; }
  bool operator!=(const GroupElement& rhs) const { return !(*this == rhs); }
  bool operator<(const GroupElement& rhs) const { return x_ < rhs.x_; }
  std::string key() const { return x_.key(); }
  std::string to_string() const { return "1+" + x_.to_string(); }

 private:
  AlgebraElement x_;
};

// Linear functional on the strictly-upper matrices, stored by its nonzero
// coordinates against the basis of matrix units.
class Functional {
 public:
  Functional(Poset poset, FieldPtr field);
  static Functional from_diagram(const ArcDiagram& eta);  // sum of labels at arc positions

  const Poset& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  const std::map<std::pair<int, int>, FieldElement>& coords() const { return c_; }
  FieldElement coord(int i, int j) const;
  void set_coord(int i, int j, const FieldElement& v);

  FieldElement evaluate(const AlgebraElement& x) const;
  Functional act_left(const GroupElement& g) const;   // x -> value at g^{-1} x
  Functional act_right(const GroupElement& g) const;  // x -> value at x g^{-1}

  bool operator==(const Functional& rhs) const;
  bool operator<(const Functional& rhs) const;
  std::string key() const;

 private:
  Poset poset_;
  FieldPtr field_;
  std::map<std::pair<int, int>, FieldElement> c_;
};

// Arcs at positions whose value survives and whose interval contains no other
// nonzero entry weakly: (i,j) kept iff g_ij != 0 and g_kl = 0 for every other
// (k,l) with i <= k < l <= j in the order.
ArcDiagram sml_of(const GroupElement& g);
// Dual rule: (i,j) kept iff the coordinate is nonzero and every other nonzero
// coordinate (k,l) fails k <= i < j <= l.
ArcDiagram big_of(const Functional& lambda);

// Enumeration context for U_P = 1 + u_P over GF(q): elements are indexed
// lexicographically by their entry tuple over the canonical strict-pair list,
// first pair most significant.
class PatternGroup {
 public:
  PatternGroup(Poset poset, FieldPtr field);

  const Poset& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  const Int& order() const { return order_; }

  GroupElement identity() const;
  GroupElement element_at(Int index) const;
  Int index_of(const GroupElement& g) const;
  Functional functional_at(Int index) const;
  Int index_of(const Functional& lambda) const;

  void check_limit(const Int& limit) const;  // limit_error when order > limit
  void for_each(const Int& limit, const std::function<void(const GroupElement&)>& fn) const;
  void for_each_functional(const Int& limit,
                           const std::function<void(const Functional&)>& fn) const;

  // Superclass data for a nonnesting diagram.
  GroupElement class_representative(const ArcDiagram& nu) const;
  Functional class_functional(const ArcDiagram& nu) const;
  // Positions that are free in the superclass: non-arc pairs whose interval
  // weakly contains some arc.
  std::vector<std::pair<int, int>> class_free_pairs(const ArcDiagram& nu) const;
  Int class_size(const ArcDiagram& nu) const;
  // Both member lists come back sorted; the first builds members directly
  // from the free positions, the second scans the group for the sml fiber.
  std::vector<GroupElement> class_members(const ArcDiagram& nu, const Int& limit) const;
  bool class_contains(const ArcDiagram& nu, const GroupElement& g) const;  // closed form
  std::vector<GroupElement> class_members_brute(const ArcDiagram& nu, const Int& limit) const;

  // Pattern subgroup attached to a diagram: entries vanish at every pair that
  // sits weakly inside some arc other than itself.
  std::vector<std::pair<int, int>> blocked_pairs(const ArcDiagram& eta) const;
  Int subgroup_index(const ArcDiagram& eta) const;  // |U_P : U_eta| = q^{#blocked}
  bool in_subgroup(const ArcDiagram& eta, const GroupElement& g) const;
  std::vector<GroupElement> subgroup_members(const ArcDiagram& eta, const Int& limit) const;

  // Brute-force two-sided orbit closures under all 1 + c e_ij generators.
  std::vector<AlgebraElement> two_sided_orbit(const AlgebraElement& x, const Int& limit) const;
  std::vector<Functional> dual_orbit(const Functional& lambda, const Int& limit) const;

 private:
  Poset poset_;
  FieldPtr field_;
  std::vector<std::pair<int, int>> pairs_;
  Int order_;
};

// Component projection along a split of the poset: g restricted to S and to T.
// Only a homomorphism when the poset equals concat of the two restrictions.
std::pair<GroupElement, GroupElement> project_split(const GroupElement& g,
                                                    const std::vector<std::string>& S,
                                                    const std::vector<std::string>& T);
// Zero-fill embedding U_{P|S} x U_{P|T} -> U_P; a homomorphism for any P.
GroupElement embed_split(const GroupElement& u, const GroupElement& v, const Poset& ambient);

}  // namespace nnscf
