#pragma once

#include "nnscf/cyclotomic.hpp"
#include "nnscf/pattern_group.hpp"

#include <string>
#include <vector>

namespace nnscf {

// zeta_p raised to the absolute trace; the standard nontrivial additive
// character of the field composed with any field value.
CycNumber theta(const FieldElement& x);

// Exact complex-valued function on all of U_P, stored densely in group
// enumeration order. Construction materializes the value table, so the group
// order must pass the limit.
class ClassFunction {
 public:
  ClassFunction(PatternGroup grp, const Int& limit);

  const PatternGroup& group() const { return grp_; }
  const CycNumber& value(const GroupElement& g) const;
  const CycNumber& value_at(std::size_t index) const { return vals_.at(index); }
  void set_value(const GroupElement& g, const CycNumber& v);
  void add_value(const GroupElement& g, const CycNumber& v);
  void set_value_at(std::size_t index, const CycNumber& v);

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction scaled(const Rational& r) const;
  bool operator==(const ClassFunction& rhs) const;
  bool operator!=(const ClassFunction& rhs) const { return !(*this == rhs); }

 private:
  PatternGroup grp_;
  std::vector<CycNumber> vals_;
};

// <a, b> = (1/|G|) sum_g a(g) conj(b(g)), exact.
CycNumber inner_product(const ClassFunction& a, const ClassFunction& b);

// Induced-restricted supercharacter: |U_P : U_eta| theta(lambda_eta(g - 1)) on
// the subgroup attached to eta, zero elsewhere.
ClassFunction ind_res_character(const PatternGroup& grp, const ArcDiagram& eta, const Int& limit);

// Independent oracle: sum of theta after mu after (g -> g-1) over all
// functionals mu in the fiber of the given diagram under big_of, one
// ClassFunction per occurring diagram.
std::vector<std::pair<ArcDiagram, ClassFunction>> big_fiber_characters(const PatternGroup& grp,
                                                                       const Int& limit);

// Orbit-sum oracle: sum of theta after mu after (g -> g-1) over the two-sided
// dual orbit of lambda.
ClassFunction dual_orbit_character(const PatternGroup& grp, const Functional& lambda,
                                   const Int& limit);

Int supercharacter_degree(const PatternGroup& grp, const ArcDiagram& eta);
// Closed-form value of the supercharacter of eta on the superclass of nu.
CycNumber supercharacter_value(const PatternGroup& grp, const ArcDiagram& eta,
                               const ArcDiagram& nu);

// Linear-order theory indexed by all set partitions, nesting allowed.
Int algebra_degree(const PatternGroup& grp, const ArcDiagram& eta);
CycNumber algebra_value(const PatternGroup& grp, const ArcDiagram& eta, const ArcDiagram& nu);

enum class Theory { nonnesting, algebra };

struct CharacterTable {
  Theory theory;
  PatternGroup group;
  std::vector<ArcDiagram> diagrams;  // row and column index set
  std::vector<GroupElement> reps;
  std::vector<Int> class_sizes;
  std::vector<Int> degrees;
  std::vector<std::vector<CycNumber>> values;  // [character][class]
};

// Closed-form table; the algebra theory requires a linear poset and computes
// class sizes as dual orbit sizes.
CharacterTable build_table(const PatternGroup& grp, Theory theory, const Int& limit);

// Coarsened character: sum of dual-orbit sums over all set partitions whose
// big part is eta. Linear posets only.
ClassFunction coarsened_character(const PatternGroup& grp, const ArcDiagram& eta,
                                  const Int& limit);
// Coarsened class: union of algebra classes (preimages of two-sided orbits)
// over all set partitions whose sml part is eta. Sorted, deduplicated.
std::vector<GroupElement> coarsened_class(const PatternGroup& grp, const ArcDiagram& eta,
                                          const Int& limit);

struct CheckResult {
  std::string name;
  bool pass;
  std::string witness;  // empty when passing
};

struct SctReport {
  Int group_order;
  int class_count = 0;
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Exact verification that the nonnesting diagrams index a supercharacter
// theory of U_P: superclasses partition the group into unions of conjugacy
// classes, characters are constant on superclasses and match both oracles,
// distinct characters are orthogonal, and everything sums to the regular
// character.
SctReport verify_sct(const PatternGroup& grp, const Int& limit);

}  // namespace nnscf
