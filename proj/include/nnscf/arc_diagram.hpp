#pragma once

#include "nnscf/field.hpp"
#include "nnscf/poset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nnscf {

struct Arc {
  std::string from;
  std::string to;
  FieldElement label;  // nonzero
};

// A field-labeled set-partition diagram on a poset: arcs join strictly
// comparable elements, carry nonzero labels, each ordered pair holds at most
// one arc, and no arc (i,j) coexists with (i,k) or (k,j) for any i < k < j.
// Nonnesting is a property, not an invariant of the type.
class ArcDiagram {
 public:
  ArcDiagram(Poset poset, FieldPtr field, std::vector<Arc> arcs);
  static ArcDiagram empty(Poset poset, FieldPtr field);

  const Poset& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // canonically sorted
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  // Lookup by canonical positions; nullptr when absent.
  const FieldElement* label_at(int i, int j) const;

  bool is_nonnesting() const;
  ArcDiagram sml() const;  // drop arcs strictly containing another arc
  ArcDiagram big() const;  // drop arcs strictly inside another arc
  ArcDiagram restrict(const std::vector<std::string>& subset) const;
  // Both diagrams must live on restrictions of the ambient poset to disjoint
  // element sets; arcs are combined on the ambient poset.
  static ArcDiagram disjoint_union(const ArcDiagram& a, const ArcDiagram& b,
                                   const Poset& ambient);
  ArcDiagram relabeled(const Poset& image_poset,
                       const std::map<std::string, std::string>& bijection) const;

  // Linear-order statistics; value_error unless the poset is linear.
  // Crossings are arc pairs (i,k),(j,l) with positions i < j < k < l.
  std::vector<std::pair<std::pair<std::string, std::string>,
                        std::pair<std::string, std::string>>> crossing_set() const;
  int crossing_count() const;
  // Number of position quadruples i < j < k < l with j~k in inner, i~l in outer.
  static int nesting_count(const ArcDiagram& inner, const ArcDiagram& outer);

  bool subset_of(const ArcDiagram& other) const;  // arcs with labels contained
  bool operator==(const ArcDiagram& rhs) const;
  bool operator!=(const ArcDiagram& rhs) const { return !(*this == rhs); }
  bool operator<(const ArcDiagram& rhs) const;  // lexicographic on sorted arc keys

  std::string to_string() const;  // "{}" or "{1~3:1, 3~7:[0,1]}"

 private:
  Poset poset_;
  FieldPtr field_;
  std::vector<Arc> arcs_;
};

// All set-partition diagrams on the poset, lexicographically ordered by their
// sorted arc lists; limit_error if more than limit would be produced.
std::vector<ArcDiagram> enumerate_partitions(const Poset& poset, const FieldPtr& field,
                                             const Int& limit);
std::vector<ArcDiagram> enumerate_nonnesting(const Poset& poset, const FieldPtr& field,
                                             const Int& limit);

// Nonnesting diagrams on the restriction to S that contain eta restricted to S
// and whose extra arcs sit inside some arc of eta (weakly at both ends).
std::vector<ArcDiagram> proj_diagrams(const ArcDiagram& eta, const std::vector<std::string>& S,
                                      const Int& limit);

// A diagram is atomic when no poset split (S, T) separates it into two halves
// with no arcs in between.
bool is_atomic(const ArcDiagram& diagram);
// Finest factorization into atomic pieces along compatible splits, left to right.
std::vector<ArcDiagram> atomic_factors(const ArcDiagram& diagram);

}  // namespace nnscf
