#pragma once

#include "nnscf/supercharacter.hpp"

#include <map>
#include <string>
#include <vector>

namespace nnscf {

enum class ScfBasis { kappa, powersum, character };

std::string basis_name(ScfBasis basis);           // "kappa", "p", "chi"
ScfBasis basis_from_name(const std::string& name);

// Element of the space of superclass functions on U_P, written in one of the
// three distinguished bases indexed by nonnesting diagrams. Zero coefficients
// are dropped eagerly.
class ScfVector {
 public:
  ScfVector(Poset poset, FieldPtr field, ScfBasis basis);
  static ScfVector basis_element(Poset poset, FieldPtr field, ScfBasis basis,
                                 const ArcDiagram& diagram);

  const Poset& poset() const { return poset_; }
  const FieldPtr& field() const { return field_; }
  ScfBasis basis() const { return basis_; }
  const std::map<ArcDiagram, CycNumber>& coeffs() const { return coeffs_; }
  CycNumber coeff(const ArcDiagram& d) const;
  void add_term(const ArcDiagram& d, const CycNumber& c);
  bool is_zero() const { return coeffs_.empty(); }

  ScfVector operator+(const ScfVector& rhs) const;
  ScfVector operator-(const ScfVector& rhs) const;
  ScfVector scaled(const CycNumber& c) const;

  ScfVector in_basis(ScfBasis target, const Int& limit) const;
  ClassFunction to_class_function(const Int& limit) const;
  static ScfVector from_class_function(const ClassFunction& f, ScfBasis basis, const Int& limit);

  ScfVector relabeled(const Poset& image_poset,
                      const std::map<std::string, std::string>& bijection) const;

  bool operator==(const ScfVector& rhs) const;
  bool operator!=(const ScfVector& rhs) const { return !(*this == rhs); }
  std::string to_string() const;

 private:
  Poset poset_;
  FieldPtr field_;
  ScfBasis basis_;
  std::map<ArcDiagram, CycNumber> coeffs_;
};

// Element of the tensor square attached to an ordered pair of posets.
class TensorElement {
 public:
  TensorElement(Poset left, Poset right, FieldPtr field, ScfBasis basis);

  const Poset& left_poset() const { return left_; }
  const Poset& right_poset() const { return right_; }
  const FieldPtr& field() const { return field_; }
  ScfBasis basis() const { return basis_; }
  const std::map<std::pair<ArcDiagram, ArcDiagram>, CycNumber>& coeffs() const { return coeffs_; }
  void add_term(const ArcDiagram& l, const ArcDiagram& r, const CycNumber& c);
  bool is_zero() const { return coeffs_.empty(); }

  TensorElement operator+(const TensorElement& rhs) const;
  TensorElement operator-(const TensorElement& rhs) const;
  TensorElement scaled(const CycNumber& c) const;
  TensorElement swapped() const;  // exchange tensor legs
  TensorElement in_basis(ScfBasis target, const Int& limit) const;
  // Canonical identification when one leg lives on the empty poset.
  ScfVector collapse_left() const;
  ScfVector collapse_right() const;

  bool operator==(const TensorElement& rhs) const;
  bool operator!=(const TensorElement& rhs) const { return !(*this == rhs); }
  std::string to_string() const;

 private:
  Poset left_;
  Poset right_;
  FieldPtr field_;
  ScfBasis basis_;
  std::map<std::pair<ArcDiagram, ArcDiagram>, CycNumber> coeffs_;
};

// Formal sum of vectors indexed by the poset they live on; products of
// vectors on different ground sets land in single components, but reversed
// products land on different posets, which this type makes comparable.
class SpeciesElement {
 public:
  SpeciesElement() = default;
  explicit SpeciesElement(const ScfVector& v);
  void add_part(const ScfVector& v);
  const std::map<Poset, ScfVector>& parts() const { return parts_; }
  bool operator==(const SpeciesElement& rhs) const;
  bool operator!=(const SpeciesElement& rhs) const { return !(*this == rhs); }
  std::string to_string() const;

 private:
  std::map<Poset, ScfVector> parts_;
};

// Product on the concatenated poset, by the closed per-basis formulas.
ScfVector hopf_product(const ScfVector& a, const ScfVector& b, const Int& limit);
// Product through the functional route: pull values back along the component
// projection of the concatenated group, then re-express in the input basis.
ScfVector hopf_product_functional(const ScfVector& a, const ScfVector& b, const Int& limit);

// Coproduct along the splitting of the ground set into S and its complement,
// by the closed per-basis formulas; the powersum basis has no closed formula
// and reports value_error.
TensorElement hopf_coproduct(const ScfVector& a, const std::vector<std::string>& S,
                             const Int& limit);
// Coproduct through the functional route: pull values back along the zero-fill
// embedding, then re-express in the input basis.
TensorElement hopf_coproduct_functional(const ScfVector& a, const std::vector<std::string>& S,
                                        const Int& limit);

// All posets on the given labels, by increasing relation bitmask.
std::vector<Poset> all_posets(const std::vector<std::string>& labels, const Int& limit);

struct HopfReport {
  std::vector<CheckResult> checks;
  std::string noncommutative_witness;  // must be nonempty for ground sets of size >= 2
  bool pass() const;
};

// Exhaustive exact check of the Hopf axioms on ground set {"1",...,"n"}:
// associativity, coassociativity, unit and counit identifications,
// compatibility, cocommutativity, naturality under relabeling, and a search
// certifying that the product is not commutative.
HopfReport verify_hopf(int n, const FieldPtr& field, const Int& limit);

struct FreeReport {
  std::vector<CheckResult> checks;
  std::vector<Int> linear_atomic_counts;  // a(1), ..., a(n)
  std::vector<Int> linear_dims;           // dim on the increasing chain, per n
  bool pass() const;
};

// Dimension identities and unique-factorization audit behind freeness, for
// ground sets up to n: per fixed linear order against compositions, and over
// all posets against ordered set partitions.
FreeReport verify_free(int n, const FieldPtr& field, const Int& limit);

}  // namespace nnscf
