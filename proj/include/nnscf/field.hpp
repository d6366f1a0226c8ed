#pragma once

#include "nnscf/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nnscf {

class FieldElement;

// GF(p^e) in the polynomial basis 1, x, ..., x^{e-1} modulo a monic
// irreducible modulus whose coefficients are listed constant term first.
// e == 1 stores no modulus. Elements are indexed by the lexicographic rank
// of their coefficient tuple (c0, c1, ..., c_{e-1}).
class Field : public std::enable_shared_from_this<Field> {
 public:
  static std::shared_ptr<const Field> make(std::int64_t p, int e = 1,
                                           std::vector<std::int64_t> modulus = {});

  std::int64_t p() const { return p_; }
  int e() const { return e_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::int64_t index) const;                  // index in [0, q)
  FieldElement make_element(std::vector<std::int64_t> coeffs) const;  // reduced mod p

  bool same(const Field& other) const;

 private:
  Field(std::int64_t p, int e, std::vector<std::int64_t> modulus);

  std::int64_t p_;
  int e_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;  // size e+1 when e > 1, else empty
};

using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t index() const;  // lexicographic rank of the coefficient tuple
  bool is_zero() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;  // value_error on zero
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius() const;  // x^p
  std::int64_t trace() const;      // absolute trace, a prime-field value in [0, p)

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }
  bool operator<(const FieldElement& rhs) const;

  std::string to_string() const;  // "1" for e == 1, "[c0,c1]" otherwise

 private:
  void check_compatible(const FieldElement& rhs) const;

  FieldPtr field_;
  std::vector<std::int64_t> c_;  // size e, entries in [0, p)
};

}  // namespace nnscf
