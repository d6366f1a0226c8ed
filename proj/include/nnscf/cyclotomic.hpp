#pragma once

#include "nnscf/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nnscf {

// Exact element of Q(zeta_p), p prime, written in the power basis
// 1, z, ..., z^{p-2}. The relation 1 + z + ... + z^{p-1} = 0 is applied
// eagerly, so equality is coordinate-wise.
class CycNumber {
 public:
  CycNumber(std::int64_t p, std::vector<Rational> coords);  // size p-1

  static CycNumber zero(std::int64_t p);
  static CycNumber one(std::int64_t p);
  static CycNumber from_rational(std::int64_t p, const Rational& r);
  static CycNumber zeta_pow(std::int64_t p, std::int64_t k);  // zeta_p^k, any integer k

  std::int64_t p() const { return p_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // value_error unless is_rational()

  CycNumber operator+(const CycNumber& rhs) const;
  CycNumber operator-(const CycNumber& rhs) const;
  CycNumber operator*(const CycNumber& rhs) const;
  CycNumber operator-() const;
  CycNumber conj() const;  // complex conjugation, z -> z^{p-1}
  CycNumber scaled(const Rational& r) const;
  CycNumber div_rational(const Rational& r) const;  // value_error on zero divisor

  bool operator==(const CycNumber& rhs) const;
  bool operator!=(const CycNumber& rhs) const { return !(*this == rhs); }

  std::string to_string() const;  // "0", "-1/2", "z", "1-2z^2"
  std::string to_latex() const;

 private:
  void check_compatible(const CycNumber& rhs) const;

  std::int64_t p_;
  std::vector<Rational> c_;  // size p-1
};

}  // namespace nnscf
