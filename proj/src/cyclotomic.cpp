#include "nnscf/cyclotomic.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>

namespace nnscf {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fold an accumulator over powers 0..p-1 down to the basis 1, z, ..., z^{p-2}
// using z^{p-1} = -(1 + z + ... + z^{p-2}).
std::vector<Rational> reduce_top(std::vector<Rational> acc, std::int64_t p) {
  Rational top = acc[static_cast<std::size_t>(p - 1)];
  acc.resize(static_cast<std::size_t>(p - 1));
  if (top != 0)
    for (auto& c : acc) c -= top;
  return acc;
}

}  // namespace

CycNumber::CycNumber(std::int64_t p, std::vector<Rational> coords)
    : p_(p), c_(std::move(coords)) {
  if (!is_prime(p_)) throw value_error("cyclotomic order must be prime, got " + std::to_string(p_));
  if (c_.size() != static_cast<std::size_t>(p_ - 1))
    throw value_error("cyclotomic number needs p-1 coordinates");
}

CycNumber CycNumber::zero(std::int64_t p) {
  return CycNumber(p, std::vector<Rational>(static_cast<std::size_t>(p - 1), Rational(0)));
}

CycNumber CycNumber::one(std::int64_t p) { return from_rational(p, Rational(1)); }

CycNumber CycNumber::from_rational(std::int64_t p, const Rational& r) {
  std::vector<Rational> c(static_cast<std::size_t>(p - 1), Rational(0));
  c[0] = r;
  return CycNumber(p, std::move(c));
}

CycNumber CycNumber::zeta_pow(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw value_error("cyclotomic order must be prime, got " + std::to_string(p));
  std::int64_t r = k % p;
  if (r < 0) r += p;
  std::vector<Rational> acc(static_cast<std::size_t>(p), Rational(0));
  acc[static_cast<std::size_t>(r)] = 1;
  return CycNumber(p, reduce_top(std::move(acc), p));
}

bool CycNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNumber::rational_value() const {
  if (!is_rational()) throw value_error("cyclotomic number is not rational: " + to_string());
  return c_[0];
}

void CycNumber::check_compatible(const CycNumber& rhs) const {
  if (p_ != rhs.p_)
    throw value_error("prime mismatch: zeta_" + std::to_string(p_) + " vs zeta_" +
                      std::to_string(rhs.p_));
}

CycNumber CycNumber::operator+(const CycNumber& rhs) const {
  check_compatible(rhs);
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] + rhs.c_[i];
  return CycNumber(p_, std::move(out));
}

CycNumber CycNumber::operator-(const CycNumber& rhs) const {
  check_compatible(rhs);
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] - rhs.c_[i];
  return CycNumber(p_, std::move(out));
}

CycNumber CycNumber::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return CycNumber(p_, std::move(out));
}

CycNumber CycNumber::operator*(const CycNumber& rhs) const {
  check_compatible(rhs);
  std::size_t n = c_.size();  // p - 1
  std::vector<Rational> acc(static_cast<std::size_t>(p_), Rational(0));
  std::vector<Rational> wide(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.c_[j] == 0) continue;
      wide[i + j] += c_[i] * rhs.c_[j];
    }
  }
  // Powers p..2p-4 wrap via z^p = 1; the remaining top power z^{p-1} folds.
  for (std::size_t k = 0; k < wide.size(); ++k)
    acc[k % static_cast<std::size_t>(p_)] += wide[k];
  return CycNumber(p_, reduce_top(std::move(acc), p_));
}

CycNumber CycNumber::conj() const {
  std::vector<Rational> acc(static_cast<std::size_t>(p_), Rational(0));
  acc[0] = c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k)
    acc[static_cast<std::size_t>(p_) - k] += c_[k];
  return CycNumber(p_, reduce_top(std::move(acc), p_));
}

CycNumber CycNumber::scaled(const Rational& r) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * r;
  return CycNumber(p_, std::move(out));
}

CycNumber CycNumber::div_rational(const Rational& r) const {
  if (r == 0) throw value_error("division by zero");
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / r;
  return CycNumber(p_, std::move(out));
}

bool CycNumber::operator==(const CycNumber& rhs) const {
  check_compatible(rhs);
  return c_ == rhs.c_;
}

namespace {

std::string format_terms(const std::vector<Rational>& c, const std::string& var,
                         bool caret_braces) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rational a = c[k];
    std::string sign = a < 0 ? "-" : (out.empty() ? "" : "+");
    if (a < 0) a = -a;
    std::string mag = rational_to_string(a);
    std::string term;
    if (k == 0) {
      term = mag;
    } else {
      term = (mag == "1") ? "" : mag;
      term += var;
      if (k > 1) term += caret_braces ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
    }
    out += sign + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string CycNumber::to_string() const { return format_terms(c_, "z", false); }

std::string CycNumber::to_latex() const {
  return format_terms(c_, "\\zeta_{" + std::to_string(p_) + "}", true);
}

}  // namespace nnscf
