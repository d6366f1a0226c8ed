#include "nnscf/field.hpp"

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

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Polynomials over GF(p) as coefficient vectors, constant term first, no
// trailing zeros past the stated degree handling done by callers.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& m, std::int64_t p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= dm; --k) {
    std::int64_t c = mod(a[k], p);
    if (c == 0) continue;
    // m is monic, so subtract c * x^{k-dm} * m.
    for (int j = 0; j <= dm; ++j) a[k - dm + j] = mod(a[k - dm + j] - c * m[j], p);
  }
  a.resize(dm);
  return a;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  }
  return out;
}

int poly_degree(const std::vector<std::int64_t>& a) {
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
    if (a[k] != 0) return k;
  return -1;
}

// Remainder of a modulo monic m.
std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                   const std::vector<std::int64_t>& m, std::int64_t p) {
  int dm = poly_degree(m);
  for (int k = poly_degree(a); k >= dm; k = poly_degree(a)) {
    std::int64_t c = a[k];
    for (int j = 0; j <= dm; ++j) a[k - dm + j] = mod(a[k - dm + j] - c * m[j], p);
  }
  return a;
}

std::string int_list_to_string(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

Field::Field(std::int64_t p, int e, std::vector<std::int64_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < e_; ++i) {
    if (q_ > (std::int64_t{1} << 40) / p_)
      throw value_error("field too large: p=" + std::to_string(p_) + " e=" + std::to_string(e_));
    q_ *= p_;
  }
}

std::shared_ptr<const Field> Field::make(std::int64_t p, int e,
                                         std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) throw value_error("characteristic must be prime, got " + std::to_string(p));
  if (e < 1) throw value_error("extension degree must be positive, got " + std::to_string(e));
  if (e == 1) {
    if (!modulus.empty())
      throw value_error("modulus is only meaningful for extension degree > 1");
  } else {
    if (static_cast<int>(modulus.size()) != e + 1)
      throw value_error("modulus must list e+1 coefficients, constant term first; got " +
                        int_list_to_string(modulus));
    for (auto& c : modulus) c = mod(c, p);
    if (modulus.back() != 1)
      throw value_error("modulus must be monic: " + int_list_to_string(modulus));
    // Irreducible over GF(p): no monic divisor of degree 1..e/2.
    for (int d = 1; 2 * d <= e; ++d) {
      std::int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> cand(d + 1, 0);
        std::int64_t t = idx;
        for (int i = 0; i < d; ++i) {
          cand[i] = t % p;
          t /= p;
        }
        cand[d] = 1;
        if (poly_degree(poly_rem(modulus, cand, p)) < 0)
          throw value_error("modulus is reducible: " + int_list_to_string(modulus) +
                            " has monic factor " + int_list_to_string(cand));
      }
    }
  }
  return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

FieldElement Field::zero() const {
  return FieldElement(shared_from_this(), std::vector<std::int64_t>(e_, 0));
}

FieldElement Field::one() const {
  std::vector<std::int64_t> c(e_, 0);
  c[0] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::element(std::int64_t index) const {
  if (index < 0 || index >= q_)
    throw value_error("field element index out of range: " + std::to_string(index));
  std::vector<std::int64_t> c(e_, 0);
  for (int i = e_ - 1; i >= 0; --i) {
    c[i] = index % p_;
    index /= p_;
  }
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::make_element(std::vector<std::int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > e_)
    throw value_error("too many coefficients for extension degree " + std::to_string(e_) +
                      ": " + int_list_to_string(coeffs));
  coeffs.resize(e_, 0);
  for (auto& c : coeffs) c = mod(c, p_);
  return FieldElement(shared_from_this(), std::move(coeffs));
}

bool Field::same(const Field& other) const {
  return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

FieldElement::FieldElement(FieldPtr field, std::vector<std::int64_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw value_error("field element requires a field");
  if (static_cast<int>(c_.size()) != field_->e())
    throw value_error("field element needs exactly e coefficients");
  for (auto& c : c_) c = mod(c, field_->p());
}

std::int64_t FieldElement::index() const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) idx = idx * field_->p() + c_[i];
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c == 0; });
}

void FieldElement::check_compatible(const FieldElement& rhs) const {
  if (!field_->same(*rhs.field_))
    throw value_error("field mismatch: GF(" + std::to_string(field_->q()) + ") vs GF(" +
                      std::to_string(rhs.field_->q()) + ")");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_compatible(rhs);
  std::vector<std::int64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(c_[i] + rhs.c_[i], field_->p());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_compatible(rhs);
  std::vector<std::int64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(c_[i] - rhs.c_[i], field_->p());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  std::vector<std::int64_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = mod(-c_[i], field_->p());
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_compatible(rhs);
  if (field_->e() == 1)
    return FieldElement(field_, {mod(c_[0] * rhs.c_[0], field_->p())});
  auto prod = poly_mul(c_, rhs.c_, field_->p());
  return FieldElement(field_, poly_mod(std::move(prod), field_->modulus(), field_->p()));
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (k != 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw value_error("zero has no inverse");
  return pow(static_cast<std::uint64_t>(field_->q() - 2));
}

FieldElement FieldElement::frobenius() const {
  return pow(static_cast<std::uint64_t>(field_->p()));
}

std::int64_t FieldElement::trace() const {
  FieldElement acc = *this;
  FieldElement term = *this;
  for (int i = 1; i < field_->e(); ++i) {
    term = term.frobenius();
    acc = acc + term;
  }
  for (std::size_t i = 1; i < acc.c_.size(); ++i)
    if (acc.c_[i] != 0) throw check_error("trace left the prime field");
  return acc.c_[0];
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  check_compatible(rhs);
  return c_ == rhs.c_;
}

bool FieldElement::operator<(const FieldElement& rhs) const {
  check_compatible(rhs);
  return c_ < rhs.c_;
}

std::string FieldElement::to_string() const {
  if (field_->e() == 1) return std::to_string(c_[0]);
  return int_list_to_string(c_);
}

}  // namespace nnscf
