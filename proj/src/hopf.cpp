#include "nnscf/hopf.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace nnscf {

std::string basis_name(ScfBasis basis) {
  switch (basis) {
    case ScfBasis::kappa: return "kappa";
    case ScfBasis::powersum: return "p";
    case ScfBasis::character: return "chi";
  }
  throw value_error("unknown basis");
}

ScfBasis basis_from_name(const std::string& name) {
  if (name == "kappa") return ScfBasis::kappa;
  if (name == "p") return ScfBasis::powersum;
  if (name == "chi") return ScfBasis::character;
  throw value_error("unknown basis name: " + name + " (expected kappa, p, or chi)");
}

namespace {

// Complement of S inside the canonical element order, validating S on the way.
std::vector<std::string> complement_labels(const Poset& poset, const std::vector<std::string>& S) {
  std::set<std::string> in;
  for (const auto& s : S) {
    if (!poset.contains(s)) throw value_error("unknown element in split: " + s);
    if (!in.insert(s).second) throw value_error("duplicate element in split: " + s);
  }
  std::vector<std::string> T;
  for (const auto& e : poset.elements())
    if (!in.count(e)) T.push_back(e);
  return T;
}

void add_to(std::map<std::pair<ArcDiagram, ArcDiagram>, CycNumber>& m,
            const std::pair<ArcDiagram, ArcDiagram>& k, const CycNumber& c) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!c.is_zero()) m.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

ScfVector::ScfVector(Poset poset, FieldPtr field, ScfBasis basis)
    : poset_(std::move(poset)), field_(std::move(field)), basis_(basis) {
  if (!field_) throw value_error("null field");
}

ScfVector ScfVector::basis_element(Poset poset, FieldPtr field, ScfBasis basis,
                                   const ArcDiagram& diagram) {
  ScfVector out(std::move(poset), std::move(field), basis);
  out.add_term(diagram, CycNumber::one(out.field_->p()));
  return out;
}

CycNumber ScfVector::coeff(const ArcDiagram& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? CycNumber::zero(field_->p()) : it->second;
}

void ScfVector::add_term(const ArcDiagram& d, const CycNumber& c) {
  if (d.poset() != poset_) throw value_error("diagram poset does not match the vector's poset");
  if (!d.field()->same(*field_)) throw value_error("diagram field does not match the vector's field");
  if (!d.is_nonnesting()) throw value_error("basis diagrams must be nonnesting: " + d.to_string());
  if (c.p() != field_->p()) throw value_error("coefficient lives over the wrong cyclotomic field");
  if (c.is_zero()) return;
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    coeffs_.emplace(d, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

ScfVector ScfVector::operator+(const ScfVector& rhs) const {
  if (poset_ != rhs.poset_ || !field_->same(*rhs.field_) || basis_ != rhs.basis_)
    throw value_error("cannot add vectors on different posets, fields, or bases");
  ScfVector out = *this;
  for (const auto& [d, c] : rhs.coeffs_) out.add_term(d, c);
  return out;
}

ScfVector ScfVector::operator-(const ScfVector& rhs) const {
  if (poset_ != rhs.poset_ || !field_->same(*rhs.field_) || basis_ != rhs.basis_)
    throw value_error("cannot subtract vectors on different posets, fields, or bases");
  ScfVector out = *this;
  for (const auto& [d, c] : rhs.coeffs_) out.add_term(d, -c);
  return out;
}

ScfVector ScfVector::scaled(const CycNumber& c) const {
  ScfVector out(poset_, field_, basis_);
  for (const auto& [d, v] : coeffs_) out.add_term(d, v * c);
  return out;
}

bool ScfVector::operator==(const ScfVector& rhs) const {
  if (poset_ != rhs.poset_ || basis_ != rhs.basis_) return false;
  if (!field_->same(*rhs.field_)) return false;
  return coeffs_ == rhs.coeffs_;
}

ScfVector ScfVector::in_basis(ScfBasis target, const Int& limit) const {
  // Pivot through the superclass indicator basis.
  ScfVector k(poset_, field_, ScfBasis::kappa);
  switch (basis_) {
    case ScfBasis::kappa:
      for (const auto& [d, c] : coeffs_) k.add_term(d, c);
      break;
    case ScfBasis::powersum: {
      auto nn = enumerate_nonnesting(poset_, field_, limit);
      for (const auto& [eta, c] : coeffs_)
        for (const auto& nu : nn)
          if (eta.subset_of(nu)) k.add_term(nu, c);
      break;
    }
    case ScfBasis::character: {
      PatternGroup grp(poset_, field_);
      auto nn = enumerate_nonnesting(poset_, field_, limit);
      for (const auto& [eta, c] : coeffs_)
        for (const auto& nu : nn)
          k.add_term(nu, c * supercharacter_value(grp, eta, nu));
      break;
    }
  }
  if (target == ScfBasis::kappa) return k;

  if (target == ScfBasis::powersum) {
    // Solve sum over sub-diagrams nu of rho of x_nu == k_rho, by arc count.
    auto nn = enumerate_nonnesting(poset_, field_, limit);
    std::stable_sort(nn.begin(), nn.end(), [](const ArcDiagram& a, const ArcDiagram& b) {
      return a.arc_count() < b.arc_count();
    });
    ScfVector out(poset_, field_, ScfBasis::powersum);
    std::vector<std::pair<ArcDiagram, CycNumber>> solved;
    for (const auto& rho : nn) {
      CycNumber s = k.coeff(rho);
      for (const auto& [nu, x] : solved)
        if (nu.subset_of(rho)) s = s - x;
      if (!s.is_zero()) {
        solved.emplace_back(rho, s);
        out.add_term(rho, s);
      }
    }
    return out;
  }

  // Character basis: exact projection using the closed-form table.
  PatternGroup grp(poset_, field_);
  auto nn = enumerate_nonnesting(poset_, field_, limit);
  std::vector<Rational> sizes;
  sizes.reserve(nn.size());
  for (const auto& nu : nn) sizes.push_back(Rational(grp.class_size(nu)));
  ScfVector out(poset_, field_, ScfBasis::character);
  const std::int64_t p = field_->p();
  for (const auto& eta : nn) {
    CycNumber num = CycNumber::zero(p);
    CycNumber den = CycNumber::zero(p);
    for (std::size_t i = 0; i < nn.size(); ++i) {
      CycNumber chi = supercharacter_value(grp, eta, nn[i]);
      den = den + (chi * chi.conj()).scaled(sizes[i]);
      auto it = k.coeffs().find(nn[i]);
      if (it != k.coeffs().end()) num = num + (it->second * chi.conj()).scaled(sizes[i]);
    }
    if (!den.is_rational())
      throw check_error("character norm is not rational for " + eta.to_string());
    out.add_term(eta, num.div_rational(den.rational_value()));
  }
  return out;
}

ClassFunction ScfVector::to_class_function(const Int& limit) const {
  ScfVector k = in_basis(ScfBasis::kappa, limit);
  PatternGroup grp(poset_, field_);
  ClassFunction out(grp, limit);
  grp.for_each(limit, [&](const GroupElement& g) {
    auto it = k.coeffs().find(sml_of(g));
    if (it != k.coeffs().end()) out.set_value(g, it->second);
  });
  return out;
}

ScfVector ScfVector::from_class_function(const ClassFunction& f, ScfBasis basis,
                                         const Int& limit) {
  const PatternGroup& grp = f.group();
  auto nn = enumerate_nonnesting(grp.poset(), grp.field(), limit);
  ScfVector out(grp.poset(), grp.field(), ScfBasis::kappa);
  std::map<ArcDiagram, CycNumber> byclass;
  for (const auto& nu : nn) {
    CycNumber v = f.value(grp.class_representative(nu));
    byclass.emplace(nu, v);
    out.add_term(nu, v);
  }
  grp.for_each(limit, [&](const GroupElement& g) {
    ArcDiagram d = sml_of(g);
    if (f.value(g) != byclass.at(d))
      throw check_error("function is not constant on the superclass of " + d.to_string() +
                        ": differs at " + g.to_string());
  });
  return out.in_basis(basis, limit);
}

ScfVector ScfVector::relabeled(const Poset& image_poset,
                               const std::map<std::string, std::string>& bijection) const {
  if (poset_.relabeled(bijection) != image_poset)
    throw value_error("relabeling does not carry the poset onto the image poset");
  ScfVector out(image_poset, field_, basis_);
  for (const auto& [d, c] : coeffs_) out.add_term(d.relabeled(image_poset, bijection), c);
  return out;
}

std::string ScfVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << basis_name(basis_) << d.to_string();
  }
  return os.str();
}

TensorElement::TensorElement(Poset left, Poset right, FieldPtr field, ScfBasis basis)
    : left_(std::move(left)), right_(std::move(right)), field_(std::move(field)), basis_(basis) {
  if (!field_) throw value_error("null field");
}

void TensorElement::add_term(const ArcDiagram& l, const ArcDiagram& r, const CycNumber& c) {
  if (l.poset() != left_ || r.poset() != right_)
    throw value_error("tensor term does not match the leg posets");
  if (!l.field()->same(*field_) || !r.field()->same(*field_))
    throw value_error("tensor term field mismatch");
  if (!l.is_nonnesting() || !r.is_nonnesting())
    throw value_error("tensor basis diagrams must be nonnesting");
  if (c.p() != field_->p()) throw value_error("coefficient lives over the wrong cyclotomic field");
  add_to(coeffs_, {l, r}, c);
}

TensorElement TensorElement::operator+(const TensorElement& rhs) const {
  if (left_ != rhs.left_ || right_ != rhs.right_ || basis_ != rhs.basis_ ||
      !field_->same(*rhs.field_))
    throw value_error("cannot add tensors on different legs, fields, or bases");
  TensorElement out = *this;
  for (const auto& [k, c] : rhs.coeffs_) add_to(out.coeffs_, k, c);
  return out;
}

TensorElement TensorElement::operator-(const TensorElement& rhs) const {
  if (left_ != rhs.left_ || right_ != rhs.right_ || basis_ != rhs.basis_ ||
      !field_->same(*rhs.field_))
    throw value_error("cannot subtract tensors on different legs, fields, or bases");
  TensorElement out = *this;
  for (const auto& [k, c] : rhs.coeffs_) add_to(out.coeffs_, k, -c);
  return out;
}

TensorElement TensorElement::scaled(const CycNumber& c) const {
  TensorElement out(left_, right_, field_, basis_);
  for (const auto& [k, v] : coeffs_) add_to(out.coeffs_, k, v * c);
  return out;
}

TensorElement TensorElement::swapped() const {
  TensorElement out(right_, left_, field_, basis_);
  for (const auto& [k, c] : coeffs_) add_to(out.coeffs_, {k.second, k.first}, c);
  return out;
}

TensorElement TensorElement::in_basis(ScfBasis target, const Int& limit) const {
  if (target == basis_) return *this;
  TensorElement out(left_, right_, field_, target);
  std::map<ArcDiagram, ScfVector> lcache, rcache;
  for (const auto& [k, c] : coeffs_) {
    auto lit = lcache.find(k.first);
    if (lit == lcache.end())
      lit = lcache
                .emplace(k.first, ScfVector::basis_element(left_, field_, basis_, k.first)
                                      .in_basis(target, limit))
                .first;
    auto rit = rcache.find(k.second);
    if (rit == rcache.end())
      rit = rcache
                .emplace(k.second, ScfVector::basis_element(right_, field_, basis_, k.second)
                                       .in_basis(target, limit))
                .first;
    for (const auto& [ld, lc] : lit->second.coeffs())
      for (const auto& [rd, rc] : rit->second.coeffs()) add_to(out.coeffs_, {ld, rd}, c * lc * rc);
  }
  return out;
}

ScfVector TensorElement::collapse_left() const {
  if (left_.size() != 0) throw value_error("left leg is not the empty poset");
  ScfVector out(right_, field_, basis_);
  for (const auto& [k, c] : coeffs_) out.add_term(k.second, c);
  return out;
}

ScfVector TensorElement::collapse_right() const {
  if (right_.size() != 0) throw value_error("right leg is not the empty poset");
  ScfVector out(left_, field_, basis_);
  for (const auto& [k, c] : coeffs_) out.add_term(k.first, c);
  return out;
}

bool TensorElement::operator==(const TensorElement& rhs) const {
  if (left_ != rhs.left_ || right_ != rhs.right_ || basis_ != rhs.basis_) return false;
  if (!field_->same(*rhs.field_)) return false;
  return coeffs_ == rhs.coeffs_;
}

std::string TensorElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << basis_name(basis_) << k.first.to_string() << "(x)"
       << basis_name(basis_) << k.second.to_string();
  }
  return os.str();
}

SpeciesElement::SpeciesElement(const ScfVector& v) { add_part(v); }

void SpeciesElement::add_part(const ScfVector& v) {
  if (v.is_zero()) return;
  auto it = parts_.find(v.poset());
  if (it == parts_.end())
    parts_.emplace(v.poset(), v);
  else {
    it->second = it->second + v;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

bool SpeciesElement::operator==(const SpeciesElement& rhs) const { return parts_ == rhs.parts_; }

std::string SpeciesElement::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, v] : parts_) {
    if (!first) os << "  ++  ";
    first = false;
    os << "[" << p.to_string() << "] " << v.to_string();
  }
  return os.str();
}

ScfVector hopf_product(const ScfVector& a, const ScfVector& b, const Int& limit) {
  if (!a.field()->same(*b.field())) throw value_error("product factors over different fields");
  if (a.basis() != b.basis()) throw value_error("product factors in different bases");
  Poset P = Poset::concat(a.poset(), b.poset());
  ScfVector out(P, a.field(), a.basis());
  if (a.basis() == ScfBasis::kappa) {
    auto nn = enumerate_nonnesting(P, a.field(), limit);
    const auto& SA = a.poset().elements();
    const auto& SB = b.poset().elements();
    for (const auto& rho : nn) {
      CycNumber ca = a.coeff(rho.restrict(SA));
      if (ca.is_zero()) continue;
      CycNumber cb = b.coeff(rho.restrict(SB));
      if (cb.is_zero()) continue;
      out.add_term(rho, ca * cb);
    }
  } else {
    for (const auto& [eta, ca] : a.coeffs())
      for (const auto& [nu, cb] : b.coeffs())
        out.add_term(ArcDiagram::disjoint_union(eta, nu, P), ca * cb);
  }
  return out;
}

ScfVector hopf_product_functional(const ScfVector& a, const ScfVector& b, const Int& limit) {
  if (!a.field()->same(*b.field())) throw value_error("product factors over different fields");
  if (a.basis() != b.basis()) throw value_error("product factors in different bases");
  ClassFunction alpha = a.to_class_function(limit);
  ClassFunction beta = b.to_class_function(limit);
  Poset P = Poset::concat(a.poset(), b.poset());
  PatternGroup grp(P, a.field());
  ClassFunction prod(grp, limit);
  const auto& SA = a.poset().elements();
  const auto& SB = b.poset().elements();
  grp.for_each(limit, [&](const GroupElement& g) {
    auto [u, v] = project_split(g, SA, SB);
    prod.set_value(g, alpha.value(u) * beta.value(v));
  });
  return ScfVector::from_class_function(prod, a.basis(), limit);
}

TensorElement hopf_coproduct(const ScfVector& a, const std::vector<std::string>& S,
                             const Int& limit) {
  std::vector<std::string> T = complement_labels(a.poset(), S);
  Poset PS = a.poset().restrict(S);
  Poset PT = a.poset().restrict(T);
  TensorElement out(PS, PT, a.field(), a.basis());
  switch (a.basis()) {
    case ScfBasis::kappa: {
      auto nnS = enumerate_nonnesting(PS, a.field(), limit);
      auto nnT = enumerate_nonnesting(PT, a.field(), limit);
      for (const auto& nu : nnS)
        for (const auto& rho : nnT) {
          ArcDiagram joined = ArcDiagram::disjoint_union(nu, rho, a.poset()).sml();
          CycNumber c = a.coeff(joined);
          if (!c.is_zero()) out.add_term(nu, rho, c);
        }
      break;
    }
    case ScfBasis::character: {
      PatternGroup grp(a.poset(), a.field());
      std::set<std::string> inS(S.begin(), S.end());
      const Rational qr(Int(a.field()->q()));
      for (const auto& [eta, c] : a.coeffs()) {
        int crossing = 0;
        for (const auto& [i, j] : grp.blocked_pairs(eta)) {
          bool iS = inS.count(a.poset().label(i)) > 0;
          bool jS = inS.count(a.poset().label(j)) > 0;
          if (iS != jS) ++crossing;
        }
        Rational scale(int_pow(Int(a.field()->q()), static_cast<std::uint64_t>(crossing)));
        CycNumber cc = c.scaled(scale);
        auto projS = proj_diagrams(eta, S, limit);
        auto projT = proj_diagrams(eta, T, limit);
        for (const auto& nu : projS)
          for (const auto& rho : projT) out.add_term(nu, rho, cc);
      }
      break;
    }
    case ScfBasis::powersum:
      throw value_error(
          "the coproduct has no closed formula in the p basis; "
          "convert the input or use the functional route");
  }
  return out;
}

TensorElement hopf_coproduct_functional(const ScfVector& a, const std::vector<std::string>& S,
                                        const Int& limit) {
  std::vector<std::string> T = complement_labels(a.poset(), S);
  ClassFunction alpha = a.to_class_function(limit);
  Poset PS = a.poset().restrict(S);
  Poset PT = a.poset().restrict(T);
  PatternGroup grpS(PS, a.field());
  PatternGroup grpT(PT, a.field());
  grpS.check_limit(limit);
  grpT.check_limit(limit);
  auto nnS = enumerate_nonnesting(PS, a.field(), limit);
  auto nnT = enumerate_nonnesting(PT, a.field(), limit);
  TensorElement out(PS, PT, a.field(), ScfBasis::kappa);
  std::map<std::pair<ArcDiagram, ArcDiagram>, CycNumber> byclass;
  for (const auto& nu : nnS)
    for (const auto& rho : nnT) {
      GroupElement g = embed_split(grpS.class_representative(nu), grpT.class_representative(rho),
                                   a.poset());
      CycNumber v = alpha.value(g);
      byclass.emplace(std::make_pair(nu, rho), v);
      out.add_term(nu, rho, v);
    }
  grpS.for_each(limit, [&](const GroupElement& u) {
    grpT.for_each(limit, [&](const GroupElement& v) {
      CycNumber got = alpha.value(embed_split(u, v, a.poset()));
      if (got != byclass.at({sml_of(u), sml_of(v)}))
        throw check_error("coproduct values are not constant on superclass pairs at " +
                          u.to_string() + ", " + v.to_string());
    });
  });
  return out.in_basis(a.basis(), limit);
}

std::vector<Poset> all_posets(const std::vector<std::string>& labels, const Int& limit) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) return {Poset()};
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  const int m = static_cast<int>(slots.size());
  if (m > 24) throw limit_error("too many relation patterns on " + std::to_string(n) + " elements");
  std::vector<Poset> out;
  std::vector<std::vector<bool>> rel(static_cast<std::size_t>(n),
                                     std::vector<bool>(static_cast<std::size_t>(n), false));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int k = 0; k < m; ++k)
      rel[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)].first)]
         [static_cast<std::size_t>(slots[static_cast<std::size_t>(k)].second)] =
             ((mask >> k) & 1u) != 0;
    bool ok = true;
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; ok && j < n; ++j) {
        if (i != j && rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
            rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
          ok = false;
        if (!ok) break;
      }
    for (int i = 0; ok && i < n; ++i)
      for (int j = 0; ok && j < n; ++j)
        for (int k = 0; ok && k < n; ++k)
          if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
              rel[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
              !rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
            ok = false;
    if (!ok) continue;
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          covers.emplace_back(labels[static_cast<std::size_t>(i)],
                              labels[static_cast<std::size_t>(j)]);
    out.push_back(Poset(labels, covers));
    if (Int(out.size()) > limit) throw limit_error("poset enumeration exceeds the limit");
  }
  return out;
}

bool HopfReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool FreeReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Shared enumeration cache for the exhaustive checks.
struct HopfCache {
  FieldPtr field;
  Int limit;
  std::map<std::string, std::vector<Poset>> posets;
  std::map<Poset, std::vector<ArcDiagram>> diagrams;

  static std::string key(const std::vector<std::string>& labels) {
    std::string k;
    for (const auto& l : labels) {
      k += l;
      k += '\x1f';
    }
    return k;
  }
  const std::vector<Poset>& posets_on(const std::vector<std::string>& labels) {
    auto it = posets.find(key(labels));
    if (it == posets.end()) it = posets.emplace(key(labels), all_posets(labels, limit)).first;
    return it->second;
  }
  const std::vector<ArcDiagram>& diagrams_on(const Poset& p) {
    auto it = diagrams.find(p);
    if (it == diagrams.end())
      it = diagrams.emplace(p, enumerate_nonnesting(p, field, limit)).first;
    return it->second;
  }
};

std::vector<std::vector<std::vector<std::string>>> ordered_partitions(
    const std::vector<std::string>& labels, int parts) {
  // Assign each label to one of `parts` slots; slots keep the input order.
  std::vector<std::vector<std::vector<std::string>>> out;
  const int n = static_cast<int>(labels.size());
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<std::string>> tuple(static_cast<std::size_t>(parts));
    for (int i = 0; i < n; ++i)
      tuple[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(
          labels[static_cast<std::size_t>(i)]);
    out.push_back(std::move(tuple));
    int i = n - 1;
    while (i >= 0 && assign[static_cast<std::size_t>(i)] == parts - 1) {
      assign[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++assign[static_cast<std::size_t>(i)];
  }
  return out;
}

using TripleKey = std::tuple<ArcDiagram, ArcDiagram, ArcDiagram>;

void add_triple(std::map<TripleKey, CycNumber>& m, const TripleKey& k, const CycNumber& c) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (!c.is_zero()) m.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) m.erase(it);
  }
}

ScfVector kappa_elem(const Poset& p, const FieldPtr& f, const ArcDiagram& d) {
  return ScfVector::basis_element(p, f, ScfBasis::kappa, d);
}

}  // namespace

HopfReport verify_hopf(int n, const FieldPtr& field, const Int& limit) {
  if (n < 0) throw value_error("ground set size must be nonnegative");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  HopfCache cache{field, limit, {}, {}};
  HopfReport rep;

  auto bipartitions = ordered_partitions(labels, 2);
  auto tripartitions = ordered_partitions(labels, 3);

  // Associativity of the product across all ordered tripartitions.
  rep.checks.push_back([&]() -> CheckResult {
    for (const auto& tri : tripartitions)
      for (const auto& P1 : cache.posets_on(tri[0]))
        for (const auto& P2 : cache.posets_on(tri[1]))
          for (const auto& P3 : cache.posets_on(tri[2]))
            for (const auto& e1 : cache.diagrams_on(P1))
              for (const auto& e2 : cache.diagrams_on(P2))
                for (const auto& e3 : cache.diagrams_on(P3)) {
                  ScfVector x = kappa_elem(P1, field, e1);
                  ScfVector y = kappa_elem(P2, field, e2);
                  ScfVector z = kappa_elem(P3, field, e3);
                  ScfVector lhs = hopf_product(hopf_product(x, y, limit), z, limit);
                  ScfVector rhs = hopf_product(x, hopf_product(y, z, limit), limit);
                  if (lhs != rhs)
                    return {"associativity", false,
                            "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string() +
                                " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string()};
                }
    return {"associativity", true, ""};
  }());

  // Coassociativity across all ordered tripartitions of each poset.
  rep.checks.push_back([&]() -> CheckResult {
    for (const auto& P : cache.posets_on(labels))
      for (const auto& eta : cache.diagrams_on(P))
        for (const auto& tri : tripartitions) {
          const auto& R = tri[0];
          const auto& S = tri[1];
          const auto& T = tri[2];
          std::set<std::string> inRS(R.begin(), R.end());
          inRS.insert(S.begin(), S.end());
          std::vector<std::string> RS;
          for (const auto& e : P.elements())
            if (inRS.count(e)) RS.push_back(e);
          ScfVector x = kappa_elem(P, field, eta);
          std::map<TripleKey, CycNumber> lhs, rhs;
          TensorElement t1 = hopf_coproduct(x, RS, limit);
          for (const auto& [k, c] : t1.coeffs()) {
            TensorElement t2 =
                hopf_coproduct(kappa_elem(P.restrict(RS), field, k.first), R, limit);
            for (const auto& [k2, c2] : t2.coeffs())
              add_triple(lhs, {k2.first, k2.second, k.second}, c * c2);
          }
          TensorElement u1 = hopf_coproduct(x, R, limit);
          for (const auto& [k, c] : u1.coeffs()) {
            std::set<std::string> inR(R.begin(), R.end());
            std::vector<std::string> ST;
            for (const auto& e : P.elements())
              if (!inR.count(e)) ST.push_back(e);
            TensorElement u2 = hopf_coproduct(kappa_elem(P.restrict(ST), field, k.second), S, limit);
            for (const auto& [k2, c2] : u2.coeffs())
              add_triple(rhs, {k.first, k2.first, k2.second}, c * c2);
          }
          if (lhs != rhs)
            return {"coassociativity", false,
                    "eta=" + eta.to_string() + " on " + P.to_string() + " split (" +
                        std::to_string(R.size()) + "," + std::to_string(S.size()) + "," +
                        std::to_string(T.size()) + ")"};
        }
    return {"coassociativity", true, ""};
  }());

  // Unit and counit identifications.
  rep.checks.push_back([&]() -> CheckResult {
    ScfVector unit = kappa_elem(Poset(), field, ArcDiagram::empty(Poset(), field));
    for (const auto& P : cache.posets_on(labels))
      for (const auto& eta : cache.diagrams_on(P)) {
        ScfVector x = kappa_elem(P, field, eta);
        if (hopf_product(unit, x, limit) != x || hopf_product(x, unit, limit) != x)
          return {"unit-counit", false, "unit product fails at " + x.to_string()};
        if (hopf_coproduct(x, {}, limit).collapse_left() != x)
          return {"unit-counit", false, "counit on the left fails at " + x.to_string()};
        if (hopf_coproduct(x, P.elements(), limit).collapse_right() != x)
          return {"unit-counit", false, "counit on the right fails at " + x.to_string()};
      }
    return {"unit-counit", true, ""};
  }());

  // Product-coproduct compatibility.
  rep.checks.push_back([&]() -> CheckResult {
    for (const auto& bi : bipartitions) {
      const auto& I1 = bi[0];
      const auto& I2 = bi[1];
      std::set<std::string> in1(I1.begin(), I1.end());
      for (const auto& P1 : cache.posets_on(I1))
        for (const auto& P2 : cache.posets_on(I2)) {
          Poset P = Poset::concat(P1, P2);
          for (const auto& eta : cache.diagrams_on(P1))
            for (const auto& nu : cache.diagrams_on(P2)) {
              ScfVector x = kappa_elem(P1, field, eta);
              ScfVector y = kappa_elem(P2, field, nu);
              ScfVector z = hopf_product(x, y, limit);
              for (const auto& split : ordered_partitions(P.elements(), 2)) {
                const auto& S = split[0];
                const auto& T = split[1];
                TensorElement top = hopf_coproduct(z, S, limit);
                std::set<std::string> inS(S.begin(), S.end());
                std::vector<std::string> A, B, C, D;
                for (const auto& e : I1) (inS.count(e) ? A : B).push_back(e);
                for (const auto& e : I2) (inS.count(e) ? C : D).push_back(e);
                TensorElement tx = hopf_coproduct(x, A, limit);
                TensorElement ty = hopf_coproduct(y, C, limit);
                TensorElement bot(P.restrict(S), P.restrict(T), field, ScfBasis::kappa);
                for (const auto& [kx, cx] : tx.coeffs())
                  for (const auto& [ky, cy] : ty.coeffs()) {
                    ScfVector L = hopf_product(kappa_elem(P1.restrict(A), field, kx.first),
                                               kappa_elem(P2.restrict(C), field, ky.first), limit);
                    ScfVector Rv = hopf_product(kappa_elem(P1.restrict(B), field, kx.second),
                                                kappa_elem(P2.restrict(D), field, ky.second),
                                                limit);
                    for (const auto& [ld, lc] : L.coeffs())
                      for (const auto& [rd, rc] : Rv.coeffs())
                        bot.add_term(ld, rd, cx * cy * lc * rc);
                  }
                if (top != bot)
                  return {"compatibility", false,
                          "x=" + x.to_string() + " y=" + y.to_string() + " S={" +
                              (S.empty() ? "" : S[0]) + (S.size() > 1 ? ",..." : "") + "} top=" +
                              top.to_string() + " bottom=" + bot.to_string()};
              }
            }
        }
    }
    return {"compatibility", true, ""};
  }());

  // Cocommutativity.
  rep.checks.push_back([&]() -> CheckResult {
    for (const auto& P : cache.posets_on(labels))
      for (const auto& eta : cache.diagrams_on(P))
        for (const auto& split : ordered_partitions(P.elements(), 2)) {
          ScfVector x = kappa_elem(P, field, eta);
          TensorElement a = hopf_coproduct(x, split[0], limit).swapped();
          TensorElement b = hopf_coproduct(x, split[1], limit);
          if (a != b)
            return {"cocommutativity", false,
                    "eta=" + eta.to_string() + " on " + P.to_string() + " lhs=" + b.to_string() +
                        " swapped rhs=" + a.to_string()};
        }
    return {"cocommutativity", true, ""};
  }());

  // Naturality under relabeling, for products and coproducts.
  rep.checks.push_back([&]() -> CheckResult {
    std::vector<std::map<std::string, std::string>> maps;
    {
      std::map<std::string, std::string> rev, pre;
      for (int i = 1; i <= n; ++i) {
        rev[std::to_string(i)] = std::to_string(n + 1 - i);
        pre[std::to_string(i)] = "x" + std::to_string(i);
      }
      maps.push_back(rev);
      maps.push_back(pre);
    }
    auto apply = [](const std::map<std::string, std::string>& phi,
                    const std::vector<std::string>& ls) {
      std::vector<std::string> out;
      for (const auto& l : ls) out.push_back(phi.at(l));
      return out;
    };
    for (const auto& phi : maps) {
      for (const auto& bi : bipartitions)
        for (const auto& P1 : cache.posets_on(bi[0]))
          for (const auto& P2 : cache.posets_on(bi[1]))
            for (const auto& eta : cache.diagrams_on(P1))
              for (const auto& nu : cache.diagrams_on(P2)) {
                ScfVector x = kappa_elem(P1, field, eta);
                ScfVector y = kappa_elem(P2, field, nu);
                Poset Q1 = P1.relabeled(phi);
                Poset Q2 = P2.relabeled(phi);
                ScfVector lhs = hopf_product(x, y, limit).relabeled(Poset::concat(Q1, Q2), phi);
                ScfVector rhs =
                    hopf_product(x.relabeled(Q1, phi), y.relabeled(Q2, phi), limit);
                if (lhs != rhs)
                  return {"naturality", false, "product transport fails at x=" + x.to_string() +
                                                   " y=" + y.to_string()};
              }
      for (const auto& P : cache.posets_on(labels))
        for (const auto& eta : cache.diagrams_on(P))
          for (const auto& split : ordered_partitions(P.elements(), 2)) {
            ScfVector x = kappa_elem(P, field, eta);
            Poset Q = P.relabeled(phi);
            TensorElement t = hopf_coproduct(x, split[0], limit);
            TensorElement lhs(Q.restrict(apply(phi, split[0])), Q.restrict(apply(phi, split[1])),
                              field, ScfBasis::kappa);
            for (const auto& [k, c] : t.coeffs())
              lhs.add_term(k.first.relabeled(lhs.left_poset(), phi),
                           k.second.relabeled(lhs.right_poset(), phi), c);
            TensorElement rhs = hopf_coproduct(x.relabeled(Q, phi), apply(phi, split[0]), limit);
            if (lhs != rhs)
              return {"naturality", false, "coproduct transport fails at " + x.to_string()};
          }
    }
    return {"naturality", true, ""};
  }());

  // The product must not be commutative: the two concatenation orders give
  // different posets, hence different components of the species.
  if (n >= 2) {
    rep.checks.push_back([&]() -> CheckResult {
      for (const auto& bi : bipartitions) {
        if (bi[0].empty() || bi[1].empty()) continue;
        for (const auto& P1 : cache.posets_on(bi[0]))
          for (const auto& P2 : cache.posets_on(bi[1]))
            for (const auto& eta : cache.diagrams_on(P1))
              for (const auto& nu : cache.diagrams_on(P2)) {
                ScfVector x = kappa_elem(P1, field, eta);
                ScfVector y = kappa_elem(P2, field, nu);
                SpeciesElement xy(hopf_product(x, y, limit));
                SpeciesElement yx(hopf_product(y, x, limit));
                if (xy != yx) {
                  rep.noncommutative_witness = "x=" + x.to_string() + " y=" + y.to_string() +
                                               " x*y=" + xy.to_string() +
                                               " y*x=" + yx.to_string();
                  return {"noncommutativity", true, ""};
                }
              }
      }
      return {"noncommutativity", false, "no witness found: every product commuted"};
    }());
  }

  return rep;
}

namespace {

std::vector<std::vector<int>> compositions(int k) {
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= k; ++first)
    for (auto rest : compositions(k - first)) {
      std::vector<int> c{first};
      c.insert(c.end(), rest.begin(), rest.end());
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<std::vector<std::vector<std::string>>> ordered_set_partitions(
    const std::vector<std::string>& labels) {
  std::vector<std::vector<std::vector<std::string>>> out;
  if (labels.empty()) {
    out.push_back({});
    return out;
  }
  const int n = static_cast<int>(labels.size());
  // First block: any nonempty subset, by increasing bitmask; recurse on the rest.
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::string> block, rest;
    for (int i = 0; i < n; ++i)
      (((mask >> i) & 1u) ? block : rest).push_back(labels[static_cast<std::size_t>(i)]);
    for (auto tail : ordered_set_partitions(rest)) {
      std::vector<std::vector<std::string>> osp{block};
      osp.insert(osp.end(), tail.begin(), tail.end());
      out.push_back(std::move(osp));
    }
  }
  return out;
}

Poset chain_poset(int k) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  for (int i = 1; i < k; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
  return Poset(labels, covers);
}

}  // namespace

FreeReport verify_free(int n, const FieldPtr& field, const Int& limit) {
  if (n < 1) throw value_error("ground set size must be positive");
  FreeReport rep;
  HopfCache cache{field, limit, {}, {}};

  // Atomic counts on the increasing chains.
  std::vector<Int> a(static_cast<std::size_t>(n) + 1, Int(0));
  std::vector<Int> dims(static_cast<std::size_t>(n) + 1, Int(0));
  for (int k = 1; k <= n; ++k) {
    Poset L = chain_poset(k);
    const auto& nn = cache.diagrams_on(L);
    dims[static_cast<std::size_t>(k)] = Int(nn.size());
    for (const auto& d : nn)
      if (is_atomic(d)) a[static_cast<std::size_t>(k)] += 1;
    rep.linear_atomic_counts.push_back(a[static_cast<std::size_t>(k)]);
    rep.linear_dims.push_back(dims[static_cast<std::size_t>(k)]);
  }

  rep.checks.push_back([&]() -> CheckResult {
    for (int k = 1; k <= n; ++k) {
      Int rhs(0);
      for (const auto& comp : compositions(k)) {
        if (comp.empty()) continue;
        Int term(1);
        for (int c : comp) term *= a[static_cast<std::size_t>(c)];
        rhs += term;
      }
      if (dims[static_cast<std::size_t>(k)] != rhs)
        return {"linear-dimension-identity", false,
                "n=" + std::to_string(k) + " dimension " + dims[static_cast<std::size_t>(k)].str() +
                    " but composition sum " + rhs.str()};
    }
    return {"linear-dimension-identity", true, ""};
  }());

  rep.checks.push_back([&]() -> CheckResult {
    std::map<std::string, Int> atomic_cache;
    auto atomic_count = [&](const std::vector<std::string>& block) -> Int {
      std::string key = HopfCache::key(block);
      auto it = atomic_cache.find(key);
      if (it != atomic_cache.end()) return it->second;
      Int count(0);
      for (const auto& P : cache.posets_on(block))
        for (const auto& d : cache.diagrams_on(P))
          if (is_atomic(d)) count += 1;
      atomic_cache.emplace(key, count);
      return count;
    };
    for (int k = 1; k <= n; ++k) {
      std::vector<std::string> labels;
      for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
      Int lhs(0);
      for (const auto& P : cache.posets_on(labels)) lhs += Int(cache.diagrams_on(P).size());
      Int rhs(0);
      for (const auto& osp : ordered_set_partitions(labels)) {
        Int term(1);
        for (const auto& block : osp) term *= atomic_count(block);
        rhs += term;
      }
      if (lhs != rhs)
        return {"poset-dimension-identity", false,
                "n=" + std::to_string(k) + " total dimension " + lhs.str() +
                    " but ordered-partition sum " + rhs.str()};
    }
    return {"poset-dimension-identity", true, ""};
  }());

  rep.checks.push_back([&]() -> CheckResult {
    for (int k = 1; k <= n; ++k) {
      std::vector<std::string> labels;
      for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
      for (const auto& P : cache.posets_on(labels))
        for (const auto& d : cache.diagrams_on(P)) {
          auto factors = atomic_factors(d);
          for (const auto& f : factors)
            if (!is_atomic(f))
              return {"factorization-audit", false,
                      "non-atomic factor " + f.to_string() + " of " + d.to_string()};
          if (factors.empty()) {
            if (P.size() != 0)
              return {"factorization-audit", false, "empty factorization of " + d.to_string()};
            continue;
          }
          Poset rebuilt = factors[0].poset();
          for (std::size_t i = 1; i < factors.size(); ++i)
            rebuilt = Poset::concat(rebuilt, factors[i].poset());
          if (rebuilt != P)
            return {"factorization-audit", false,
                    "factors of " + d.to_string() + " rebuild " + rebuilt.to_string() +
                        " instead of " + P.to_string()};
          ArcDiagram joined = factors[0];
          std::vector<std::string> got = factors[0].poset().elements();
          for (std::size_t i = 1; i < factors.size(); ++i) {
            for (const auto& e : factors[i].poset().elements()) got.push_back(e);
            joined = ArcDiagram::disjoint_union(joined, factors[i], P.restrict(got));
          }
          if (joined != d)
            return {"factorization-audit", false,
                    "factors of " + d.to_string() + " reassemble to " + joined.to_string()};
        }
    }
    return {"factorization-audit", true, ""};
  }());

  return rep;
}

}  // namespace nnscf
