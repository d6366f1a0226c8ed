#include "nnscf/pattern_group.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace nnscf {

AlgebraElement::AlgebraElement(Poset poset, FieldPtr field)
    : poset_(std::move(poset)), field_(std::move(field)) {
  if (!field_) throw value_error("algebra element requires a field");
}

FieldElement AlgebraElement::entry(int i, int j) const {
  auto it = a_.find({i, j});
  return it == a_.end() ? field_->zero() : it->second;
}

void AlgebraElement::set_entry(int i, int j, const FieldElement& v) {
  if (!poset_.less(i, j))
    throw value_error("entry (" + poset_.label(i) + "," + poset_.label(j) +
                      ") is off the strict order");
  if (!v.field()->same(*field_)) throw value_error("entry from a different field");
  if (v.is_zero())
    a_.erase({i, j});
  else
    a_.insert_or_assign({i, j}, v);
}

void AlgebraElement::check_compatible(const AlgebraElement& rhs) const {
  if (poset_ != rhs.poset_ || !field_->same(*rhs.field_))
    throw value_error("algebra elements live on different groups");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  check_compatible(rhs);
  AlgebraElement out = *this;
  for (const auto& [ij, v] : rhs.a_) out.set_entry(ij.first, ij.second, out.entry(ij.first, ij.second) + v);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  check_compatible(rhs);
  AlgebraElement out = *this;
  for (const auto& [ij, v] : rhs.a_) out.set_entry(ij.first, ij.second, out.entry(ij.first, ij.second) - v);
  return out;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  AlgebraElement out(poset_, field_);
  if (c.is_zero()) return out;
  for (const auto& [ij, v] : a_) out.set_entry(ij.first, ij.second, v * c);
  return out;
}

AlgebraElement AlgebraElement::mul(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_compatible(y);
  AlgebraElement out(x.poset_, x.field_);
  for (const auto& [ik, xv] : x.a_)
    for (const auto& [kj, yv] : y.a_) {
      if (ik.second != kj.first) continue;
      int i = ik.first, j = kj.second;
      // Transitivity keeps the product on the strict order.
      out.set_entry(i, j, out.entry(i, j) + xv * yv);
    }
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
  check_compatible(rhs);
  if (a_.size() != rhs.a_.size()) return false;
  auto it = rhs.a_.begin();
  for (const auto& [ij, v] : a_) {
    if (it->first != ij || it->second != v) return false;
    ++it;
  }
  return true;
}

bool AlgebraElement::operator<(const AlgebraElement& rhs) const {
  check_compatible(rhs);
  return key() < rhs.key();
}

std::string AlgebraElement::key() const {
  std::string s;
  for (const auto& [ij, v] : a_)
    s += std::to_string(ij.first) + "," + std::to_string(ij.second) + ":" +
         std::to_string(v.index()) + ";";
  return s;
}

std::string AlgebraElement::to_string() const {
  if (a_.empty()) return "0";
  std::string s;
  for (const auto& [ij, v] : a_) {
    if (!s.empty()) s += "+";
    std::string c = v.to_string();
    s += (c == "1" ? "" : c + "*") + "e(" + poset_.label(ij.first) + "," +
         poset_.label(ij.second) + ")";
  }
  return s;
}

GroupElement GroupElement::identity(Poset poset, FieldPtr field) {
  return GroupElement(AlgebraElement(std::move(poset), std::move(field)));
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  // (1+x)(1+y) = 1 + x + y + xy
  return GroupElement(x_ + rhs.x_ + AlgebraElement::mul(x_, rhs.x_));
}

GroupElement GroupElement::inverse() const {
  // Nilpotent Neumann series: (1+x)^{-1} = 1 - x + x^2 - ...
  AlgebraElement acc(poset(), field());
  AlgebraElement power = x_;
  bool negate = true;
  while (!power.is_zero()) {
    acc = negate ? acc - power : acc + power;
    power = AlgebraElement::mul(power, x_);
    negate = !negate;
  }
  return GroupElement(acc);
}

Functional::Functional(Poset poset, FieldPtr field)
    : poset_(std::move(poset)), field_(std::move(field)) {
  if (!field_) throw value_error("functional requires a field");
}

Functional Functional::from_diagram(const ArcDiagram& eta) {
  Functional out(eta.poset(), eta.field());
  for (const auto& arc : eta.arcs())
    out.set_coord(eta.poset().index_of(arc.from), eta.poset().index_of(arc.to), arc.label);
  return out;
}

FieldElement Functional::coord(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? field_->zero() : it->second;
}

void Functional::set_coord(int i, int j, const FieldElement& v) {
  if (!poset_.less(i, j))
    throw value_error("coordinate (" + poset_.label(i) + "," + poset_.label(j) +
                      ") is off the strict order");
  if (v.is_zero())
    c_.erase({i, j});
  else
    c_.insert_or_assign({i, j}, v);
}

FieldElement Functional::evaluate(const AlgebraElement& x) const {
  if (poset_ != x.poset()) throw value_error("functional applied across posets");
  FieldElement acc = field_->zero();
  for (const auto& [ij, v] : c_) {
    FieldElement xv = x.entry(ij.first, ij.second);
    if (!xv.is_zero()) acc = acc + v * xv;
  }
  return acc;
}

Functional Functional::act_left(const GroupElement& g) const {
  if (poset_ != g.poset()) throw value_error("group action across posets");
  const AlgebraElement y = g.inverse().f();
  Functional out(poset_, field_);
  // (g.lambda)(e_ij) = lambda(e_ij) + sum_{k < i} y_ki lambda(e_kj)
  for (auto [i, j] : poset_.strict_pairs()) {
    FieldElement v = coord(i, j);
    for (const auto& [ki, yv] : y.entries()) {
      if (ki.second != i) continue;
      FieldElement c = coord(ki.first, j);
      if (!c.is_zero()) v = v + yv * c;
    }
    out.set_coord(i, j, v);
  }
  return out;
}

Functional Functional::act_right(const GroupElement& g) const {
  if (poset_ != g.poset()) throw value_error("group action across posets");
  const AlgebraElement y = g.inverse().f();
  Functional out(poset_, field_);
  // (lambda.g)(e_ij) = lambda(e_ij) + sum_{l > j} y_jl lambda(e_il)
  for (auto [i, j] : poset_.strict_pairs()) {
    FieldElement v = coord(i, j);
    for (const auto& [jl, yv] : y.entries()) {
      if (jl.first != j) continue;
      FieldElement c = coord(i, jl.second);
      if (!c.is_zero()) v = v + yv * c;
    }
    out.set_coord(i, j, v);
  }
  return out;
}

bool Functional::operator==(const Functional& rhs) const {
  if (poset_ != rhs.poset_ || !field_->same(*rhs.field_))
    throw value_error("functionals live on different groups");
  return c_ == rhs.c_ ? true : key() == rhs.key();
}

bool Functional::operator<(const Functional& rhs) const { return key() < rhs.key(); }

std::string Functional::key() const {
  std::string s;
  for (const auto& [ij, v] : c_)
    s += std::to_string(ij.first) + "," + std::to_string(ij.second) + ":" +
         std::to_string(v.index()) + ";";
  return s;
}

ArcDiagram sml_of(const GroupElement& g) {
  const Poset& poset = g.poset();
  std::vector<Arc> arcs;
  for (const auto& [ij, v] : g.f().entries()) {
    auto [i, j] = ij;
    bool survives = true;
    for (const auto& [kl, w] : g.f().entries()) {
      if (kl == ij) continue;
      if (poset.less_eq(i, kl.first) && poset.less_eq(kl.second, j)) {
        survives = false;
        break;
      }
    }
    if (survives) arcs.push_back({poset.label(i), poset.label(j), v});
  }
  return ArcDiagram(poset, g.field(), std::move(arcs));
}

ArcDiagram big_of(const Functional& lambda) {
  const Poset& poset = lambda.poset();
  std::vector<Arc> arcs;
  for (const auto& [ij, v] : lambda.coords()) {
    auto [i, j] = ij;
    bool survives = true;
    for (const auto& [kl, w] : lambda.coords()) {
      if (kl == ij) continue;
      if (poset.less_eq(kl.first, i) && poset.less_eq(j, kl.second)) {
        survives = false;
        break;
      }
    }
    if (survives) arcs.push_back({poset.label(i), poset.label(j), v});
  }
  return ArcDiagram(poset, lambda.field(), std::move(arcs));
}

PatternGroup::PatternGroup(Poset poset, FieldPtr field)
    : poset_(std::move(poset)), field_(std::move(field)) {
  if (!field_) throw value_error("pattern group requires a field");
  pairs_ = poset_.strict_pairs();
  order_ = int_pow(field_->q(), pairs_.size());
}

GroupElement PatternGroup::identity() const { return GroupElement::identity(poset_, field_); }

GroupElement PatternGroup::element_at(Int index) const {
  if (index < 0 || index >= order_)
    throw value_error("group element index out of range: " + index.str());
  AlgebraElement x(poset_, field_);
  for (std::size_t k = pairs_.size(); k-- > 0;) {
    Int digit = index % field_->q();
    index /= field_->q();
    if (digit != 0)
      x.set_entry(pairs_[k].first, pairs_[k].second,
                  field_->element(static_cast<std::int64_t>(digit)));
  }
  return GroupElement(std::move(x));
}

Int PatternGroup::index_of(const GroupElement& g) const {
  if (g.poset() != poset_) throw value_error("element from a different group");
  Int idx = 0;
  for (const auto& [i, j] : pairs_) idx = idx * field_->q() + g.entry(i, j).index();
  return idx;
}

Functional PatternGroup::functional_at(Int index) const {
  if (index < 0 || index >= order_)
    throw value_error("functional index out of range: " + index.str());
  Functional lambda(poset_, field_);
  for (std::size_t k = pairs_.size(); k-- > 0;) {
    Int digit = index % field_->q();
    index /= field_->q();
    if (digit != 0)
      lambda.set_coord(pairs_[k].first, pairs_[k].second,
                       field_->element(static_cast<std::int64_t>(digit)));
  }
  return lambda;
}

Int PatternGroup::index_of(const Functional& lambda) const {
  if (lambda.poset() != poset_) throw value_error("functional from a different group");
  Int idx = 0;
  for (const auto& [i, j] : pairs_) idx = idx * field_->q() + lambda.coord(i, j).index();
  return idx;
}

void PatternGroup::check_limit(const Int& limit) const {
  if (order_ > limit)
    throw limit_error("group of order " + order_.str() + " exceeds the limit " + limit.str());
}

void PatternGroup::for_each(const Int& limit,
                            const std::function<void(const GroupElement&)>& fn) const {
  check_limit(limit);
  std::int64_t q = field_->q();
  std::vector<std::int64_t> digits(pairs_.size(), 0);
  while (true) {
    AlgebraElement x(poset_, field_);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (digits[k] != 0)
        x.set_entry(pairs_[k].first, pairs_[k].second, field_->element(digits[k]));
    fn(GroupElement(std::move(x)));
    std::size_t pos = pairs_.size();
    while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
}

void PatternGroup::for_each_functional(const Int& limit,
                                       const std::function<void(const Functional&)>& fn) const {
  check_limit(limit);
  std::int64_t q = field_->q();
  std::vector<std::int64_t> digits(pairs_.size(), 0);
  while (true) {
    Functional lambda(poset_, field_);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (digits[k] != 0)
        lambda.set_coord(pairs_[k].first, pairs_[k].second, field_->element(digits[k]));
    fn(lambda);
    std::size_t pos = pairs_.size();
    while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
}

GroupElement PatternGroup::class_representative(const ArcDiagram& nu) const {
  if (nu.poset() != poset_) throw value_error("diagram lives on a different poset");
  AlgebraElement x(poset_, field_);
  for (const auto& arc : nu.arcs())
    x.set_entry(poset_.index_of(arc.from), poset_.index_of(arc.to), arc.label);
  return GroupElement(std::move(x));
}

Functional PatternGroup::class_functional(const ArcDiagram& nu) const {
  if (nu.poset() != poset_) throw value_error("diagram lives on a different poset");
  return Functional::from_diagram(nu);
}

std::vector<std::pair<int, int>> PatternGroup::class_free_pairs(const ArcDiagram& nu) const {
  if (nu.poset() != poset_) throw value_error("diagram lives on a different poset");
  std::vector<std::pair<int, int>> free;
  for (const auto& [k, l] : pairs_) {
    if (nu.label_at(k, l) != nullptr) continue;
    for (const auto& arc : nu.arcs()) {
      int i = poset_.index_of(arc.from);
      int j = poset_.index_of(arc.to);
      if (poset_.less_eq(k, i) && poset_.less_eq(j, l)) {
        free.emplace_back(k, l);
        break;
      }
    }
  }
  return free;
}

Int PatternGroup::class_size(const ArcDiagram& nu) const {
  return int_pow(field_->q(), class_free_pairs(nu).size());
}

bool PatternGroup::class_contains(const ArcDiagram& nu, const GroupElement& g) const {
  std::set<std::pair<int, int>> free;
  for (auto pr : class_free_pairs(nu)) free.insert(pr);
  for (const auto& [i, j] : pairs_) {
    const FieldElement* lab = nu.label_at(i, j);
    FieldElement v = g.entry(i, j);
    if (lab != nullptr) {
      if (v != *lab) return false;
    } else if (!free.count({i, j}) && !v.is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<GroupElement> PatternGroup::class_members(const ArcDiagram& nu,
                                                      const Int& limit) const {
  auto free = class_free_pairs(nu);
  Int size = int_pow(field_->q(), free.size());
  if (size > limit)
    throw limit_error("superclass of size " + size.str() + " exceeds the limit " + limit.str());
  std::vector<GroupElement> out;
  std::int64_t q = field_->q();
  std::vector<std::int64_t> digits(free.size(), 0);
  while (true) {
    AlgebraElement x(poset_, field_);
    for (const auto& arc : nu.arcs())
      x.set_entry(poset_.index_of(arc.from), poset_.index_of(arc.to), arc.label);
    for (std::size_t k = 0; k < free.size(); ++k)
      if (digits[k] != 0) x.set_entry(free[k].first, free[k].second, field_->element(digits[k]));
    out.emplace_back(std::move(x));
    std::size_t pos = free.size();
    while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> PatternGroup::class_members_brute(const ArcDiagram& nu,
                                                            const Int& limit) const {
  std::vector<GroupElement> out;
  for_each(limit, [&](const GroupElement& g) {
    if (sml_of(g) == nu) out.push_back(g);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> PatternGroup::blocked_pairs(const ArcDiagram& eta) const {
  if (eta.poset() != poset_) throw value_error("diagram lives on a different poset");
  std::vector<std::pair<int, int>> blocked;
  for (const auto& [i, j] : pairs_) {
    for (const auto& arc : eta.arcs()) {
      int k = poset_.index_of(arc.from);
      int l = poset_.index_of(arc.to);
      if (std::pair<int, int>{k, l} == std::pair<int, int>{i, j}) continue;
      if (poset_.less_eq(k, i) && poset_.less_eq(j, l)) {
        blocked.emplace_back(i, j);
        break;
      }
    }
  }
  return blocked;
}

Int PatternGroup::subgroup_index(const ArcDiagram& eta) const {
  return int_pow(field_->q(), blocked_pairs(eta).size());
}

bool PatternGroup::in_subgroup(const ArcDiagram& eta, const GroupElement& g) const {
  for (auto [i, j] : blocked_pairs(eta))
    if (!g.entry(i, j).is_zero()) return false;
  return true;
}

std::vector<GroupElement> PatternGroup::subgroup_members(const ArcDiagram& eta,
                                                         const Int& limit) const {
  std::set<std::pair<int, int>> blocked;
  for (auto pr : blocked_pairs(eta)) blocked.insert(pr);
  std::vector<std::pair<int, int>> open;
  for (const auto& pr : pairs_)
    if (!blocked.count(pr)) open.push_back(pr);
  Int size = int_pow(field_->q(), open.size());
  if (size > limit)
    throw limit_error("subgroup of order " + size.str() + " exceeds the limit " + limit.str());
  std::vector<GroupElement> out;
  std::int64_t q = field_->q();
  std::vector<std::int64_t> digits(open.size(), 0);
  while (true) {
    AlgebraElement x(poset_, field_);
    for (std::size_t k = 0; k < open.size(); ++k)
      if (digits[k] != 0) x.set_entry(open[k].first, open[k].second, field_->element(digits[k]));
    out.emplace_back(std::move(x));
    std::size_t pos = open.size();
    while (pos > 0 && digits[pos - 1] == q - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlgebraElement> PatternGroup::two_sided_orbit(const AlgebraElement& x,
                                                          const Int& limit) const {
  if (x.poset() != poset_) throw value_error("element lives on a different poset");
  std::map<std::string, AlgebraElement> seen;
  std::queue<AlgebraElement> frontier;
  seen.emplace(x.key(), x);
  frontier.push(x);
  while (!frontier.empty()) {
    AlgebraElement cur = frontier.front();
    frontier.pop();
    for (const auto& [i, j] : pairs_) {
      AlgebraElement unit(poset_, field_);
      unit.set_entry(i, j, field_->one());
      for (std::int64_t c = 1; c < field_->q(); ++c) {
        AlgebraElement gen = unit.scaled(field_->element(c));
        AlgebraElement left = cur + AlgebraElement::mul(gen, cur);
        AlgebraElement right = cur + AlgebraElement::mul(cur, gen);
        for (auto& next : {left, right}) {
          if (seen.count(next.key())) continue;
          if (Int(seen.size()) >= limit)
            throw limit_error("orbit exceeds the limit " + limit.str());
          seen.emplace(next.key(), next);
          frontier.push(next);
        }
      }
    }
  }
  std::vector<AlgebraElement> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

std::vector<Functional> PatternGroup::dual_orbit(const Functional& lambda,
                                                 const Int& limit) const {
  if (lambda.poset() != poset_) throw value_error("functional lives on a different poset");
  std::map<std::string, Functional> seen;
  std::queue<Functional> frontier;
  seen.emplace(lambda.key(), lambda);
  frontier.push(lambda);
  while (!frontier.empty()) {
    Functional cur = frontier.front();
    frontier.pop();
    for (const auto& [i, j] : pairs_) {
      for (std::int64_t c = 1; c < field_->q(); ++c) {
        AlgebraElement x(poset_, field_);
        x.set_entry(i, j, field_->element(c));
        GroupElement g(std::move(x));
        Functional left = cur.act_left(g);
        Functional right = cur.act_right(g);
        for (auto& next : {left, right}) {
          if (seen.count(next.key())) continue;
          if (Int(seen.size()) >= limit)
            throw limit_error("orbit exceeds the limit " + limit.str());
          seen.emplace(next.key(), next);
          frontier.push(next);
        }
      }
    }
  }
  std::vector<Functional> out;
  for (auto& [k, v] : seen) out.push_back(v);
  return out;
}

std::pair<GroupElement, GroupElement> project_split(const GroupElement& g,
                                                    const std::vector<std::string>& S,
                                                    const std::vector<std::string>& T) {
  const Poset& poset = g.poset();
  Poset ps = poset.restrict(S);
  Poset pt = poset.restrict(T);
  std::set<std::string> seen(S.begin(), S.end());
  for (const auto& el : T)
    if (!seen.insert(el).second) throw value_error("element '" + el + "' appears on both sides");
  if (static_cast<int>(seen.size()) != poset.size())
    throw value_error("split parts do not cover the poset");
  AlgebraElement xs(ps, g.field());
  AlgebraElement xt(pt, g.field());
  for (const auto& [ij, v] : g.f().entries()) {
    const std::string& a = poset.label(ij.first);
    const std::string& b = poset.label(ij.second);
    if (ps.contains(a) && ps.contains(b))
      xs.set_entry(ps.index_of(a), ps.index_of(b), v);
    else if (pt.contains(a) && pt.contains(b))
      xt.set_entry(pt.index_of(a), pt.index_of(b), v);
  }
  return {GroupElement(std::move(xs)), GroupElement(std::move(xt))};
}

GroupElement embed_split(const GroupElement& u, const GroupElement& v, const Poset& ambient) {
  if (!u.field()->same(*v.field())) throw value_error("embedding across different fields");
  if (u.poset() != ambient.restrict(u.poset().elements()) ||
      v.poset() != ambient.restrict(v.poset().elements()))
    throw value_error("embedding parts are not restrictions of the ambient poset");
  for (const auto& el : u.poset().elements())
    if (v.poset().contains(el)) throw value_error("element '" + el + "' appears on both sides");
  if (u.poset().size() + v.poset().size() != ambient.size())
    throw value_error("embedding parts do not cover the ambient poset");
  AlgebraElement x(ambient, u.field());
  for (const auto& [ij, val] : u.f().entries())
    x.set_entry(ambient.index_of(u.poset().label(ij.first)),
                ambient.index_of(u.poset().label(ij.second)), val);
  for (const auto& [ij, val] : v.f().entries())
    x.set_entry(ambient.index_of(v.poset().label(ij.first)),
                ambient.index_of(v.poset().label(ij.second)), val);
  return GroupElement(std::move(x));
}

}  // namespace nnscf
