#include "nnscf/arc_diagram.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace nnscf {

namespace {

using Key = std::tuple<int, int, std::int64_t>;

Key arc_key(const Poset& poset, const Arc& arc) {
  return {poset.index_of(arc.from), poset.index_of(arc.to), arc.label.index()};
}

}  // namespace

ArcDiagram::ArcDiagram(Poset poset, FieldPtr field, std::vector<Arc> arcs)
    : poset_(std::move(poset)), field_(std::move(field)), arcs_(std::move(arcs)) {
  if (!field_) throw value_error("arc diagram requires a field");
  std::set<std::pair<int, int>> seen;
  for (const auto& arc : arcs_) {
    int i = poset_.index_of(arc.from);
    int j = poset_.index_of(arc.to);
    if (!arc.label.field()->same(*field_))
      throw value_error("arc " + arc.from + "~" + arc.to + " is labeled in a different field");
    if (arc.label.is_zero())
      throw value_error("arc " + arc.from + "~" + arc.to + " has zero label");
    if (!poset_.less(i, j))
      throw value_error("arc " + arc.from + "~" + arc.to +
                        " does not join strictly increasing elements");
    if (!seen.emplace(i, j).second)
      throw value_error("duplicate arc " + arc.from + "~" + arc.to);
  }
  for (const auto& [i, j] : seen) {
    for (int k = 0; k < poset_.size(); ++k) {
      if (!(poset_.less(i, k) && poset_.less(k, j))) continue;
      if (seen.count({i, k}))
        throw value_error("arcs " + poset_.label(i) + "~" + poset_.label(k) + " and " +
                          poset_.label(i) + "~" + poset_.label(j) +
                          " share a left endpoint inside one interval");
      if (seen.count({k, j}))
        throw value_error("arcs " + poset_.label(k) + "~" + poset_.label(j) + " and " +
                          poset_.label(i) + "~" + poset_.label(j) +
                          " share a right endpoint inside one interval");
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), [&](const Arc& a, const Arc& b) {
    return arc_key(poset_, a) < arc_key(poset_, b);
  });
}

ArcDiagram ArcDiagram::empty(Poset poset, FieldPtr field) {
  return ArcDiagram(std::move(poset), std::move(field), {});
}

const FieldElement* ArcDiagram::label_at(int i, int j) const {
  for (const auto& arc : arcs_)
    if (poset_.index_of(arc.from) == i && poset_.index_of(arc.to) == j) return &arc.label;
  return nullptr;
}

bool ArcDiagram::is_nonnesting() const {
  for (const auto& outer : arcs_) {
    int i = poset_.index_of(outer.from);
    int j = poset_.index_of(outer.to);
    for (const auto& inner : arcs_) {
      int k = poset_.index_of(inner.from);
      int l = poset_.index_of(inner.to);
      if (poset_.less(i, k) && poset_.less(l, j)) return false;
    }
  }
  return true;
}

ArcDiagram ArcDiagram::sml() const {
  std::vector<Arc> kept;
  for (const auto& outer : arcs_) {
    int i = poset_.index_of(outer.from);
    int j = poset_.index_of(outer.to);
    bool contains_arc = false;
    for (const auto& inner : arcs_) {
      int k = poset_.index_of(inner.from);
      int l = poset_.index_of(inner.to);
      if (poset_.less(i, k) && poset_.less(l, j)) {
        contains_arc = true;
        break;
      }
    }
    if (!contains_arc) kept.push_back(outer);
  }
  return ArcDiagram(poset_, field_, std::move(kept));
}

ArcDiagram ArcDiagram::big() const {
  std::vector<Arc> kept;
  for (const auto& inner : arcs_) {
    int k = poset_.index_of(inner.from);
    int l = poset_.index_of(inner.to);
    bool inside_arc = false;
    for (const auto& outer : arcs_) {
      int i = poset_.index_of(outer.from);
      int j = poset_.index_of(outer.to);
      if (poset_.less(i, k) && poset_.less(l, j)) {
        inside_arc = true;
        break;
      }
    }
    if (!inside_arc) kept.push_back(inner);
  }
  return ArcDiagram(poset_, field_, std::move(kept));
}

ArcDiagram ArcDiagram::restrict(const std::vector<std::string>& subset) const {
  Poset sub = poset_.restrict(subset);
  std::vector<Arc> kept;
  for (const auto& arc : arcs_)
    if (sub.contains(arc.from) && sub.contains(arc.to)) kept.push_back(arc);
  return ArcDiagram(std::move(sub), field_, std::move(kept));
}

ArcDiagram ArcDiagram::disjoint_union(const ArcDiagram& a, const ArcDiagram& b,
                                      const Poset& ambient) {
  if (!a.field_->same(*b.field_)) throw value_error("disjoint union across different fields");
  std::vector<std::string> sa = a.poset_.elements();
  std::vector<std::string> sb = b.poset_.elements();
  for (const auto& el : sa)
    if (b.poset_.contains(el)) throw value_error("element '" + el + "' appears on both sides");
  if (a.poset_ != ambient.restrict(sa) || b.poset_ != ambient.restrict(sb))
    throw value_error("disjoint union parts are not restrictions of the ambient poset");
  std::vector<Arc> arcs = a.arcs_;
  arcs.insert(arcs.end(), b.arcs_.begin(), b.arcs_.end());
  return ArcDiagram(ambient, a.field_, std::move(arcs));
}

ArcDiagram ArcDiagram::relabeled(const Poset& image_poset,
                                 const std::map<std::string, std::string>& bijection) const {
  if (poset_.relabeled(bijection) != image_poset)
    throw value_error("relabeling does not carry the poset onto the image poset");
  std::vector<Arc> arcs;
  for (const auto& arc : arcs_)
    arcs.push_back({bijection.at(arc.from), bijection.at(arc.to), arc.label});
  return ArcDiagram(image_poset, field_, std::move(arcs));
}

std::vector<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>>
ArcDiagram::crossing_set() const {
  if (!poset_.is_linear()) throw value_error("crossings are defined on linear orders only");
  std::vector<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>>
      out;
  for (const auto& a : arcs_) {
    int i = poset_.index_of(a.from);
    int k = poset_.index_of(a.to);
    for (const auto& b : arcs_) {
      int j = poset_.index_of(b.from);
      int l = poset_.index_of(b.to);
      if (i < j && j < k && k < l)
        out.push_back({{a.from, a.to}, {b.from, b.to}});
    }
  }
  return out;
}

int ArcDiagram::crossing_count() const { return static_cast<int>(crossing_set().size()); }

int ArcDiagram::nesting_count(const ArcDiagram& inner, const ArcDiagram& outer) {
  if (inner.poset_ != outer.poset_) throw value_error("nesting count across different posets");
  if (!inner.poset_.is_linear())
    throw value_error("nesting count is defined on linear orders only");
  int count = 0;
  for (const auto& in : inner.arcs_) {
    int j = inner.poset_.index_of(in.from);
    int k = inner.poset_.index_of(in.to);
    for (const auto& out : outer.arcs_) {
      int i = outer.poset_.index_of(out.from);
      int l = outer.poset_.index_of(out.to);
      if (i < j && k < l) ++count;
    }
  }
  return count;
}

bool ArcDiagram::subset_of(const ArcDiagram& other) const {
  for (const auto& arc : arcs_) {
    const FieldElement* lab =
        other.label_at(other.poset_.index_of(arc.from), other.poset_.index_of(arc.to));
    if (lab == nullptr || *lab != arc.label) return false;
  }
  return true;
}

bool ArcDiagram::operator==(const ArcDiagram& rhs) const {
  if (poset_ != rhs.poset_ || !field_->same(*rhs.field_)) return false;
  if (arcs_.size() != rhs.arcs_.size()) return false;
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    if (arc_key(poset_, arcs_[i]) != arc_key(rhs.poset_, rhs.arcs_[i])) return false;
  return true;
}

bool ArcDiagram::operator<(const ArcDiagram& rhs) const {
  if (poset_ != rhs.poset_) return poset_ < rhs.poset_;
  std::vector<Key> a, b;
  for (const auto& arc : arcs_) a.push_back(arc_key(poset_, arc));
  for (const auto& arc : rhs.arcs_) b.push_back(arc_key(rhs.poset_, arc));
  return a < b;
}

std::string ArcDiagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) out += ", ";
    out += arcs_[i].from + "~" + arcs_[i].to + ":" + arcs_[i].label.to_string();
  }
  return out + "}";
}

namespace {

// Shape enumeration: subsets of strict pairs closed under the set-partition
// condition and, optionally, nonnesting. Validity is downward closed, so a
// depth-first include/skip scan visits only viable prefixes.
struct ShapeEnumerator {
  const Poset& poset;
  bool nonnesting;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<std::pair<int, int>>> shapes;

  bool compatible(const std::vector<std::pair<int, int>>& shape, std::pair<int, int> next) const {
    auto [f, t] = next;
    for (auto [f2, t2] : shape) {
      if (f == f2 && (poset.less(t, t2) || poset.less(t2, t))) return false;
      if (t == t2 && (poset.less(f, f2) || poset.less(f2, f))) return false;
      if (nonnesting) {
        if (poset.less(f, f2) && poset.less(t2, t)) return false;
        if (poset.less(f2, f) && poset.less(t, t2)) return false;
      }
    }
    return true;
  }

  void run(std::size_t from, std::vector<std::pair<int, int>>& shape, const Int& limit) {
    if (Int(shapes.size()) >= limit) throw limit_error("more than " + limit.str() + " diagrams");
    shapes.push_back(shape);
    for (std::size_t k = from; k < pairs.size(); ++k) {
      if (!compatible(shape, pairs[k])) continue;
      shape.push_back(pairs[k]);
      run(k + 1, shape, limit);
      shape.pop_back();
    }
  }
};

std::vector<ArcDiagram> enumerate_diagrams(const Poset& poset, const FieldPtr& field,
                                           bool nonnesting, const Int& limit) {
  ShapeEnumerator en{poset, nonnesting, poset.strict_pairs(), {}};
  std::vector<std::pair<int, int>> shape;
  en.run(0, shape, limit);

  std::vector<ArcDiagram> out;
  Int count = 0;
  std::int64_t nonzero = field->q() - 1;
  for (const auto& sh : en.shapes) {
    Int labelings = int_pow(nonzero, sh.size());
    count += labelings;
    if (count > limit) throw limit_error("more than " + limit.str() + " diagrams");
    std::vector<std::int64_t> digits(sh.size(), 1);
    while (true) {
      std::vector<Arc> arcs;
      arcs.reserve(sh.size());
      for (std::size_t i = 0; i < sh.size(); ++i)
        arcs.push_back(
            {poset.label(sh[i].first), poset.label(sh[i].second), field->element(digits[i])});
      out.emplace_back(poset, field, std::move(arcs));
      std::size_t pos = sh.size();
      while (pos > 0 && digits[pos - 1] == nonzero) digits[--pos] = 1;
      if (pos == 0) break;
      ++digits[pos - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ArcDiagram> enumerate_partitions(const Poset& poset, const FieldPtr& field,
                                             const Int& limit) {
  return enumerate_diagrams(poset, field, false, limit);
}

std::vector<ArcDiagram> enumerate_nonnesting(const Poset& poset, const FieldPtr& field,
                                             const Int& limit) {
  return enumerate_diagrams(poset, field, true, limit);
}

std::vector<ArcDiagram> proj_diagrams(const ArcDiagram& eta, const std::vector<std::string>& S,
                                      const Int& limit) {
  const Poset& ambient = eta.poset();
  ArcDiagram base = eta.restrict(S);
  std::vector<ArcDiagram> out;
  for (const auto& cand : enumerate_nonnesting(base.poset(), eta.field(), limit)) {
    if (!base.subset_of(cand)) continue;
    bool ok = true;
    for (const auto& arc : cand.arcs()) {
      if (base.label_at(base.poset().index_of(arc.from), base.poset().index_of(arc.to)))
        continue;  // an arc of eta itself
      int i = ambient.index_of(arc.from);
      int j = ambient.index_of(arc.to);
      bool under = false;
      for (const auto& big_arc : eta.arcs()) {
        int k = ambient.index_of(big_arc.from);
        int l = ambient.index_of(big_arc.to);
        if (ambient.less_eq(k, i) && ambient.less_eq(j, l)) {
          under = true;
          break;
        }
      }
      if (!under) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(cand);
  }
  return out;
}

namespace {

// Splits (S, T) of the diagram's poset with no arc from S to T.
std::vector<std::vector<std::string>> compatible_cuts(const ArcDiagram& diagram) {
  std::vector<std::vector<std::string>> cuts;
  for (const auto& [s, t] : diagram.poset().splits()) {
    std::set<std::string> left(s.begin(), s.end());
    bool crossed = false;
    for (const auto& arc : diagram.arcs()) {
      if (left.count(arc.from) != left.count(arc.to)) {
        crossed = true;
        break;
      }
    }
    if (!crossed) cuts.push_back(s);
  }
  return cuts;
}

}  // namespace

bool is_atomic(const ArcDiagram& diagram) {
  if (diagram.poset().size() == 0) return false;  // the empty diagram is the unit, not an atom
  return compatible_cuts(diagram).empty();
}

std::vector<ArcDiagram> atomic_factors(const ArcDiagram& diagram) {
  if (diagram.poset().size() == 0) return {};
  // Compatible cuts are totally ordered by inclusion; using all of them at
  // once yields the finest factorization, whose pieces are atomic.
  auto cuts = compatible_cuts(diagram);
  std::sort(cuts.begin(), cuts.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<ArcDiagram> factors;
  std::set<std::string> used;
  for (const auto& cut : cuts) {
    std::vector<std::string> piece;
    for (const auto& el : cut)
      if (!used.count(el)) piece.push_back(el);
    factors.push_back(diagram.restrict(piece));
    used.insert(cut.begin(), cut.end());
  }
  std::vector<std::string> rest;
  for (const auto& el : diagram.poset().elements())
    if (!used.count(el)) rest.push_back(el);
  factors.push_back(diagram.restrict(rest));
  return factors;
}

}  // namespace nnscf
