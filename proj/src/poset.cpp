#include "nnscf/poset.hpp"

#include "nnscf/errors.hpp"

#include <algorithm>
#include <set>

namespace nnscf {

Poset::Poset() = default;

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].empty()) throw value_error("empty element label");
    if (!idx.emplace(elements[i], static_cast<int>(i)).second)
      throw value_error("duplicate element label '" + elements[i] + "'");
  }
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> lt(static_cast<std::size_t>(n),
                                    std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [a, b] : covers) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end()) throw value_error("unknown element '" + a + "' in cover");
    if (ib == idx.end()) throw value_error("unknown element '" + b + "' in cover");
    if (ia->second == ib->second) throw value_error("cover relates '" + a + "' to itself");
    lt[static_cast<std::size_t>(ia->second)][static_cast<std::size_t>(ib->second)] = true;
  }
  // Transitive closure, then cycle detection.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!lt[i][k]) continue;
      for (int j = 0; j < n; ++j)
        if (lt[k][j]) lt[i][j] = true;
    }
  for (int i = 0; i < n; ++i)
    if (lt[i][i]) throw value_error("cycle through element '" + elements[i] + "'");

  // Stable topological sort: repeatedly take the earliest element whose
  // predecessors are all placed.
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (int j = 0; j < n; ++j)
        if (!placed[j] && lt[j][i]) {
          ready = false;
          break;
        }
      if (ready) pick = i;
    }
    if (pick < 0) throw check_error("topological sort failed");
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
  }

  elems_.reserve(static_cast<std::size_t>(n));
  lt_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    elems_.push_back(elements[static_cast<std::size_t>(order[i])]);
    index_[elems_.back()] = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      lt_[i][j] = lt[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(order[j])];
}

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw value_error("unknown element '" + label + "'");
  return it->second;
}

bool Poset::contains(const std::string& label) const { return index_.count(label) != 0; }

bool Poset::less(int i, int j) const {
  return lt_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
}

bool Poset::less(const std::string& a, const std::string& b) const {
  return less(index_of(a), index_of(b));
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::string, std::string>> Poset::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < size() && direct; ++k)
        if (less(i, k) && less(k, j)) direct = false;
      if (direct) out.emplace_back(label(i), label(j));
    }
  return out;
}

bool Poset::is_linear() const {
  for (int i = 0; i + 1 < size(); ++i)
    if (!less(i, i + 1)) return false;
  return true;
}

Poset Poset::restrict(const std::vector<std::string>& subset) const {
  std::set<std::string> want;
  for (const auto& s : subset) {
    if (!contains(s)) throw value_error("unknown element '" + s + "' in restriction");
    if (!want.insert(s).second) throw value_error("duplicate element '" + s + "' in restriction");
  }
  std::vector<std::string> kept;
  for (const auto& el : elems_)
    if (want.count(el)) kept.push_back(el);
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& a : kept)
    for (const auto& b : kept)
      if (less(a, b)) relations.emplace_back(a, b);
  return Poset(kept, relations);
}

Poset Poset::concat(const Poset& left, const Poset& right) {
  std::vector<std::string> elements = left.elems_;
  for (const auto& el : right.elems_) {
    if (left.contains(el)) throw value_error("element '" + el + "' appears on both sides");
    elements.push_back(el);
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& a : left.elems_)
    for (const auto& b : left.elems_)
      if (left.less(a, b)) relations.emplace_back(a, b);
  for (const auto& a : right.elems_)
    for (const auto& b : right.elems_)
      if (right.less(a, b)) relations.emplace_back(a, b);
  for (const auto& a : left.elems_)
    for (const auto& b : right.elems_) relations.emplace_back(a, b);
  return Poset(elements, relations);
}

std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> Poset::splits() const {
  int n = size();
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
  if (n == 0 || n > 20) {
    if (n > 20) throw limit_error("split search needs 2^" + std::to_string(n) + " candidates");
    return out;
  }
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int j = 0; j < n && ok; ++j)
        if (!(mask >> j & 1u) && !less(i, j)) ok = false;
    }
    if (!ok) continue;
    std::vector<std::string> s, t;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? s : t).push_back(label(i));
    out.emplace_back(std::move(s), std::move(t));
  }
  return out;
}

std::vector<std::vector<std::string>> Poset::linear_extensions(const Int& limit) const {
  std::vector<std::vector<std::string>> out;
  std::vector<bool> used(static_cast<std::size_t>(size()), false);
  std::vector<std::string> current;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == size()) {
      if (Int(out.size()) >= limit)
        throw limit_error("more than " + limit.str() + " linear extensions");
      out.push_back(current);
      return;
    }
    for (int i = 0; i < size(); ++i) {
      if (used[i]) continue;
      bool minimal = true;
      for (int j = 0; j < size() && minimal; ++j)
        if (!used[j] && less(j, i)) minimal = false;
      if (!minimal) continue;
      used[i] = true;
      current.push_back(label(i));
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

Poset Poset::relabeled(const std::map<std::string, std::string>& bijection) const {
  std::vector<std::string> elements;
  std::set<std::string> seen;
  for (const auto& el : elems_) {
    auto it = bijection.find(el);
    if (it == bijection.end()) throw value_error("relabeling misses element '" + el + "'");
    if (!seen.insert(it->second).second)
      throw value_error("relabeling is not injective at '" + it->second + "'");
    elements.push_back(it->second);
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) relations.emplace_back(elements[i], elements[j]);
  return Poset(elements, relations);
}

bool Poset::operator==(const Poset& rhs) const {
  return elems_ == rhs.elems_ && lt_ == rhs.lt_;
}

bool Poset::operator<(const Poset& rhs) const {
  if (elems_ != rhs.elems_) return elems_ < rhs.elems_;
  return lt_ < rhs.lt_;
}

std::string Poset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += elems_[i];
  }
  out += " : ";
  auto covers = cover_pairs();
  for (std::size_t i = 0; i < covers.size(); ++i) {
    if (i) out += ", ";
    out += covers[i].first + "<" + covers[i].second;
  }
  return out + "}";
}

}  // namespace nnscf
