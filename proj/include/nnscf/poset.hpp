#pragma once

#include "nnscf/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nnscf {

// Finite poset on labeled elements. The stored element order is the canonical
// total order used for all input and output: a stable topological sort of the
// construction order. It is always a linear extension of the strict order, so
// i < j positionally whenever element i precedes element j in the poset.
class Poset {
 public:
  Poset();  // empty poset
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<std::string>& elements() const { return elems_; }
  const std::string& label(int i) const { return elems_.at(static_cast<std::size_t>(i)); }
  int index_of(const std::string& label) const;  // value_error on unknown label
  bool contains(const std::string& label) const;

  bool less(int i, int j) const;
  bool less_eq(int i, int j) const { return i == j || less(i, j); }
  bool less(const std::string& a, const std::string& b) const;

  std::vector<std::pair<int, int>> strict_pairs() const;  // lex by position
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;  // transitive reduction
  bool is_linear() const;

  // Induced subposet; keeps the ambient canonical order.
  Poset restrict(const std::vector<std::string>& subset) const;
  // Side-by-side poset with every left element below every right element.
  static Poset concat(const Poset& left, const Poset& right);
  // All (S, T) with *this == concat(restrict(S), restrict(T)) and S, T
  // nonempty, listed by increasing bitmask over canonical positions.
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> splits() const;
  std::vector<std::vector<std::string>> linear_extensions(const Int& limit) const;

  // Image under a label bijection; the relation and canonical order carry over.
  Poset relabeled(const std::map<std::string, std::string>& bijection) const;

  bool operator==(const Poset& rhs) const;
  bool operator!=(const Poset& rhs) const { return !(*this == rhs); }
  bool operator<(const Poset& rhs) const;  // canonical key order

  std::string to_string() const;  // "{1<2, 1<3}" over covers, "{1,2,3 : ...}"

 private:
  std::vector<std::string> elems_;
  std::vector<std::vector<bool>> lt_;
  std::map<std::string, int> index_;
};

}  // namespace nnscf
