#ifndef DISCOPARSE_CONSTITUENTS_H_
#define DISCOPARSE_CONSTITUENTS_H_

#include <optional>
#include <string>
#include <vector>

#include "discoparse/index_set.h"
#include "discoparse/symbol.h"
#include "discoparse/tree.h"

namespace discoparse {

struct Constituent {
  Symbol label;
  IndexSet indices;

  std::string to_string() const;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

// Orders by max index, then size, then bits: a linear extension of <=_right.
bool right_order_less(const IndexSet& a, const IndexSet& b);

// Set of labelled index sets over a sentence of `length` tokens. No two
// members share an index set.
class ConstituentSet {
 public:
  explicit ConstituentSet(int length = 0) : length_(length) {}
  // Throws Error(kUnaryChainPresent) on a repeated index set.
  ConstituentSet(std::vector<Constituent> members, int length);

  int length() const { return length_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  // Sorted by right_order_less on the index sets.
  const std::vector<Constituent>& members() const { return members_; }

  // False (and no change) if the index set is already present.
  bool insert(const Constituent& c);
  bool contains(const Constituent& c) const;
  bool contains(const IndexSet& s) const { return find(s) != nullptr; }
  const Constituent* find(const IndexSet& s) const;
  // "{<A,{1,2}>, <S,{1,2,3}>}" in member order.
  std::string to_string() const;

  friend bool operator==(const ConstituentSet&,
                         const ConstituentSet&) = default;

 private:
  std::vector<Constituent> members_;
  int length_;
};

struct ConstituentReport {
  bool consistent = false;
  bool rooted = false;
  bool spanning = false;
  bool complete = false;
};

ConstituentReport validate_constituent_set(const ConstituentSet& k);

// The unique member s' with s ⊂_max s', if any.
std::optional<Constituent> max_subset_parent(const ConstituentSet& k,
                                             const IndexSet& s);

// Throws Error(kUnaryChainPresent) if two internal nodes share an index set.
ConstituentSet tree_to_constituents(const Tree& tree);

// Throws Error(kNotComplete). `tokens` is optional; when given it must have
// one entry per position.
Tree constituents_to_tree(const ConstituentSet& k,
                          const std::vector<std::string>& tokens = {});

}  // namespace discoparse

#endif  // DISCOPARSE_CONSTITUENTS_H_
