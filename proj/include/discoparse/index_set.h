#ifndef DISCOPARSE_INDEX_SET_H_
#define DISCOPARSE_INDEX_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace discoparse {

// Set of 1-based token positions, stored as a bitset. Trailing zero words are
// always trimmed, so equal sets have equal storage.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> indices);
  explicit IndexSet(const std::vector<int>& indices);

  // {lo, ..., hi}; empty when hi < lo.
  static IndexSet span(int lo, int hi);

  void insert(int i);
  void erase(int i);
  bool contains(int i) const;

  int size() const;
  bool empty() const { return words_.empty(); }
  // 0 for the empty set.
  int min() const;
  int max() const;

  bool subset_of(const IndexSet& other) const;
  bool proper_subset_of(const IndexSet& other) const {
    return *this != other && subset_of(other);
  }
  bool intersects(const IndexSet& other) const;
  // No gap between min and max.
  bool contiguous() const { return empty() || max() - min() + 1 == size(); }

  IndexSet operator|(const IndexSet& other) const;
  IndexSet operator&(const IndexSet& other) const;
  IndexSet operator-(const IndexSet& other) const;
  IndexSet& operator|=(const IndexSet& other);

  std::vector<int> to_vector() const;
  // "1,2,3"
  std::string join(const char* sep = ",") const;
  // "{1,2,3}"
  std::string to_string() const;

  size_t hash() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.words_ == b.words_;
  }
  // Total order on sets, numeric on the underlying bit pattern.
  friend std::strong_ordering operator<=>(const IndexSet& a,
                                          const IndexSet& b);

 private:
  void trim();

  boost::container::small_vector<uint64_t, 2> words_;
};

std::ostream& operator<<(std::ostream& os, const IndexSet& s);

}  // namespace discoparse

template <>
struct std::hash<discoparse::IndexSet> {
  size_t operator()(const discoparse::IndexSet& s) const noexcept {
    return s.hash();
  }
};

#endif  // DISCOPARSE_INDEX_SET_H_
