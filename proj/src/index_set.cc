#include "discoparse/index_set.h"

#include <bit>

namespace discoparse {

IndexSet::IndexSet(std::initializer_list<int> indices) {
  for (int i : indices) insert(i);
}

IndexSet::IndexSet(const std::vector<int>& indices) {
  for (int i : indices) insert(i);
}

IndexSet IndexSet::span(int lo, int hi) {
  IndexSet s;
  for (int i = lo; i <= hi; ++i) s.insert(i);
  return s;
}

void IndexSet::insert(int i) {
  size_t w = static_cast<size_t>(i) / 64;
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] |= uint64_t{1} << (i % 64);
}

void IndexSet::erase(int i) {
  size_t w = static_cast<size_t>(i) / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(uint64_t{1} << (i % 64));
  trim();
}

bool IndexSet::contains(int i) const {
  size_t w = static_cast<size_t>(i) / 64;
  return w < words_.size() && (words_[w] >> (i % 64)) & 1;
}

int IndexSet::size() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

int IndexSet::min() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  }
  return 0;
}

int IndexSet::max() const {
  if (words_.empty()) return 0;
  size_t w = words_.size() - 1;
  return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
}

bool IndexSet::subset_of(const IndexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
  size_t n = std::min(words_.size(), other.words_.size());
  for (size_t w = 0; w < n; ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

IndexSet IndexSet::operator|(const IndexSet& other) const {
  IndexSet out = *this;
  out |= other;
  return out;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (size_t w = 0; w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  IndexSet out;
  size_t n = std::min(words_.size(), other.words_.size());
  out.words_.resize(n);
  for (size_t w = 0; w < n; ++w) out.words_[w] = words_[w] & other.words_[w];
  out.trim();
  return out;
}

IndexSet IndexSet::operator-(const IndexSet& other) const {
  IndexSet out = *this;
  size_t n = std::min(words_.size(), other.words_.size());
  for (size_t w = 0; w < n; ++w) out.words_[w] &= ~other.words_[w];
  out.trim();
  return out;
}

std::vector<int> IndexSet::to_vector() const {
  std::vector<int> out;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string IndexSet::join(const char* sep) const {
  std::string out;
  for (int i : to_vector()) {
    if (!out.empty()) out += sep;
    out += std::to_string(i);
  }
  return out;
}

std::string IndexSet::to_string() const { return "{" + join(",") + "}"; }

size_t IndexSet::hash() const {
  size_t h = words_.size();
  for (uint64_t w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h >> 17));
  return h;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (a.words_.size() != b.words_.size()) {
    return a.words_.size() <=> b.words_.size();
  }
  for (size_t w = a.words_.size(); w-- > 0;) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

void IndexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
  return os << s.to_string();
}

}  // namespace discoparse
