#ifndef DISCOPARSE_SYMBOL_H_
#define DISCOPARSE_SYMBOL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace discoparse {

// Interned string. Ids are process-wide and assigned in first-seen order;
// the interner is guarded so symbols may be created from any thread.
class Symbol {
 public:
  Symbol() : id_(0) {}  // the empty string
  explicit Symbol(std::string_view s);

  const std::string& str() const;
  uint32_t id() const { return id_; }
  bool empty() const { return id_ == 0; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  uint32_t id_;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) {
  return os << s.str();
}

}  // namespace discoparse

template <>
struct std::hash<discoparse::Symbol> {
  size_t operator()(discoparse::Symbol s) const noexcept { return s.id(); }
};

#endif  // DISCOPARSE_SYMBOL_H_
