#include "discoparse/symbol.h"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace discoparse {
namespace {

struct Interner {
  std::shared_mutex mu;
  std::deque<std::string> strings{std::string()};
  std::unordered_map<std::string_view, uint32_t> ids{{strings.front(), 0}};
};

Interner& interner() {
  static Interner* table = new Interner;
  return *table;
}

}  // namespace

Symbol::Symbol(std::string_view s) {
  Interner& t = interner();
  {
    std::shared_lock lock(t.mu);
    auto it = t.ids.find(s);
    if (it != t.ids.end()) {
      id_ = it->second;
      return;
    }
  }
  std::unique_lock lock(t.mu);
  auto it = t.ids.find(s);
  if (it != t.ids.end()) {
    id_ = it->second;
    return;
  }
  id_ = static_cast<uint32_t>(t.strings.size());
  t.strings.emplace_back(s);
  t.ids.emplace(t.strings.back(), id_);
}

const std::string& Symbol::str() const {
  Interner& t = interner();
  std::shared_lock lock(t.mu);
  return t.strings[id_];
}

}  // namespace discoparse
