// Exhaustive completion search for the stack-free system.
#ifndef DISCOPARSE_TESTS_SUPPORT_SF_BRUTE_H_
#define DISCOPARSE_TESTS_SUPPORT_SF_BRUTE_H_

#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "discoparse/constituents.h"
#include "discoparse/sf.h"

namespace discoparse::testing {

inline int count_matched(const ConstituentSet& k, const ConstituentSet& gold) {
  int m = 0;
  for (const Constituent& c : k.members()) m += gold.contains(c) ? 1 : 0;
  return m;
}

// 2m / (p + g) as an exact fraction (numerator, denominator).
struct Fraction {
  long num = 0;
  long den = 1;
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

inline Fraction f1_fraction(int matched, int predicted, int gold) {
  if (predicted + gold == 0) return {1, 1};
  return {2L * matched, static_cast<long>(predicted + gold)};
}

// Completions only depend on memory, focus, i and parity; labels only matter
// as gold-or-not, so a wrong label stands for every non-gold choice.
class SfBrute {
 public:
  explicit SfBrute(const ConstituentSet& gold) : gold_(gold) {}

  // Achievable (matched, predicted) increments over all completions.
  const std::set<std::pair<int, int>>& outcomes(const SfConfig& c) {
    Key key = key_of(c);
    if (auto it = outcomes_.find(key); it != outcomes_.end()) return it->second;
    std::set<std::pair<int, int>> out;
    if (!c.structural_step()) {
      bool gold_focus = gold_.contains(c.focus);
      bool done = c.i == c.j && c.memory.empty();
      SfConfig next = c;
      ++next.step;
      if (done) {
        out.insert({gold_focus ? 1 : 0, 1});
        out.insert({0, 1});
      } else {
        for (const auto& [m, p] : outcomes(next)) {
          out.insert({m, p});
          out.insert({m, p + 1});
          if (gold_focus) out.insert({m + 1, p + 1});
        }
      }
    } else {
      for (const SfConfig& next : structural_successors(c)) {
        for (const auto& pr : outcomes(next)) out.insert(pr);
      }
    }
    return outcomes_[key] = std::move(out);
  }

  // Index sets that some completion can label.
  const std::set<IndexSet>& labelable(const SfConfig& c) {
    Key key = key_of(c);
    if (auto it = labelable_.find(key); it != labelable_.end()) {
      return it->second;
    }
    std::set<IndexSet> out;
    if (!c.structural_step()) {
      out.insert(c.focus);
      if (!(c.i == c.j && c.memory.empty())) {
        SfConfig next = c;
        ++next.step;
        const auto& rest = labelable(next);
        out.insert(rest.begin(), rest.end());
      }
    } else {
      for (const SfConfig& next : structural_successors(c)) {
        const auto& rest = labelable(next);
        out.insert(rest.begin(), rest.end());
      }
    }
    return labelable_[key] = std::move(out);
  }

  bool reachable(const SfConfig& c, const Constituent& target) {
    if (c.k.contains(target.indices)) return false;
    return labelable(c).count(target.indices) > 0;
  }

  Fraction best_f1(const SfConfig& c) {
    int m0 = count_matched(c.k, gold_);
    int p0 = c.k.size();
    Fraction best{0, 1};
    bool any = false;
    for (const auto& [m, p] : outcomes(c)) {
      Fraction f = f1_fraction(m0 + m, p0 + p, gold_.size());
      if (!any || best < f) best = f;
      any = true;
    }
    return best;
  }

 private:
  using Key = std::tuple<std::vector<IndexSet>, IndexSet, int, bool>;

  static Key key_of(const SfConfig& c) {
    return {c.memory, c.focus, c.i, c.structural_step()};
  }

  static std::vector<SfConfig> structural_successors(const SfConfig& c) {
    std::vector<SfConfig> out;
    for (const Action& a : legal(c, {})) out.push_back(apply(c, a));
    return out;
  }

  const ConstituentSet& gold_;
  std::map<Key, std::set<std::pair<int, int>>> outcomes_;
  std::map<Key, std::set<IndexSet>> labelable_;
};

}  // namespace discoparse::testing

#endif  // DISCOPARSE_TESTS_SUPPORT_SF_BRUTE_H_
