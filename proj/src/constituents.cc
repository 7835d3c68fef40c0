#include "discoparse/constituents.h"

#include <algorithm>

#include "discoparse/error.h"

namespace discoparse {

std::string Constituent::to_string() const {
  return "<" + label.str() + "," + indices.to_string() + ">";
}

std::string ConstituentSet::to_string() const {
  std::string out = "{";
  for (size_t m = 0; m < members_.size(); ++m) {
    out += (m ? ", " : "") + members_[m].to_string();
  }
  return out + "}";
}

bool right_order_less(const IndexSet& a, const IndexSet& b) {
  if (a.max() != b.max()) return a.max() < b.max();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

ConstituentSet::ConstituentSet(std::vector<Constituent> members, int length)
    : length_(length) {
  for (const Constituent& c : members) {
    if (!insert(c)) {
      throw Error(ErrorCode::kUnaryChainPresent,
                  "index set " + c.indices.to_string() + " occurs twice");
    }
  }
}

bool ConstituentSet::insert(const Constituent& c) {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), c.indices,
      [](const Constituent& m, const IndexSet& s) {
        return right_order_less(m.indices, s);
      });
  if (it != members_.end() && it->indices == c.indices) return false;
  members_.insert(it, c);
  return true;
}

const Constituent* ConstituentSet::find(const IndexSet& s) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), s,
      [](const Constituent& m, const IndexSet& x) {
        return right_order_less(m.indices, x);
      });
  if (it != members_.end() && it->indices == s) return &*it;
  return nullptr;
}

bool ConstituentSet::contains(const Constituent& c) const {
  const Constituent* m = find(c.indices);
  return m != nullptr && m->label == c.label;
}

ConstituentReport validate_constituent_set(const ConstituentSet& k) {
  ConstituentReport r;
  const auto& ms = k.members();
  r.consistent = true;
  for (size_t a = 0; a < ms.size() && r.consistent; ++a) {
    if (ms[a].indices.empty()) r.consistent = false;
    for (size_t b = a + 1; b < ms.size(); ++b) {
      const IndexSet& x = ms[a].indices;
      const IndexSet& y = ms[b].indices;
      if (x.intersects(y) && !x.subset_of(y) && !y.subset_of(x)) {
        r.consistent = false;
        break;
      }
    }
  }
  IndexSet all;
  for (const Constituent& c : ms) all |= c.indices;
  for (const Constituent& c : ms) {
    if (c.indices == all) r.rooted = true;
  }
  r.spanning = k.length() > 0 && all == IndexSet::span(1, k.length());
  r.complete = r.consistent && r.rooted && r.spanning;
  return r;
}

std::optional<Constituent> max_subset_parent(const ConstituentSet& k,
                                             const IndexSet& s) {
  // Members are sorted by (max, size), so the first strict superset with the
  // smallest size is the minimal one in a consistent set.
  const Constituent* best = nullptr;
  for (const Constituent& c : k.members()) {
    if (s.proper_subset_of(c.indices) &&
        (best == nullptr || c.indices.size() < best->indices.size())) {
      best = &c;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

ConstituentSet tree_to_constituents(const Tree& tree) {
  ConstituentSet k(tree.length());
  for (int v : tree.internal_nodes()) {
    Constituent c{tree.node(v).label, tree.indices(v)};
    if (!k.insert(c)) {
      throw Error(ErrorCode::kUnaryChainPresent,
                  "two internal nodes dominate " + c.indices.to_string());
    }
  }
  return k;
}

Tree constituents_to_tree(const ConstituentSet& k,
                          const std::vector<std::string>& tokens) {
  ConstituentReport r = validate_constituent_set(k);
  if (!r.complete) {
    throw Error(ErrorCode::kNotComplete,
                std::string(!r.consistent ? "not consistent"
                            : !r.rooted   ? "not rooted"
                                          : "not spanning"));
  }
  int n = k.length();
  const auto& ms = k.members();
  TreeBuilder b;
  std::vector<int> ids(ms.size());
  for (size_t a = 0; a < ms.size(); ++a) ids[a] = b.add_node(ms[a].label);
  auto index_of = [&](const IndexSet& s) {
    for (size_t a = 0; a < ms.size(); ++a) {
      if (ms[a].indices == s) return static_cast<int>(a);
    }
    return -1;
  };
  for (size_t a = 0; a < ms.size(); ++a) {
    auto p = max_subset_parent(k, ms[a].indices);
    if (p) b.attach(ids[index_of(p->indices)], ids[a]);
  }
  for (int i = 1; i <= n; ++i) {
    // The smallest member containing i; members are sorted by max then size,
    // so scan all and keep the smallest.
    int best = -1;
    for (size_t a = 0; a < ms.size(); ++a) {
      if (ms[a].indices.contains(i) &&
          (best < 0 || ms[a].indices.size() < ms[best].indices.size())) {
        best = static_cast<int>(a);
      }
    }
    std::string token =
        i - 1 < static_cast<int>(tokens.size()) ? tokens[i - 1] : "";
    b.attach(ids[best], b.add_leaf(i, token));
  }
  return std::move(b).build();
}

}  // namespace discoparse
