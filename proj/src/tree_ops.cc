#include "discoparse/tree_ops.h"

#include <algorithm>
#include <functional>
#include <string>

#include "discoparse/error.h"

namespace discoparse {
namespace {

bool internal(const Tree& t, int v) { return !t.node(v).is_leaf(); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

bool has_reserved_label(const Tree& tree) {
  for (const TreeNode& n : tree.nodes()) {
    if (n.is_leaf()) continue;
    const std::string& l = n.label.str();
    if (l.find(kChainSeparator) != std::string::npos ||
        l.find(kBinarizeMarker) != std::string::npos) {
      return true;
    }
  }
  return false;
}

bool is_unary_free(const Tree& tree) {
  for (const TreeNode& n : tree.nodes()) {
    if (n.is_leaf() || n.children.size() >= 2) continue;
    if (!tree.node(n.children[0]).is_leaf()) return false;
  }
  return true;
}

Tree normalize_unaries(const Tree& tree, UnaryDirection direction) {
  TreeBuilder b;
  std::function<int(int)> rec = [&](int v) -> int {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) return b.add_leaf(n.leaf, tree.token(n.leaf));
    if (direction == UnaryDirection::kCollapse) {
      std::string label = n.label.str();
      int bottom = v;
      while (tree.node(bottom).children.size() == 1 &&
             internal(tree, tree.node(bottom).children[0])) {
        bottom = tree.node(bottom).children[0];
        label += kChainSeparator;
        label += tree.node(bottom).label.str();
      }
      int id = b.add_node(Symbol(label));
      for (int c : tree.node(bottom).children) b.attach(id, rec(c));
      return id;
    }
    std::vector<std::string> chain = split(n.label.str(), kChainSeparator);
    int top = b.add_node(Symbol(chain[0]));
    int bottom = top;
    for (size_t i = 1; i < chain.size(); ++i) {
      int next = b.add_node(Symbol(chain[i]));
      b.attach(bottom, next);
      bottom = next;
    }
    for (int c : n.children) b.attach(bottom, rec(c));
    return top;
  };
  rec(tree.root());
  return std::move(b).build();
}

Tree binarize(const Tree& tree) {
  for (const TreeNode& n : tree.nodes()) {
    if (!n.is_leaf() &&
        n.label.str().find(kBinarizeMarker) != std::string::npos) {
      throw Error(ErrorCode::kReservedLabel, n.label.str());
    }
  }
  TreeBuilder b;
  std::function<int(int)> rec = [&](int v) -> int {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) return b.add_leaf(n.leaf, tree.token(n.leaf));
    std::vector<int> kids = sorted_children(tree, v);
    int id = b.add_node(n.label);
    if (kids.size() <= 2) {
      for (int c : kids) b.attach(id, rec(c));
      return id;
    }
    Symbol marked(n.label.str() + kBinarizeMarker);
    int cur = b.add_node(marked);
    b.attach(cur, rec(kids[0]));
    b.attach(cur, rec(kids[1]));
    for (size_t i = 2; i + 1 < kids.size(); ++i) {
      int up = b.add_node(marked);
      b.attach(up, cur);
      b.attach(up, rec(kids[i]));
      cur = up;
    }
    b.attach(id, cur);
    b.attach(id, rec(kids.back()));
    return id;
  };
  rec(tree.root());
  return std::move(b).build();
}

Tree debinarize(const Tree& tree) {
  auto marked = [&](int v) {
    const std::string& l = tree.node(v).label.str();
    return !l.empty() && l.back() == kBinarizeMarker;
  };
  if (marked(tree.root())) {
    throw Error(ErrorCode::kInvalidTree, "binarization node at the root");
  }
  TreeBuilder b;
  std::function<void(int, int)> rec = [&](int v, int parent) {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) {
      b.attach(parent, b.add_leaf(n.leaf, tree.token(n.leaf)));
      return;
    }
    if (marked(v)) {
      for (int c : n.children) rec(c, parent);
      return;
    }
    int id = b.add_node(n.label);
    if (parent >= 0) b.attach(parent, id);
    for (int c : n.children) rec(c, id);
  };
  rec(tree.root(), -1);
  return std::move(b).build();
}

Tree strip_preterminals(const Tree& tree) {
  TreeBuilder b;
  std::function<void(int, int)> rec = [&](int v, int parent) {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) {
      b.attach(parent, b.add_leaf(n.leaf, tree.token(n.leaf)));
      return;
    }
    if (parent >= 0 && tree.is_preterminal(v)) {
      rec(n.children[0], parent);
      return;
    }
    int id = b.add_node(n.label);
    if (parent >= 0) b.attach(parent, id);
    for (int c : n.children) rec(c, id);
  };
  rec(tree.root(), -1);
  return std::move(b).build();
}

Tree add_preterminals(const Tree& tree, const std::vector<Symbol>& tags) {
  if (static_cast<int>(tags.size()) != tree.length()) {
    throw Error(ErrorCode::kLengthMismatch, "tag count differs from length");
  }
  TreeBuilder b;
  std::function<int(int)> rec = [&](int v) -> int {
    const TreeNode& n = tree.node(v);
    if (n.is_leaf()) {
      int p = b.add_node(tags[n.leaf - 1]);
      b.attach(p, b.add_leaf(n.leaf, tree.token(n.leaf)));
      return p;
    }
    int id = b.add_node(n.label);
    for (int c : n.children) b.attach(id, rec(c));
    return id;
  };
  rec(tree.root());
  return std::move(b).build();
}

std::vector<Symbol> pos_tags(const Tree& tree) {
  std::vector<Symbol> tags;
  for (int i = 1; i <= tree.length(); ++i) tags.push_back(tree.pos(i));
  return tags;
}

IndexSet gap_set(const IndexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptyCandidate, "gap of empty set");
  return IndexSet::span(s.min() + 1, s.max() - 1) - s;
}

namespace {

bool fully_projective(const Tree& tree, int v) {
  if (!tree.indices(v).contiguous()) return false;
  for (int c : tree.node(v).children) {
    if (!fully_projective(tree, c)) return false;
  }
  return true;
}

}  // namespace

StructuralReport structural_report(const Tree& tree, int node) {
  const TreeNode& n = tree.node(node);
  StructuralReport r;
  r.projective = tree.indices(node).contiguous();
  r.fully_projective = fully_projective(tree, node);
  r.maximal_fully_projective =
      r.fully_projective &&
      (n.parent < 0 || !fully_projective(tree, n.parent));
  return r;
}

int mpc(const Tree& tree, int node) {
  for (int v = tree.node(node).parent; v >= 0; v = tree.node(v).parent) {
    if (structural_report(tree, v).maximal_fully_projective) return v;
  }
  return node;
}

int cpc(const Tree& tree, int node) {
  for (int v = tree.node(node).parent; v >= 0; v = tree.node(v).parent) {
    if (tree.indices(v).contiguous()) return v;
  }
  throw Error(ErrorCode::kNoProjectiveAscendant,
              "node " + std::to_string(node));
}

ProjectiveAnchors projective_anchors(const Tree& tree, int node) {
  return {mpc(tree, node), cpc(tree, node)};
}

std::vector<int> post_order(const Tree& tree) {
  if (!tree.is_binary()) {
    throw Error(ErrorCode::kNotBinary, "post_order needs a binary tree");
  }
  std::vector<int> out;
  std::function<void(int)> rec = [&](int v) {
    for (int c : sorted_children(tree, v)) rec(c);
    out.push_back(v);
  };
  rec(tree.root());
  return out;
}

Order compare_ind(const IndexSet& a, const IndexSet& b) {
  if (a.min() < b.min()) return Order::kBefore;
  if (a.min() > b.min()) return Order::kAfter;
  return Order::kEqual;
}

Order compare_right(const IndexSet& a, const IndexSet& b) {
  if (a.max() < b.max()) return Order::kBefore;
  if (a.max() > b.max()) return Order::kAfter;
  if (a == b) return Order::kEqual;
  if (a.subset_of(b)) return Order::kBefore;
  if (b.subset_of(a)) return Order::kAfter;
  throw Error(ErrorCode::kIncomparable,
              a.to_string() + " vs " + b.to_string() + " under <=_right");
}

Order compare_g(const Tree& tree, int u, int v) {
  if (u == v) return Order::kEqual;
  if (tree.dominates(u, v) || tree.dominates(v, u)) {
    throw Error(ErrorCode::kIncomparable, "<_G on dominance-related nodes");
  }
  int du = tree.depth(u), dv = tree.depth(v);
  while (du > dv) {
    u = tree.node(u).parent;
    --du;
  }
  while (dv > du) {
    v = tree.node(v).parent;
    --dv;
  }
  // u and v are now at equal depth below the common ancestor; climb to the
  // sisters directly below it.
  while (tree.node(u).parent != tree.node(v).parent) {
    u = tree.node(u).parent;
    v = tree.node(v).parent;
  }
  return compare_ind(tree.indices(u), tree.indices(v));
}

}  // namespace discoparse
