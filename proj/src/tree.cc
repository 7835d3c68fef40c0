#include "discoparse/tree.h"

#include <algorithm>
#include <functional>

#include "discoparse/error.h"

namespace discoparse {

const TreeNode& Tree::node(int id) const {
  if (id < 0 || id >= size()) {
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(id));
  }
  return nodes_[id];
}

bool Tree::is_preterminal(int id) const {
  const TreeNode& n = node(id);
  return !n.is_leaf() && n.children.size() == 1 &&
         nodes_[n.children[0]].is_leaf();
}

bool Tree::has_pos_layer() const {
  for (int i = 1; i <= length(); ++i) {
    int p = nodes_[leaf_node(i)].parent;
    if (p < 0 || !is_preterminal(p)) return false;
  }
  return true;
}

Symbol Tree::pos(int index) const {
  int p = nodes_[leaf_node(index)].parent;
  if (p >= 0 && is_preterminal(p)) return nodes_[p].label;
  return Symbol();
}

std::vector<int> Tree::internal_nodes() const {
  std::vector<int> out;
  std::vector<int> todo{root_};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    if (nodes_[v].is_leaf()) continue;
    out.push_back(v);
    for (auto it = nodes_[v].children.rbegin(); it != nodes_[v].children.rend();
         ++it) {
      todo.push_back(*it);
    }
  }
  return out;
}

bool Tree::dominates(int a, int b) const {
  for (int v = node(b).parent; v >= 0; v = nodes_[v].parent) {
    if (v == a) return true;
  }
  return false;
}

int Tree::depth(int id) const {
  int d = 0;
  for (int v = node(id).parent; v >= 0; v = nodes_[v].parent) ++d;
  return d;
}

bool Tree::is_binary() const {
  return std::all_of(nodes_.begin(), nodes_.end(), [](const TreeNode& n) {
    return n.children.size() <= 2;
  });
}

int TreeBuilder::add_leaf(int index, std::string token) {
  if (index < 1) {
    throw Error(ErrorCode::kInvalidTree,
                "leaf index " + std::to_string(index) + " is not positive");
  }
  TreeNode n;
  n.leaf = index;
  nodes_.push_back(std::move(n));
  tokens_.push_back(std::move(token));
  return static_cast<int>(nodes_.size()) - 1;
}

int TreeBuilder::add_node(Symbol label) {
  TreeNode n;
  n.label = label;
  nodes_.push_back(std::move(n));
  tokens_.emplace_back();
  return static_cast<int>(nodes_.size()) - 1;
}

void TreeBuilder::attach(int parent, int child) {
  int n = static_cast<int>(nodes_.size());
  if (parent < 0 || parent >= n || child < 0 || child >= n) {
    throw Error(ErrorCode::kInvalidTree, "attach: unknown node");
  }
  if (nodes_[parent].is_leaf()) {
    throw Error(ErrorCode::kInvalidTree, "attach: leaves have no children");
  }
  if (nodes_[child].parent >= 0) {
    throw Error(ErrorCode::kInvalidTree, "attach: node already has a parent");
  }
  nodes_[child].parent = parent;
  nodes_[parent].children.push_back(child);
}

Tree TreeBuilder::build() && {
  Tree t;
  int n = static_cast<int>(nodes_.size());
  int leaves = 0;
  for (int v = 0; v < n; ++v) {
    const TreeNode& node = nodes_[v];
    if (node.parent < 0) {
      if (t.root_ >= 0) throw Error(ErrorCode::kInvalidTree, "several roots");
      t.root_ = v;
    }
    if (node.is_leaf()) {
      ++leaves;
    } else if (node.children.empty()) {
      throw Error(ErrorCode::kInvalidTree,
                  "internal node " + node.label.str() + " has no children");
    } else if (node.label.empty()) {
      throw Error(ErrorCode::kInvalidTree, "internal node without label");
    }
  }
  if (t.root_ < 0) throw Error(ErrorCode::kInvalidTree, "no root");
  if (leaves == 0) throw Error(ErrorCode::kInvalidTree, "tree has no leaves");
  if (nodes_[t.root_].is_leaf()) {
    throw Error(ErrorCode::kInvalidTree, "root must be an internal node");
  }

  t.leaf_of_.assign(leaves, -1);
  t.tokens_.assign(leaves, std::string());
  for (int v = 0; v < n; ++v) {
    const TreeNode& node = nodes_[v];
    if (!node.is_leaf()) continue;
    if (node.leaf > leaves) {
      throw Error(ErrorCode::kMissingIndex,
                  "index " + std::to_string(node.leaf) + " exceeds the " +
                      std::to_string(leaves) + " leaves");
    }
    if (t.leaf_of_[node.leaf - 1] >= 0) {
      throw Error(ErrorCode::kDuplicateIndex,
                  "index " + std::to_string(node.leaf));
    }
    t.leaf_of_[node.leaf - 1] = v;
    t.tokens_[node.leaf - 1] = tokens_[v];
  }

  // Index sets bottom-up; also detects cycles and unreachable nodes.
  t.indices_.assign(n, IndexSet());
  std::vector<int> order;
  std::vector<int> todo{t.root_};
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    order.push_back(v);
    if (static_cast<int>(order.size()) > n) {
      throw Error(ErrorCode::kInvalidTree, "cycle");
    }
    for (int c : nodes_[v].children) todo.push_back(c);
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidTree, "disconnected nodes");
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const TreeNode& node = nodes_[*it];
    if (node.is_leaf()) {
      t.indices_[*it].insert(node.leaf);
    } else {
      for (int c : node.children) t.indices_[*it] |= t.indices_[c];
    }
  }
  t.nodes_ = std::move(nodes_);
  return t;
}

std::vector<int> sorted_children(const Tree& tree, int id) {
  std::vector<int> kids = tree.node(id).children;
  std::sort(kids.begin(), kids.end(), [&](int a, int b) {
    return tree.indices(a).min() < tree.indices(b).min();
  });
  return kids;
}

namespace {

void write_bracket(const Tree& tree, int v, bool with_tokens,
                   std::string& out) {
  const TreeNode& n = tree.node(v);
  if (n.is_leaf()) {
    out += std::to_string(n.leaf);
    if (with_tokens && !tree.token(n.leaf).empty()) {
      out += '=';
      out += tree.token(n.leaf);
    }
    return;
  }
  out += '(';
  out += n.label.str();
  for (int c : sorted_children(tree, v)) {
    out += ' ';
    write_bracket(tree, c, with_tokens, out);
  }
  out += ')';
}

}  // namespace

std::string to_bracket(const Tree& tree, bool with_tokens) {
  std::string out;
  if (tree.root() >= 0) write_bracket(tree, tree.root(), with_tokens, out);
  return out;
}

bool isomorphic(const Tree& a, const Tree& b) {
  return to_bracket(a, false) == to_bracket(b, false);
}

int copy_subtree(const Tree& src, int id, TreeBuilder& out) {
  const TreeNode& n = src.node(id);
  if (n.is_leaf()) return out.add_leaf(n.leaf, src.token(n.leaf));
  int v = out.add_node(n.label);
  for (int c : n.children) out.attach(v, copy_subtree(src, c, out));
  return v;
}

}  // namespace discoparse

namespace discoparse {
namespace {

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  Tree read() {
    skip_space();
    int root = read_tree();
    (void)root;
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return std::move(builder_).build();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  std::string_view atom() {
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '\r' &&
           text_[pos_] != '\n') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  int read_tree() {
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    ++pos_;
    std::string_view label = atom();
    if (label.empty()) fail("missing label");
    int id = builder_.add_node(Symbol(label));
    int kids = 0;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parentheses");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      builder_.attach(id, text_[pos_] == '(' ? read_tree() : read_leaf());
      ++kids;
    }
    if (kids == 0) fail("node without children");
    return id;
  }

  int read_leaf() {
    size_t start = pos_;
    std::string_view a = atom();
    size_t eq = a.find('=');
    std::string_view digits = a.substr(0, eq);
    if (digits.empty() || digits.size() > 9 ||
        digits.find_first_not_of("0123456789") != std::string_view::npos) {
      pos_ = start;
      fail("expected INDEX=TOKEN");
    }
    int index = std::stoi(std::string(digits));
    if (index < 1) {
      pos_ = start;
      fail("indices are 1-based");
    }
    std::string token;
    if (eq != std::string_view::npos) token = std::string(a.substr(eq + 1));
    return builder_.add_leaf(index, token);
  }

  std::string_view text_;
  size_t pos_ = 0;
  TreeBuilder builder_;
};

}  // namespace

Tree parse_bracket(std::string_view text) {
  return BracketReader(text).read();
}

}  // namespace discoparse
