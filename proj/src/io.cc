#include "discoparse/io.h"

#include <cctype>
#include <charconv>
#include <map>

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {
namespace {

std::vector<std::pair<int, std::string_view>> content_lines(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      out.emplace_back(number, line.substr(first));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

[[noreturn]] void rethrow_at(int line, const Error& e) {
  std::string what = e.what();
  size_t colon = what.find(": ");
  throw Error(e.code(), "line " + std::to_string(line) + ": " +
                            (colon == std::string::npos ? what
                                                        : what.substr(colon + 2)));
}

class RuleParser {
 public:
  explicit RuleParser(std::string_view s) : s_(s) {}

  Rule parse() {
    Rule r;
    r.lhs = Symbol(name());
    expect('(');
    // Components until ')'.
    Component comp;
    while (true) {
      space();
      if (at(')')) {
        ++p_;
        r.args.push_back(std::move(comp));
        break;
      }
      if (at(',')) {
        ++p_;
        r.args.push_back(std::move(comp));
        comp.clear();
        continue;
      }
      if (at('\'')) {
        size_t close = s_.find('\'', p_ + 1);
        if (close == std::string_view::npos || close == p_ + 1) {
          fail("bad terminal");
        }
        comp.push_back(Term::word(Symbol(s_.substr(p_ + 1, close - p_ - 1))));
        p_ = close + 1;
        continue;
      }
      comp.push_back(Term::variable(variable()));
    }
    space();
    if (s_.substr(p_, 2) != "->") fail("expected '->'");
    p_ += 2;
    space();
    if (s_.substr(p_) == "eps") return r;
    while (true) {
      space();
      if (p_ >= s_.size()) break;
      RhsElement e;
      e.nonterminal = Symbol(name());
      expect('(');
      while (true) {
        space();
        e.vars.push_back(variable());
        space();
        if (at(',')) {
          ++p_;
          continue;
        }
        expect(')');
        break;
      }
      r.rhs.push_back(std::move(e));
    }
    if (r.rhs.empty()) fail("empty right-hand side (write eps)");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError,
                "column " + std::to_string(p_ + 1) + ": " + what);
  }
  bool at(char c) const { return p_ < s_.size() && s_[p_] == c; }
  void space() {
    while (p_ < s_.size() && (s_[p_] == ' ' || s_[p_] == '\t')) ++p_;
  }
  void expect(char c) {
    space();
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  // Nonterminal names may carry braces with commas inside, e.g. A^{1-2,3-4}.
  std::string name() {
    space();
    size_t start = p_;
    int depth = 0;
    while (p_ < s_.size()) {
      char c = s_[p_];
      if (c == '{') ++depth;
      if (c == '}') --depth;
      if (depth == 0 && (c == '(' || c == ')' || c == ',' || c == ' ' ||
                         c == '\t' || c == '\'')) {
        break;
      }
      ++p_;
    }
    if (p_ == start) fail("expected a nonterminal");
    return std::string(s_.substr(start, p_ - start));
  }
  int variable() {
    space();
    size_t start = p_;
    if (p_ >= s_.size() || !std::isupper(static_cast<unsigned char>(s_[p_]))) {
      fail("expected a variable or quoted terminal");
    }
    ++p_;
    while (p_ < s_.size() &&
           (std::isupper(static_cast<unsigned char>(s_[p_])) ||
            std::isdigit(static_cast<unsigned char>(s_[p_])))) {
      ++p_;
    }
    std::string v(s_.substr(start, p_ - start));
    auto [it, fresh] = vars_.emplace(v, static_cast<int>(vars_.size()));
    return it->second;
  }

  std::string_view s_;
  size_t p_ = 0;
  std::map<std::string, int> vars_;
};

}  // namespace

std::vector<Tree> read_trees(std::string_view text, TreeReadOptions options) {
  std::vector<Tree> out;
  for (const auto& [number, line] : content_lines(text)) {
    try {
      Tree t = parse_bracket(line);
      if (!options.allow_reserved && has_reserved_label(t)) {
        throw Error(ErrorCode::kReservedLabel,
                    "labels may not contain '@' or '*'");
      }
      out.push_back(std::move(t));
    } catch (const Error& e) {
      rethrow_at(number, e);
    }
  }
  return out;
}

std::string write_trees(const std::vector<Tree>& trees) {
  std::string out;
  for (const Tree& t : trees) out += to_bracket(t) + "\n";
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Grammar read_grammar(std::string_view text, double sum_tolerance) {
  std::vector<Rule> rules;
  Symbol start;
  for (const auto& [number, line] : content_lines(text)) {
    try {
      if (line.substr(0, 6) == "%start") {
        std::string_view rest = line.substr(6);
        size_t b = rest.find_first_not_of(" \t");
        if (b == std::string_view::npos) {
          throw Error(ErrorCode::kParseError, "missing start symbol");
        }
        start = Symbol(rest.substr(b));
        continue;
      }
      size_t split = line.find_first_of(" \t");
      if (split == std::string_view::npos) {
        throw Error(ErrorCode::kParseError, "expected WEIGHT<TAB>RULE");
      }
      std::string_view w = line.substr(0, split);
      double prob = 0;
      auto res = std::from_chars(w.data(), w.data() + w.size(), prob);
      if (res.ec != std::errc() || res.ptr != w.data() + w.size()) {
        throw Error(ErrorCode::kParseError, "bad weight '" + std::string(w) +
                                                "'");
      }
      if (!(prob > 0.0 && prob <= 1.0)) {
        throw Error(ErrorCode::kParseError, "weight outside (0,1]");
      }
      Rule r = RuleParser(line.substr(split + 1)).parse();
      r.prob = prob;
      Grammar check(Symbol("%"), {r});  // per-rule invariants
      rules.push_back(check.rule(0));
    } catch (const Error& e) {
      rethrow_at(number, e);
    }
  }
  if (start.empty() && !rules.empty()) start = rules.front().lhs;
  Grammar g(start, std::move(rules));
  auto bad = g.unnormalized(sum_tolerance);
  if (!bad.empty()) {
    throw Error(ErrorCode::kWeightSumViolation,
                "weights of " + bad.front().str() + " do not sum to 1");
  }
  return g;
}

std::string write_grammar(const Grammar& g) {
  std::string out = "%start " + g.start().str() + "\n";
  for (const Rule& r : g.rules()) {
    out += format_double(r.prob) + "\t" + r.to_string() + "\n";
  }
  return out;
}

}  // namespace discoparse
