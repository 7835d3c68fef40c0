#include "discoparse/eval.h"

#include <map>
#include <string>

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

namespace {

using Bag = std::map<std::pair<std::string, IndexSet>, long>;

std::vector<std::string> chain_members(const std::string& label) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t at = label.find(kChainSeparator, pos);
    out.push_back(label.substr(pos, at == std::string::npos ? at : at - pos));
    if (at == std::string::npos) break;
    pos = at + 1;
  }
  return out;
}

Bag filtered(const ConstituentSet& k, const IndexSet& punct,
             const EvalParams& params) {
  IndexSet all = IndexSet::span(1, k.length()) - punct;
  Bag bag;
  for (const Constituent& c : k.members()) {
    if (params.disc_only && c.indices.contiguous()) continue;
    IndexSet s = c.indices - punct;
    if (s.empty()) continue;
    if (params.ignore_root && s == all) continue;
    for (const std::string& l : chain_members(c.label.str())) ++bag[{l, s}];
  }
  return bag;
}

long total(const Bag& b) {
  long t = 0;
  for (const auto& [k, v] : b) t += v;
  return t;
}

double ratio(long num, long den, bool both_empty, bool empty_is_perfect) {
  if (den == 0) return both_empty && empty_is_perfect ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::set<Symbol> default_punct_tags() {
  std::set<Symbol> out;
  for (const char* t : {",", ".", ":", "``", "''", "-LRB-", "-RRB-", "$", "#"}) {
    out.insert(Symbol(t));
  }
  return out;
}

EvalResult make_result(long matched, long predicted, long gold,
                       bool empty_is_perfect) {
  EvalResult r;
  r.matched = matched;
  r.predicted = predicted;
  r.gold = gold;
  bool both_empty = predicted == 0 && gold == 0;
  r.precision = ratio(matched, predicted, both_empty, empty_is_perfect);
  r.recall = ratio(matched, gold, both_empty, empty_is_perfect);
  if (both_empty) {
    r.f1 = empty_is_perfect ? 1.0 : 0.0;
  } else {
    r.f1 = 2.0 * static_cast<double>(matched) /
           static_cast<double>(predicted + gold);
  }
  r.exact = matched == predicted && matched == gold;
  return r;
}

EvalReport evaluate(const std::vector<ConstituentSet>& gold,
                    const std::vector<ConstituentSet>& pred,
                    const EvalParams& params,
                    const std::vector<std::vector<Symbol>>& tags) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(gold.size()) + " gold vs " +
                    std::to_string(pred.size()) + " predicted sentences");
  }
  if (!tags.empty() && tags.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch, "tag sequences do not match corpus");
  }
  EvalReport report;
  long m = 0, p = 0, g = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].length() != pred[s].length()) {
      throw Error(ErrorCode::kLengthMismatch,
                  "sentence " + std::to_string(s + 1) + ": " +
                      std::to_string(gold[s].length()) + " vs " +
                      std::to_string(pred[s].length()) + " tokens");
    }
    IndexSet punct;
    if (!tags.empty()) {
      for (size_t i = 0; i < tags[s].size(); ++i) {
        if (params.punct_tags.count(tags[s][i])) {
          punct |= IndexSet{static_cast<int>(i) + 1};
        }
      }
    }
    Bag gb = filtered(gold[s], punct, params);
    Bag pb = filtered(pred[s], punct, params);
    long matched = 0;
    for (const auto& [key, count] : pb) {
      auto it = gb.find(key);
      if (it != gb.end()) matched += std::min(count, it->second);
    }
    EvalResult r =
        make_result(matched, total(pb), total(gb), params.empty_is_perfect);
    report.sentences.push_back(r);
    m += r.matched;
    p += r.predicted;
    g += r.gold;
  }
  report.corpus = make_result(m, p, g, params.empty_is_perfect);
  bool all_exact = true;
  for (const EvalResult& r : report.sentences) all_exact = all_exact && r.exact;
  report.corpus.exact = all_exact;
  return report;
}

ConstituentSet eval_constituents(const Tree& tree) {
  return tree_to_constituents(normalize_unaries(strip_preterminals(tree),
                                                UnaryDirection::kCollapse));
}

EvalReport evaluate_trees(const std::vector<Tree>& gold,
                          const std::vector<Tree>& pred,
                          const EvalParams& params) {
  if (gold.size() != pred.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(gold.size()) + " gold vs " +
                    std::to_string(pred.size()) + " predicted trees");
  }
  std::vector<ConstituentSet> g, p;
  std::vector<std::vector<Symbol>> tags;
  bool have_tags = true;
  for (size_t s = 0; s < gold.size(); ++s) {
    g.push_back(eval_constituents(gold[s]));
    p.push_back(eval_constituents(pred[s]));
    if (have_tags) {
      try {
        tags.push_back(pos_tags(gold[s]));
      } catch (const Error&) {
        have_tags = false;
      }
    }
  }
  if (!have_tags) tags.clear();
  return evaluate(g, p, params, tags);
}

}  // namespace discoparse
