#include "discoparse/score.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "discoparse/error.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

namespace {

constexpr const char* kSlot[4] = {"min", "max", "gmin", "gmax"};
constexpr int kShiftClass = 0;
constexpr int kCombineClass = 1;
constexpr int kNoLabelClass = 2;

std::string bucket(int v, int cap) {
  return v >= cap ? std::to_string(cap) + "+" : std::to_string(v);
}

class Lexicon {
 public:
  Lexicon(const Sentence& s, const std::unordered_set<std::string>* vocab)
      : s_(s), vocab_(vocab) {}

  std::string word(int p) const {
    if (p < 1 || p > static_cast<int>(s_.size())) return kNil;
    const std::string& w = s_[p - 1].token;
    if (vocab_ && !vocab_->count(w)) return kUnk;
    return w;
  }
  std::string tag(int p) const {
    if (p < 1 || p > static_cast<int>(s_.size())) return kNil;
    return s_[p - 1].pos.str();
  }

 private:
  const Sentence& s_;
  const std::unordered_set<std::string>* vocab_;
};

void add_summary(std::vector<std::string>& out, const std::string& prefix,
                 const IndexSet& s, const Lexicon& lex) {
  std::array<int, 4> pos = summary_positions(s);
  for (int k = 0; k < 4; ++k) {
    std::string slot = prefix + kSlot[k];
    if (pos[k] == 0) {
      out.push_back(slot + "=" + kNil);
    } else {
      out.push_back(slot + "w=" + lex.word(pos[k]));
      out.push_back(slot + "t=" + lex.tag(pos[k]));
    }
  }
}

std::string format_weight(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string::npos ? std::string::npos
                                                           : tab - pos));
    if (tab == std::string::npos) break;
    pos = tab + 1;
  }
  return out;
}

int group_of(const Action& a) {
  switch (a.kind) {
    case ActionKind::kShift:
      return 0;
    case ActionKind::kCombine:
      return 1;
    case ActionKind::kNoLabel:
      return 2;
    default:
      return 3;
  }
}

size_t argmax(const std::vector<double>& scores) {
  size_t best = 0;
  for (size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

}  // namespace

std::array<int, 4> summary_positions(const IndexSet& s) {
  std::array<int, 4> out{s.min(), s.max(), 0, 0};
  if (!s.empty() && !s.contiguous()) {
    IndexSet gap = gap_set(s);
    out[2] = gap.min();
    out[3] = gap.max();
  }
  return out;
}

SfFeatures extract_features(const SfConfig& c, const Sentence& sentence,
                            const std::unordered_set<std::string>* vocab) {
  Lexicon lex(sentence, vocab);
  SfFeatures f;
  auto& sh = f.shared;
  sh.push_back("bias");
  sh.push_back("msz=" + bucket(static_cast<int>(c.memory.size()), 4));
  if (c.focus.empty()) {
    sh.push_back("f=EMPTY");
  } else {
    add_summary(sh, "f", c.focus, lex);
    sh.push_back("fsz=" + bucket(c.focus.size(), 5));
    sh.push_back(std::string("fcont=") + (c.focus.contiguous() ? "1" : "0"));
    sh.push_back("ftt=" + lex.tag(c.focus.min()) + "|" + lex.tag(c.focus.max()));
    sh.push_back("fl1t=" + lex.tag(c.focus.min() - 1));
    if (c.focus.size() == c.length()) sh.push_back("ffull");
  }
  if (c.i < c.j) {
    sh.push_back("b0w=" + lex.word(c.i));
    sh.push_back("b0t=" + lex.tag(c.i));
    sh.push_back("b1t=" + lex.tag(c.i + 1));
    sh.push_back("fb=" + lex.tag(c.focus.max()) + "|" + lex.tag(c.i));
  } else {
    sh.push_back("b0=END");
  }
  if (!c.memory.empty()) {
    const IndexSet& last = c.memory.back();
    sh.push_back("m0t=" + lex.tag(last.min()) + "|" + lex.tag(last.max()));
  }

  int count = static_cast<int>(c.memory.size());
  for (int m = 0; m < count; ++m) {
    const IndexSet& s = c.memory[m];
    std::vector<std::string> cf;
    add_summary(cf, "c", s, lex);
    IndexSet u = s | c.focus;
    std::string cont = u.contiguous() ? "1" : "0";
    std::string adj = s.max() + 1 == c.focus.min() ? "1" : "0";
    cf.push_back("crank=" + bucket(count - 1 - m, 3));
    cf.push_back("csz=" + bucket(s.size(), 4));
    cf.push_back("ucont=" + cont);
    cf.push_back("cadj=" + adj);
    cf.push_back("cd=" + bucket(c.focus.min() - s.max(), 5));
    cf.push_back("cf=" + lex.tag(s.max()) + "|" + lex.tag(c.focus.min()));
    cf.push_back("cff=" + lex.tag(s.min()) + "|" + lex.tag(s.max()) + "|" +
                 lex.tag(c.focus.min()) + "|" + lex.tag(c.focus.max()));
    cf.push_back("cuf=" + cont + "|" + lex.tag(s.min()) + "|" +
                 lex.tag(c.focus.min()));
    cf.push_back("cfw=" + lex.word(s.max()) + "|" + lex.word(c.focus.max()));
    f.combine.push_back(std::move(cf));
  }
  return f;
}

void sort_candidates(std::vector<Action>& actions) {
  std::stable_sort(actions.begin(), actions.end(),
                   [](const Action& a, const Action& b) {
                     int ga = group_of(a), gb = group_of(b);
                     if (ga != gb) return ga < gb;
                     if (ga == 1) {
                       if (a.target.max() != b.target.max()) {
                         return a.target.max() < b.target.max();
                       }
                       return a.target < b.target;
                     }
                     if (ga == 3) return a.label < b.label;
                     return false;
                   });
}

OracleScorer::OracleScorer(ConstituentSet gold) : gold_(std::move(gold)) {
  std::set<Symbol> labels;
  for (const Constituent& c : gold_.members()) labels.insert(c.label);
  labels_.assign(labels.begin(), labels.end());
}

std::vector<double> OracleScorer::score(const SfConfig& c, const Sentence&,
                                        const std::vector<Action>& candidates)
    const {
  Action best = sf_static_action(c, gold_);
  std::vector<double> out;
  for (const Action& a : candidates) out.push_back(a == best ? 1.0 : 0.0);
  return out;
}

PerceptronModel::PerceptronModel(std::vector<Symbol> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  for (size_t k = 0; k < labels_.size(); ++k) {
    label_class_[labels_[k]] = static_cast<int>(k) + 3;
  }
}

int PerceptronModel::action_class(const Action& a) const {
  switch (a.kind) {
    case ActionKind::kShift:
      return kShiftClass;
    case ActionKind::kCombine:
      return kCombineClass;
    case ActionKind::kNoLabel:
      return kNoLabelClass;
    case ActionKind::kLabel: {
      auto it = label_class_.find(a.label);
      return it == label_class_.end() ? -1 : it->second;
    }
    default:
      return -1;
  }
}

std::string PerceptronModel::class_name(int cls) const {
  if (cls == kShiftClass) return "SHIFT";
  if (cls == kCombineClass) return "COMBINE";
  if (cls == kNoLabelClass) return "NO-LABEL";
  return "LABEL-" + labels_.at(cls - 3).str();
}

int PerceptronModel::class_of_name(const std::string& name) const {
  if (name == "SHIFT") return kShiftClass;
  if (name == "COMBINE") return kCombineClass;
  if (name == "NO-LABEL") return kNoLabelClass;
  if (name.starts_with("LABEL-")) {
    auto it = label_class_.find(Symbol(name.substr(6)));
    if (it != label_class_.end()) return it->second;
  }
  return -1;
}

int PerceptronModel::feature_id(const std::string& f) {
  auto [it, fresh] =
      feature_ids_.emplace(f, static_cast<int>(feature_names_.size()));
  if (fresh) feature_names_.push_back(f);
  return it->second;
}

int PerceptronModel::find_feature(const std::string& f) const {
  auto it = feature_ids_.find(f);
  return it == feature_ids_.end() ? -1 : it->second;
}

double PerceptronModel::lookup(int feature, int cls) const {
  if (feature < 0 || cls < 0) return 0.0;
  auto it = weights_.find(key(feature, cls));
  return it == weights_.end() ? 0.0 : it->second.w;
}

double PerceptronModel::weight(const std::string& feature,
                               const Action& action) const {
  return lookup(find_feature(feature), action_class(action));
}

std::vector<double> PerceptronModel::score_features(
    const SfFeatures& f, const SfConfig& c,
    const std::vector<Action>& candidates) const {
  std::vector<int> shared;
  for (const std::string& s : f.shared) shared.push_back(find_feature(s));
  std::vector<double> out;
  for (const Action& a : candidates) {
    int cls = action_class(a);
    double total = 0.0;
    for (int id : shared) total += lookup(id, cls);
    if (a.kind == ActionKind::kCombine) {
      auto it = std::find(c.memory.begin(), c.memory.end(), a.target);
      if (it != c.memory.end()) {
        for (const std::string& s : f.combine[it - c.memory.begin()]) {
          total += lookup(find_feature(s), cls);
        }
      }
    }
    out.push_back(total);
  }
  return out;
}

std::vector<double> PerceptronModel::score(
    const SfConfig& c, const Sentence& sentence,
    const std::vector<Action>& candidates) const {
  SfFeatures f =
      extract_features(c, sentence, vocab_.empty() ? nullptr : &vocab_);
  return score_features(f, c, candidates);
}

void PerceptronModel::update(const SfFeatures& f, const SfConfig& c,
                             const Action& action, double delta) {
  int cls = action_class(action);
  if (cls < 0) return;
  auto bump = [&](const std::string& name) {
    Entry& e = weights_[key(feature_id(name), cls)];
    e.acc += static_cast<double>(clock_ - e.stamp) * e.w;
    e.stamp = clock_;
    e.w += delta;
  };
  for (const std::string& s : f.shared) bump(s);
  if (action.kind == ActionKind::kCombine) {
    auto it = std::find(c.memory.begin(), c.memory.end(), action.target);
    if (it != c.memory.end()) {
      for (const std::string& s : f.combine[it - c.memory.begin()]) bump(s);
    }
  }
}

void PerceptronModel::finalize() {
  if (clock_ == 0) return;
  for (auto& [k, e] : weights_) {
    e.acc += static_cast<double>(clock_ - e.stamp) * e.w;
    e.w = e.acc / static_cast<double>(clock_);
    e.acc = 0.0;
    e.stamp = 0;
  }
  clock_ = 0;
}

void PerceptronModel::save(std::ostream& out) const {
  std::vector<std::tuple<std::string, std::string, double>> rows;
  for (const auto& [k, e] : weights_) {
    if (e.w == 0.0) continue;
    rows.emplace_back(feature_names_[k >> 20],
                      class_name(static_cast<int>(k & 0xFFFFF)), e.w);
  }
  std::sort(rows.begin(), rows.end());
  out << "# discoparse perceptron v1\tweights=" << rows.size() << "\n";
  out << "# labels";
  for (Symbol l : labels_) out << "\t" << l.str();
  out << "\n# vocab";
  std::vector<std::string> words(vocab_.begin(), vocab_.end());
  std::sort(words.begin(), words.end());
  for (const std::string& w : words) out << "\t" << w;
  out << "\n";
  for (const auto& [f, a, w] : rows) {
    out << f << "\t" << a << "\t" << format_weight(w) << "\n";
  }
}

PerceptronModel PerceptronModel::load(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError,
                "model line " + std::to_string(line_no) + ": " + what);
  };
  std::vector<Symbol> labels;
  std::vector<std::string> vocab;
  bool saw_labels = false;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.starts_with("# labels")) {
      auto parts = split_tabs(line);
      for (size_t k = 1; k < parts.size(); ++k) labels.emplace_back(parts[k]);
      saw_labels = true;
    } else if (line.starts_with("# vocab")) {
      auto parts = split_tabs(line);
      vocab.assign(parts.begin() + 1, parts.end());
    } else if (line[0] == '#') {
      if (line_no == 1 && !line.starts_with("# discoparse perceptron")) {
        fail("not a perceptron model");
      }
    } else {
      body.push_back(line);
    }
  }
  if (!saw_labels) fail("missing labels header");
  PerceptronModel m(labels);
  for (const std::string& w : vocab) m.vocab_.insert(w);
  line_no = 0;
  for (const std::string& row : body) {
    ++line_no;
    auto parts = split_tabs(row);
    if (parts.size() != 3) fail("expected feature, action, weight");
    int cls = m.class_of_name(parts[1]);
    if (cls < 0) fail("unknown action class '" + parts[1] + "'");
    double w = 0.0;
    const std::string& t = parts[2];
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), w);
    if (ec != std::errc() || p != t.data() + t.size()) {
      fail("bad weight '" + t + "'");
    }
    m.weights_[key(m.feature_id(parts[0]), cls)].w = w;
  }
  return m;
}

std::vector<std::pair<Action, double>> score_actions(const Scorer& scorer,
                                                     const SfConfig& c,
                                                     const Sentence& sentence) {
  std::vector<Symbol> labels = scorer.labels();
  if (labels.empty()) labels.push_back(Symbol("ROOT"));
  std::vector<Action> cands = legal(c, labels);
  sort_candidates(cands);
  std::vector<double> scores = scorer.score(c, sentence, cands);
  std::vector<std::pair<Action, double>> out;
  for (size_t k = 0; k < cands.size(); ++k) out.emplace_back(cands[k], scores[k]);
  return out;
}

GreedyRun greedy_parse(const Scorer& scorer, const Sentence& sentence) {
  if (sentence.empty()) {
    throw Error(ErrorCode::kZeroLength, "cannot parse an empty sentence");
  }
  SfConfig c = sf_init(static_cast<int>(sentence.size()));
  GreedyRun run;
  while (!is_terminal(c)) {
    auto scored = score_actions(scorer, c, sentence);
    size_t best = 0;
    for (size_t k = 1; k < scored.size(); ++k) {
      if (scored[k].second > scored[best].second) best = k;
    }
    const Action a = scored[best].first;
    c = apply(c, a);
    run.actions.push_back(a);
  }
  std::vector<std::string> tokens;
  for (const TaggedToken& t : sentence) tokens.push_back(t.token);
  run.tree = decode(c, tokens);
  return run;
}

TrainExample make_example(const Tree& tree) {
  TrainExample ex;
  ex.sentence = sentence_of(tree);
  Tree bare = normalize_unaries(strip_preterminals(tree), UnaryDirection::kCollapse);
  ex.gold = tree_to_constituents(bare);
  return ex;
}

PerceptronModel train(const std::vector<TrainExample>& corpus,
                      const TrainOptions& options, std::ostream* log) {
  std::set<Symbol> label_set;
  for (const TrainExample& ex : corpus) {
    if (!validate_constituent_set(ex.gold).complete ||
        ex.gold.length() != static_cast<int>(ex.sentence.size())) {
      throw Error(ErrorCode::kIncompleteGold, "training tree is not complete");
    }
    for (const Constituent& c : ex.gold.members()) label_set.insert(c.label);
  }
  PerceptronModel model(std::vector<Symbol>(label_set.begin(), label_set.end()));
  if (options.epochs < 1) {
    throw Error(ErrorCode::kInvalidArgument, "epochs must be at least 1");
  }
  if (corpus.empty()) {
    if (log) *log << "warning: empty training corpus, returning a zero model\n";
    return model;
  }
  for (const TrainExample& ex : corpus) {
    for (const TaggedToken& t : ex.sentence) model.add_vocab(t.token);
  }
  std::vector<Symbol> labels = model.labels();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<size_t> order(corpus.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;

  for (int epoch = 1; epoch <= options.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    long steps = 0, correct = 0;
    for (size_t idx : order) {
      const TrainExample& ex = corpus[idx];
      SfConfig c = sf_init(static_cast<int>(ex.sentence.size()));
      while (!is_terminal(c)) {
        std::vector<Action> cands = legal(c, labels);
        sort_candidates(cands);
        SfFeatures f = extract_features(c, ex.sentence);
        Action pred = cands[argmax(model.score_features(f, c, cands))];
        Action target;
        bool ok;
        if (options.mode == TrainMode::kStatic) {
          target = sf_static_action(c, ex.gold);
          ok = pred == target;
        } else {
          std::vector<Action> best = dynamic_oracle(c, ex.gold);
          target = dynamic_oracle_pick(c, ex.gold);
          ok = std::find(best.begin(), best.end(), pred) != best.end();
        }
        if (!ok) {
          model.update(f, c, target, 1.0);
          model.update(f, c, pred, -1.0);
        }
        model.tick();
        ++steps;
        correct += ok ? 1 : 0;
        Action next = target;
        if (options.mode == TrainMode::kDynamic) {
          next = pred;
          if (options.explore > 0 && coin(rng) < options.explore) {
            next = cands[std::uniform_int_distribution<size_t>(
                0, cands.size() - 1)(rng)];
          }
        }
        if (options.on_step) options.on_step(c, pred, next);
        c = apply(c, next);
      }
    }
    if (log) {
      *log << "epoch " << epoch << ": action accuracy "
           << (steps ? static_cast<double>(correct) / steps : 1.0) << "\n";
    }
  }
  model.finalize();
  return model;
}

}  // namespace discoparse
