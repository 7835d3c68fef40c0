#ifndef DISCOPARSE_SCORE_H_
#define DISCOPARSE_SCORE_H_

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "discoparse/action.h"
#include "discoparse/constituents.h"
#include "discoparse/sentence.h"
#include "discoparse/sf.h"
#include "discoparse/tree.h"

namespace discoparse {

inline constexpr const char* kNil = "NIL";
inline constexpr const char* kUnk = "UNK";

// Feature strings for one stack-free configuration. `shared` fire for every
// action; `combine[m]` fire only for COMBINE of memory element m.
struct SfFeatures {
  std::vector<std::string> shared;
  std::vector<std::vector<std::string>> combine;
};

// Positions min, max, min gap, max gap of a non-empty set; gap slots are 0
// when the set is contiguous.
std::array<int, 4> summary_positions(const IndexSet& s);

// `vocab`, when given, maps words outside it to UNK.
SfFeatures extract_features(const SfConfig& c, const Sentence& sentence,
                            const std::unordered_set<std::string>* vocab =
                                nullptr);

// Candidates in tie-break order: SHIFT, COMBINE by ascending max, NO-LABEL,
// LABEL-X by symbol id.
void sort_candidates(std::vector<Action>& actions);

class Scorer {
 public:
  virtual ~Scorer() = default;
  // One score per candidate.
  virtual std::vector<double> score(const SfConfig& c, const Sentence& sentence,
                                    const std::vector<Action>& candidates)
      const = 0;
  // Labels LABEL-X may use. Empty means the ROOT fallback.
  virtual std::vector<Symbol> labels() const = 0;
};

// Scores the static oracle's action 1 and everything else 0.
class OracleScorer : public Scorer {
 public:
  explicit OracleScorer(ConstituentSet gold);
  std::vector<double> score(const SfConfig& c, const Sentence& sentence,
                            const std::vector<Action>& candidates)
      const override;
  std::vector<Symbol> labels() const override { return labels_; }

 private:
  ConstituentSet gold_;
  std::vector<Symbol> labels_;
};

// Weight classes: SHIFT, COMBINE, NO-LABEL, then one per label.
class PerceptronModel : public Scorer {
 public:
  PerceptronModel() = default;
  explicit PerceptronModel(std::vector<Symbol> labels);

  std::vector<double> score(const SfConfig& c, const Sentence& sentence,
                            const std::vector<Action>& candidates)
      const override;
  std::vector<Symbol> labels() const override { return labels_; }

  std::vector<double> score_features(const SfFeatures& f, const SfConfig& c,
                                     const std::vector<Action>& candidates) const;

  // Training interface: +delta on the features of `action`.
  void update(const SfFeatures& f, const SfConfig& c, const Action& action,
              double delta);
  // Advances the averaging clock by one example.
  void tick() { ++clock_; }
  // Replaces the weights by their running average.
  void finalize();

  void add_vocab(const std::string& word) { vocab_.insert(word); }
  const std::unordered_set<std::string>& vocab() const { return vocab_; }
  size_t num_weights() const { return weights_.size(); }
  double weight(const std::string& feature, const Action& action) const;

  // `# ...` header lines, then feature<TAB>action<TAB>weight. Throws
  // Error(kParseError) on load.
  void save(std::ostream& out) const;
  static PerceptronModel load(std::istream& in);

 private:
  struct Entry {
    double w = 0.0;
    double acc = 0.0;   // sum of w over elapsed clock ticks
    int64_t stamp = 0;  // clock at the last change
  };

  int action_class(const Action& a) const;
  std::string class_name(int cls) const;
  int class_of_name(const std::string& name) const;
  int feature_id(const std::string& f);
  int find_feature(const std::string& f) const;
  static uint64_t key(int feature, int cls) {
    return (static_cast<uint64_t>(feature) << 20) | static_cast<uint64_t>(cls);
  }
  double lookup(int feature, int cls) const;

  std::vector<Symbol> labels_;
  std::unordered_map<Symbol, int> label_class_;
  std::unordered_map<std::string, int> feature_ids_;
  std::vector<std::string> feature_names_;
  std::unordered_map<uint64_t, Entry> weights_;
  std::unordered_set<std::string> vocab_;
  int64_t clock_ = 0;
};

// Legal actions of `c` in tie-break order with their scores.
std::vector<std::pair<Action, double>> score_actions(const Scorer& scorer,
                                                     const SfConfig& c,
                                                     const Sentence& sentence);

struct GreedyRun {
  Tree tree;
  std::vector<Action> actions;
};

// Greedy SF parse from sf_init(n); always 4n-2 actions. Tokens are kept on
// the leaves; no POS layer is added.
GreedyRun greedy_parse(const Scorer& scorer, const Sentence& sentence);

struct TrainExample {
  Sentence sentence;
  ConstituentSet gold;
};

// Gold trees with a POS layer: unary chains collapsed, preterminals removed.
TrainExample make_example(const Tree& tree);

enum class TrainMode { kStatic, kDynamic };

struct TrainOptions {
  TrainMode mode = TrainMode::kStatic;
  int epochs = 20;
  uint64_t seed = 42;
  double explore = 0.1;  // dynamic mode: chance of a random legal action
  // Called at every visited configuration with the model's prediction (before
  // the update) and the action actually taken.
  std::function<void(const SfConfig&, const Action& predicted,
                     const Action& taken)>
      on_step;
};

// Averaged perceptron. Throws Error(kIncompleteGold). Messages go to `log`
// when given.
PerceptronModel train(const std::vector<TrainExample>& corpus,
                      const TrainOptions& options, std::ostream* log = nullptr);

}  // namespace discoparse

#endif  // DISCOPARSE_SCORE_H_
