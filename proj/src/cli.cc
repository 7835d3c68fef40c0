#include "discoparse/cli.h"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "discoparse/chart.h"
#include "discoparse/error.h"
#include "discoparse/eval.h"
#include "discoparse/extract.h"
#include "discoparse/grammar_ops.h"
#include "discoparse/io.h"
#include "discoparse/language.h"
#include "discoparse/mlgap.h"
#include "discoparse/score.h"
#include "discoparse/sf.h"
#include "discoparse/swap.h"
#include "discoparse/tree_ops.h"

namespace discoparse {

namespace {

// Missing or unreadable files are data errors, not usage errors.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string rule_list(const std::vector<int>& rules) {
  std::string out;
  for (int r : rules) out += (out.empty() ? "" : ",") + std::to_string(r + 1);
  return out;
}

template <typename Config>
void emit_run(Config c, const std::vector<Action>& actions, bool trace,
              std::ostream& out) {
  if (!trace) {
    out << format_trace(actions);
    return;
  }
  out << "-\tinit\t" << c.to_string() << "\n";
  for (size_t k = 0; k < actions.size(); ++k) {
    c = apply(c, actions[k]);
    out << k << "\t" << actions[k].to_string() << "\t" << c.to_string() << "\n";
  }
}

struct Options {
  std::string grammar = "-";
  std::string trees = "-";
  std::string input = "-";
  std::string output = "-";
  std::string model;
  std::string gold;
  std::string pred;
  bool gap_explicit = false;
  bool isolate = false;
  bool prune = false;
  bool binarize = false;
  bool collapse = false;
  bool restore = false;
  int max_len = 6;
  std::string system = "sf";
  std::string strategy = "eager";
  std::string emit = "actions";
  std::string mode = "static";
  int epochs = 20;
  uint64_t seed = 42;
  double explore = 0.1;
  bool disc_only = false;
  bool ignore_root = false;
  bool per_sentence = false;
  std::vector<std::string> punct_tags;
  bool punct_given = false;
};

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  Grammar g = read_grammar(slurp(o.grammar, in));
  PropertyReport r = validate(g);
  auto line = [&](const char* name, bool ok, const std::vector<int>& bad) {
    out << name << "\t" << yes_no(ok);
    if (!ok) out << "\trules " << rule_list(bad);
    out << "\n";
  };
  out << "rules\t" << g.size() << "\n";
  out << "fanout\t" << g.max_fanout() << "\n";
  line("binary", r.binary, r.not_binary);
  line("terminal-restricted", r.terminal_restricted, r.not_terminal_restricted);
  line("gap-explicit", r.gap_explicit, r.not_gap_explicit);
  line("ordered", r.ordered, r.not_ordered);
  line("epsilon-free", r.epsilon_free, r.not_epsilon_free);
  return kExitOk;
}

int cmd_transform(const Options& o, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  int picked = o.gap_explicit + o.isolate + o.prune + o.binarize;
  if (picked != 1) {
    err << "transform: choose exactly one of --gap-explicit, "
           "--isolate-terminals, --prune, --binarize\n";
    return kExitUsage;
  }
  Grammar g = read_grammar(slurp(o.grammar, in));
  if (o.gap_explicit) {
    g = make_gap_explicit(g);
  } else if (o.isolate) {
    g = isolate_terminals(g);
  } else if (o.binarize) {
    g = binarize_rules(g);
  } else {
    PruneResult p = prune_useless(g);
    if (p.empty_language) err << "warning: the grammar generates no string\n";
    g = p.grammar;
  }
  write_file(o.output, write_grammar(g), out);
  return kExitOk;
}

int cmd_extract(const Options& o, std::istream& in, std::ostream& out) {
  std::vector<Tree> trees = read_trees(slurp(o.trees, in));
  for (Tree& t : trees) {
    if (o.collapse) {
      std::vector<Symbol> tags = pos_tags(t);
      t = add_preterminals(
          normalize_unaries(strip_preterminals(t), UnaryDirection::kCollapse),
          tags);
    }
    if (o.binarize) t = binarize(t);
  }
  write_file(o.output, write_grammar(extract_plcfrs(trees)), out);
  return kExitOk;
}

int cmd_chart_parse(const Options& o, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  if (o.grammar == "-" && o.input == "-") {
    err << "chart-parse: the grammar and the input cannot both come from "
           "stdin\n";
    return kExitUsage;
  }
  Grammar g = read_grammar(slurp(o.grammar, in));
  int failures = 0;
  for (const std::string& line : lines_of(slurp(o.input, in))) {
    Sentence s = parse_tagged(line);
    ChartResult r = chart_parse(g, s);
    if (!r.success) {
      out << "NOPARSE\n";
      ++failures;
      continue;
    }
    Tree t = *r.tree;
    if (o.restore) {
      t = normalize_unaries(debinarize(restore_labels(t)),
                            UnaryDirection::kExpand);
    }
    out << to_bracket(t) << "\t" << fmt::format("{:.6f}", r.weight) << "\n";
  }
  if (failures > 0) err << failures << " sentence(s) without a parse\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  Grammar g = read_grammar(slurp(o.grammar, in));
  for (const auto& [w, weight] : generate_weighted(g, o.max_len)) {
    out << join(w) << "\t" << fmt::format("{:.6f}", weight) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out,
               std::ostream& err) {
  bool trace = o.emit == "trace";
  std::vector<Tree> trees =
      read_trees(slurp(o.trees, in), {.allow_reserved = true});
  bool first = true;
  for (const Tree& raw : trees) {
    if (!first) out << "\n";
    first = false;
    Tree t = strip_preterminals(raw);
    if (o.system == "sf" || o.system == "mlgap") {
      ConstituentSet gold =
          tree_to_constituents(normalize_unaries(t, UnaryDirection::kCollapse));
      if (o.system == "sf") {
        emit_run(sf_init(t.length()), sf_static_oracle(gold), trace, out);
      } else {
        emit_run(mlgap_init(t.length()), mlgap_oracle(gold), trace, out);
      }
      continue;
    }
    SwapStrategy strategy = o.system == "sr" ? SwapStrategy::kProjective
                                             : parse_swap_strategy(o.strategy);
    if (o.system == "sr" && o.strategy != "eager") {
      err << "oracle: --strategy is ignored for the sr system\n";
    }
    Tree bin = t.is_binary() ? t : binarize(t);
    SrOptions options;
    options.swap = strategy != SwapStrategy::kProjective;
    emit_run(sr_init(t.length(), options), swap_oracle(bin, strategy), trace,
             out);
  }
  return kExitOk;
}

int cmd_train(const Options& o, std::istream& in, std::ostream& out,
              std::ostream& err) {
  std::vector<TrainExample> corpus;
  for (const Tree& t : read_trees(slurp(o.trees, in))) {
    corpus.push_back(make_example(t));
  }
  TrainOptions options;
  options.mode = o.mode == "dynamic" ? TrainMode::kDynamic : TrainMode::kStatic;
  options.epochs = o.epochs;
  options.seed = o.seed;
  options.explore = o.explore;
  PerceptronModel m = train(corpus, options, &err);
  std::ostringstream text;
  m.save(text);
  write_file(o.model, text.str(), out);
  err << "trained on " << corpus.size() << " sentence(s), " << m.num_weights()
      << " weights\n";
  return kExitOk;
}

int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
  std::istringstream text(slurp(o.model, in));
  PerceptronModel m = PerceptronModel::load(text);
  for (const std::string& line : lines_of(slurp(o.input, in))) {
    Sentence s = parse_tagged(line);
    Tree t = greedy_parse(m, s).tree;
    std::vector<Symbol> tags;
    for (const TaggedToken& tok : s) tags.push_back(tok.pos);
    t = add_preterminals(normalize_unaries(t, UnaryDirection::kExpand), tags);
    out << to_bracket(t) << "\n";
  }
  return kExitOk;
}

int cmd_eval(const Options& o, std::istream& in, std::ostream& out,
             std::ostream& err) {
  if (o.gold == "-" && o.pred == "-") {
    err << "eval: gold and predicted trees cannot both come from stdin\n";
    return kExitUsage;
  }
  TreeReadOptions ro{.allow_reserved = true};
  std::vector<Tree> gold = read_trees(slurp(o.gold, in), ro);
  std::vector<Tree> pred = read_trees(slurp(o.pred, in), ro);
  EvalParams params;
  params.disc_only = o.disc_only;
  params.ignore_root = o.ignore_root;
  if (o.punct_given) {
    params.punct_tags.clear();
    for (const std::string& t : o.punct_tags) {
      if (!t.empty()) params.punct_tags.insert(Symbol(t));
    }
  }
  EvalReport r = evaluate_trees(gold, pred, params);
  auto pct = [](double v) { return fmt::format("{:.2f}", 100.0 * v); };
  if (o.per_sentence) {
    for (size_t s = 0; s < r.sentences.size(); ++s) {
      const EvalResult& e = r.sentences[s];
      out << s + 1 << "\t" << e.matched << "\t" << e.predicted << "\t"
          << e.gold << "\t" << pct(e.f1) << "\t" << (e.exact ? "exact" : "-")
          << "\n";
    }
  }
  long exact = 0;
  for (const EvalResult& e : r.sentences) exact += e.exact ? 1 : 0;
  out << "sentences = " << r.sentences.size() << "\n";
  out << "matched = " << r.corpus.matched << "\n";
  out << "predicted = " << r.corpus.predicted << "\n";
  out << "gold = " << r.corpus.gold << "\n";
  out << "P = " << pct(r.corpus.precision) << "\n";
  out << "R = " << pct(r.corpus.recall) << "\n";
  out << "F = " << pct(r.corpus.f1) << "\n";
  out << "EX = "
      << pct(r.sentences.empty() ? 1.0
                                 : static_cast<double>(exact) / r.sentences.size())
      << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discontinuous constituency parsing toolkit", "discoparse"};
  app.require_subcommand(1);

  auto* validate_cmd =
      app.add_subcommand("validate-grammar", "Report grammar properties");
  validate_cmd->add_option("-g,--grammar", o.grammar, "Grammar file");

  auto* transform_cmd =
      app.add_subcommand("transform", "Normalize a grammar");
  transform_cmd->add_option("-g,--grammar", o.grammar, "Grammar file");
  transform_cmd->add_option("-o,--output", o.output, "Output file");
  transform_cmd->add_flag("--gap-explicit", o.gap_explicit);
  transform_cmd->add_flag("--isolate-terminals", o.isolate);
  transform_cmd->add_flag("--prune", o.prune);
  transform_cmd->add_flag("--binarize", o.binarize);

  auto* extract_cmd =
      app.add_subcommand("extract", "Read a PLCFRS off a treebank");
  extract_cmd->add_option("-t,--trees", o.trees, "Tree file");
  extract_cmd->add_option("-o,--output", o.output, "Output file");
  extract_cmd->add_flag("--binarize", o.binarize);
  extract_cmd->add_flag("--collapse-unaries", o.collapse);

  auto* chart_cmd =
      app.add_subcommand("chart-parse", "Weighted CYK over tagged sentences");
  chart_cmd->add_option("-g,--grammar", o.grammar, "Grammar file")->required();
  chart_cmd->add_option("-i,--input", o.input, "token/TAG lines");
  chart_cmd->add_flag("--restore", o.restore,
                      "Undo binarization, unary collapsing and label renaming");

  auto* enum_cmd =
      app.add_subcommand("enumerate", "List the language up to a length");
  enum_cmd->add_option("-g,--grammar", o.grammar, "Grammar file");
  enum_cmd->add_option("--max-len", o.max_len)->check(CLI::Range(0, 64));

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Static oracle action sequences");
  oracle_cmd->add_option("-t,--trees", o.trees, "Tree file");
  oracle_cmd->add_option("--system", o.system)
      ->check(CLI::IsMember({"sr", "swap", "mlgap", "sf"}));
  oracle_cmd->add_option("--strategy", o.strategy)
      ->check(CLI::IsMember({"eager", "lazy", "lazier"}));
  oracle_cmd->add_option("--emit", o.emit)
      ->check(CLI::IsMember({"actions", "trace"}));

  auto* train_cmd =
      app.add_subcommand("train", "Train an averaged perceptron");
  train_cmd->add_option("-t,--trees", o.trees, "Training trees");
  train_cmd->add_option("-m,--model", o.model, "Model output")->required();
  train_cmd->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"static", "dynamic"}));
  train_cmd->add_option("--epochs", o.epochs)->check(CLI::PositiveNumber);
  train_cmd->add_option("--seed", o.seed);
  train_cmd->add_option("--explore", o.explore)->check(CLI::Range(0.0, 1.0));

  auto* parse_cmd = app.add_subcommand("parse", "Greedy stack-free parsing");
  parse_cmd->add_option("-m,--model", o.model, "Model file")->required();
  parse_cmd->add_option("-i,--input", o.input, "token/TAG lines");

  auto* eval_cmd = app.add_subcommand("eval", "Labelled bracket scores");
  eval_cmd->add_option("--gold", o.gold, "Gold trees")->required();
  eval_cmd->add_option("--pred", o.pred, "Predicted trees")->required();
  eval_cmd->add_flag("--disc-only", o.disc_only);
  eval_cmd->add_flag("--ignore-root", o.ignore_root);
  eval_cmd->add_flag("--per-sentence", o.per_sentence);
  eval_cmd->add_option("--punct-tags", o.punct_tags,
                       "Comma-separated punctuation tags")
      ->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return kExitUsage;
  }
  o.punct_given = eval_cmd->count("--punct-tags") > 0;

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, in, out);
    if (transform_cmd->parsed()) return cmd_transform(o, in, out, err);
    if (extract_cmd->parsed()) return cmd_extract(o, in, out);
    if (chart_cmd->parsed()) return cmd_chart_parse(o, in, out, err);
    if (enum_cmd->parsed()) return cmd_enumerate(o, in, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, in, out, err);
    if (train_cmd->parsed()) return cmd_train(o, in, out, err);
    if (parse_cmd->parsed()) return cmd_parse(o, in, out);
    if (eval_cmd->parsed()) return cmd_eval(o, in, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace discoparse
