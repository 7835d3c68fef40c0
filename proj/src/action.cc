#include "discoparse/action.h"

#include <charconv>

#include "discoparse/error.h"

namespace discoparse {

std::string Action::name() const {
  switch (kind) {
    case ActionKind::kShift:
      return "SHIFT";
    case ActionKind::kReduce:
      return "REDUCE-" + label.str();
    case ActionKind::kReduceUnary:
      return "REDUCEUNARY-" + label.str();
    case ActionKind::kSwap:
      return "SWAP";
    case ActionKind::kMerge:
      return "MERGE";
    case ActionKind::kGap:
      return "GAP";
    case ActionKind::kLabel:
      return "LABEL-" + label.str();
    case ActionKind::kNoLabel:
      return "NO-LABEL";
    case ActionKind::kCombine:
      return "COMBINE";
  }
  return "?";
}

std::string Action::payload() const {
  return kind == ActionKind::kCombine ? target.join(",") : std::string();
}

std::string Action::to_string() const {
  if (kind == ActionKind::kCombine) return "COMBINE-" + target.to_string();
  return name();
}

namespace {

bool starts_with(std::string_view s, std::string_view prefix, Symbol& rest) {
  if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) {
    return false;
  }
  rest = Symbol(s.substr(prefix.size()));
  return true;
}

IndexSet parse_indices(std::string_view text) {
  IndexSet s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size() || v < 1) {
      throw Error(ErrorCode::kParseError,
                  "bad COMBINE payload '" + std::string(text) + "'");
    }
    s.insert(v);
    pos = end + 1;
  }
  return s;
}

}  // namespace

Action parse_action(std::string_view name, std::string_view payload) {
  Symbol label;
  if (name == "SHIFT") return Action::shift();
  if (name == "SWAP") return Action::swap();
  if (name == "MERGE") return Action::merge();
  if (name == "GAP") return Action::gap();
  if (name == "NO-LABEL") return Action::no_label();
  if (name == "COMBINE") return Action::combine(parse_indices(payload));
  if (name.starts_with("COMBINE-{") && name.ends_with("}")) {
    return Action::combine(parse_indices(name.substr(9, name.size() - 10)));
  }
  if (starts_with(name, "REDUCEUNARY-", label)) {
    return Action::reduce_unary(label);
  }
  if (starts_with(name, "REDUCE-", label)) return Action::reduce(label);
  if (starts_with(name, "LABEL-", label)) return Action::label_with(label);
  throw Error(ErrorCode::kParseError,
              "unknown action '" + std::string(name) + "'");
}

std::string format_trace(const std::vector<Action>& actions) {
  std::string out;
  for (size_t i = 0; i < actions.size(); ++i) {
    out += std::to_string(i) + "\t" + actions[i].name();
    std::string p = actions[i].payload();
    if (!p.empty()) out += "\t" + p;
    out += "\n";
  }
  return out;
}

std::vector<Action> parse_trace(std::string_view text) {
  std::vector<Action> out;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    size_t f = 0;
    while (true) {
      size_t tab = line.find('\t', f);
      fields.push_back(line.substr(f, tab == std::string_view::npos
                                          ? std::string_view::npos
                                          : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(line_no) + ": expected 2 or 3 fields");
    }
    out.push_back(parse_action(fields[1], fields.size() == 3 ? fields[2] : ""));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Action& a) {
  return os << a.to_string();
}

std::string join_actions(const std::vector<Action>& actions, const char* sep) {
  std::string out;
  for (size_t i = 0; i < actions.size(); ++i) {
    if (i > 0) out += sep;
    out += actions[i].to_string();
  }
  return out;
}

}  // namespace discoparse
