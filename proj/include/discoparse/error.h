#ifndef DISCOPARSE_ERROR_H_
#define DISCOPARSE_ERROR_H_

#include <stdexcept>
#include <string>

namespace discoparse {

enum class ErrorCode {
  kUnaryChainPresent,
  kNotComplete,
  kReservedLabel,
  kEmptyCandidate,
  kUnknownNode,
  kNoProjectiveAscendant,
  kNotBinary,
  kIncomparable,
  kInvalidTree,
  kNotOrdered,
  kEmptyLanguage,
  kMissingPreterminal,
  kCapExceeded,
  kInvalidGrammar,
  kNameCollision,
  kGrammarPropertyViolation,
  kUnknownTag,
  kZeroLength,
  kIllegalAction,
  kNotTerminal,
  kProjectiveStrategyOnDiscontinuousTree,
  kAlreadyBuilt,
  kIncompleteGold,
  kParseError,
  kDuplicateIndex,
  kMissingIndex,
  kWeightSumViolation,
  kDuplicateVariable,
  kLengthMismatch,
  kInvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace discoparse

#endif  // DISCOPARSE_ERROR_H_
