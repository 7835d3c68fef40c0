#include "discoparse/error.h"

namespace discoparse {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnaryChainPresent: return "UnaryChainPresent";
    case ErrorCode::kNotComplete: return "NotComplete";
    case ErrorCode::kReservedLabel: return "ReservedLabel";
    case ErrorCode::kEmptyCandidate: return "EmptyCandidate";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNoProjectiveAscendant: return "NoProjectiveAscendant";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kIncomparable: return "Incomparable";
    case ErrorCode::kInvalidTree: return "InvalidTree";
    case ErrorCode::kNotOrdered: return "NotOrdered";
    case ErrorCode::kEmptyLanguage: return "EmptyLanguage";
    case ErrorCode::kMissingPreterminal: return "MissingPreterminal";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidGrammar: return "InvalidGrammar";
    case ErrorCode::kNameCollision: return "NameCollision";
    case ErrorCode::kGrammarPropertyViolation:
      return "GrammarPropertyViolation";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kZeroLength: return "ZeroLength";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kNotTerminal: return "NotTerminal";
    case ErrorCode::kProjectiveStrategyOnDiscontinuousTree:
      return "ProjectiveStrategyOnDiscontinuousTree";
    case ErrorCode::kAlreadyBuilt: return "AlreadyBuilt";
    case ErrorCode::kIncompleteGold: return "IncompleteGold";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateIndex: return "DuplicateIndex";
    case ErrorCode::kMissingIndex: return "MissingIndex";
    case ErrorCode::kWeightSumViolation: return "WeightSumViolation";
    case ErrorCode::kDuplicateVariable: return "DuplicateVariable";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace discoparse
