#include "dpfd/error.hpp"

namespace dpfd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopArc: return "LoopArc";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kEmptyFactorList: return "EmptyFactorList";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kArcNotPresent: return "ArcNotPresent";
    case ErrorCode::kNonThinQuotient: return "NonThinQuotient";
    case ErrorCode::kZeroMultiplicity: return "ZeroMultiplicity";
    case ErrorCode::kNotThin: return "NotThin";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kInvalidColoring: return "InvalidColoring";
    case ErrorCode::kTimeBudgetExceeded: return "TimeBudgetExceeded";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::string Decorate(ErrorCode code, const std::string& what,
                     std::optional<std::size_t> line) {
  std::string msg(ErrorCodeName(code));
  if (line) msg += " at line " + std::to_string(*line);
  if (!what.empty()) msg += ": " + what;
  return msg;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& what,
             std::optional<std::size_t> line)
    : std::runtime_error(Decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace dpfd
