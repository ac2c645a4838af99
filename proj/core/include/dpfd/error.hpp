#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpfd {

enum class ErrorCode {
  kLoopArc,
  kVertexOutOfRange,
  kSizeLimitExceeded,
  kEmptyFactorList,
  kIndexOutOfRange,
  kArcNotPresent,
  kNonThinQuotient,
  kZeroMultiplicity,
  kNotThin,
  kNotConnected,
  kInvalidColoring,
  kTimeBudgetExceeded,
  kParseError,
  kArityMismatch,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `line()` is set for errors that come
// out of the text parsers.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace dpfd
