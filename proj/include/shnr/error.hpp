#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shnr {

enum class Errc {
  NonSquare,
  NotHermitian,
  NotPositive,
  ZeroOperator,
  DimensionMismatch,
  NotMember,
  AlphaOutOfRange,
  RankOutOfRange,
  NonFinite,
  InvalidArgument,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Error raised by every precondition failure in the library. The code
/// is what callers (the CLI in particular) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace shnr
