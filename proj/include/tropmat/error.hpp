#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropmat {

/// Failure categories raised by the library. Each validation failure has its
/// own code so callers (and tests) can tell them apart.
enum class Errc {
  MalformedInput,
  DimensionMismatch,
  EmptyInput,
  OutOfRange,
  LoopEdge,
  DuplicateEdge,
  DuplicateVertex,
  UnknownVertex,
  Disconnected,
  BridgePresent,
  UnequalBasisSizes,
  DuplicateBasis,
  ExchangeViolated,
  ElementInEveryBasis,
  ElementInNoBasis,
  OverlappingSets,
  CapExceeded,
  NotContained,
  InternalAssertion,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tropmat
