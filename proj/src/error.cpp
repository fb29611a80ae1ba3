#include "tropmat/error.hpp"

namespace tropmat {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedInput: return "malformed input";
    case Errc::DimensionMismatch: return "dimension mismatch";
    case Errc::EmptyInput: return "empty input";
    case Errc::OutOfRange: return "out of range";
    case Errc::LoopEdge: return "loop edge";
    case Errc::DuplicateEdge: return "duplicate edge";
    case Errc::DuplicateVertex: return "duplicate vertex";
    case Errc::UnknownVertex: return "unknown vertex";
    case Errc::Disconnected: return "disconnected graph";
    case Errc::BridgePresent: return "bridge present";
    case Errc::UnequalBasisSizes: return "unequal basis sizes";
    case Errc::DuplicateBasis: return "duplicate basis";
    case Errc::ExchangeViolated: return "exchange property violated";
    case Errc::ElementInEveryBasis: return "element in every basis";
    case Errc::ElementInNoBasis: return "element in no basis";
    case Errc::OverlappingSets: return "overlapping sets";
    case Errc::CapExceeded: return "enumeration cap exceeded";
    case Errc::NotContained: return "halfspace does not contain the generators";
    case Errc::InternalAssertion: return "internal assertion";
  }
  return "unknown error";
}

}  // namespace tropmat
