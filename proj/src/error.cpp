#include "fintop/error.hpp"

namespace fintop {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::InvalidIndex: return "InvalidIndex";
    case Errc::InvalidRelation: return "InvalidRelation";
    case Errc::NotATopology: return "NotATopology";
    case Errc::NotT0: return "NotT0";
    case Errc::NotContinuous: return "NotContinuous";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotDescending: return "NotDescending";
    case Errc::NotDownBeatPoint: return "NotDownBeatPoint";
    case Errc::InvalidSubspace: return "InvalidSubspace";
    case Errc::NotADbpRetract: return "NotADbpRetract";
    case Errc::NotInF: return "NotInF";
    case Errc::NoCertificate: return "NoCertificate";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::EmptyPart: return "EmptyPart";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::CoversNotAcyclic: return "CoversNotAcyclic";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace fintop
