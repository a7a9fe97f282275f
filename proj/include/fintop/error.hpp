#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fintop {

enum class Errc {
  DuplicateLabel,
  UnknownLabel,
  UnknownElement,
  InvalidIndex,
  InvalidRelation,
  NotATopology,
  NotT0,
  NotContinuous,
  ArityMismatch,
  DomainMismatch,
  NotDescending,
  NotDownBeatPoint,
  InvalidSubspace,
  NotADbpRetract,
  NotInF,
  NoCertificate,
  BudgetExceeded,
  EmptyPart,
  TooLarge,
  ParseError,
  CoversNotAcyclic,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library. `witness` carries element indices that
// exhibit the violation (e.g. the pair x <= x' for NotContinuous).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::size_t> witness = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
};

}  // namespace fintop
