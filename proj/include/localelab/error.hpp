#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace localelab {

enum class ErrorKind {
  NotAPoset,
  NoMeetOrJoin,
  NotDistributive,
  NotLocalic,
  NotContinuous,
  NotMeetClosed,
  NotASublocale,
  DomainMismatch,
  HostMismatch,
  EmptyFamily,
  PreconditionUnmet,
  SizeLimit,
  UnknownWitness,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness()` names the offending
/// elements (or pair/triple) in human-readable form when there is one.
class LocaleError : public std::runtime_error {
 public:
  LocaleError(ErrorKind kind, const std::string& message, std::string witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// Outcome of a report-valued law check.
struct LawReport {
  bool passed = true;
  std::string law;      // first violated law, empty on pass
  std::string witness;  // rendered witness, empty on pass

  static LawReport ok() { return {}; }
  static LawReport fail(std::string law, std::string witness) {
    return {false, std::move(law), std::move(witness)};
  }
  explicit operator bool() const noexcept { return passed; }
};

}  // namespace localelab
