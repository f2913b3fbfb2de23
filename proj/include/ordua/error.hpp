// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordua {

enum class Errc {
  duplicate_label,
  unknown_label,
  antisymmetry_violation,
  carrier_too_large,
  kind_mismatch,
  not_monotone,
  carrier_mismatch,
  not_priestley,
  not_t0,
  not_a_filter_image,
  oracle_bound_exceeded,
  not_injective,
  invalid_argument,
  parse_error,
  schema_error,
  kind_hint_mismatch,
  io_error,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::antisymmetry_violation: return "AntisymmetryViolation";
    case Errc::carrier_too_large: return "CarrierTooLarge";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::not_priestley: return "NotPriestley";
    case Errc::not_t0: return "NotT0";
    case Errc::not_a_filter_image: return "NotAFilterImage";
    case Errc::oracle_bound_exceeded: return "OracleBoundExceeded";
    case Errc::not_injective: return "NotInjective";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::kind_hint_mismatch: return "KindHintMismatch";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ordua
