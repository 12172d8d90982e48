#pragma once

#include <stdexcept>
#include <string>

namespace qed {

enum class errc {
  invariant_violation,
  inconsistent,
  non_minimal_input,
  not_divisible,
  invalid_argument,
  wrong_kodaira_dim,
  non_kahler_input,
  missing_fibration_data,
  odd_b1,
  exceptional_input,
  not_found_within_bound,
  bad_prime,
  scan_exhausted,
  syntax_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invariant_violation:   return "InvariantViolation";
    case errc::inconsistent:          return "Inconsistent";
    case errc::non_minimal_input:     return "NonMinimalInput";
    case errc::not_divisible:         return "NotDivisible";
    case errc::invalid_argument:      return "InvalidArgument";
    case errc::wrong_kodaira_dim:     return "WrongKodairaDim";
    case errc::non_kahler_input:      return "NonKahlerInput";
    case errc::missing_fibration_data:return "MissingFibrationData";
    case errc::odd_b1:                return "OddB1";
    case errc::exceptional_input:     return "ExceptionalInput";
    case errc::not_found_within_bound:return "NotFoundWithinBound";
    case errc::bad_prime:             return "BadPrime";
    case errc::scan_exhausted:        return "ScanExhausted";
    case errc::syntax_error:          return "SyntaxError";
  }
  return "Error";
}

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

}  // namespace qed
