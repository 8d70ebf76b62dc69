#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace usc {

class Rational;

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotTotal,
  kNotSurjective,
  kInfeasible,
  kDimensionMismatch,
  kRegionViolation,
  kUnknownExample,
};

const char* error_code_name(ErrorCode code);

// Thrown by every operation that rejects its input. Carries an exact witness
// point when one is meaningful (e.g. an x outside the domain).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<Rational> witness = {});

  ErrorCode code() const { return code_; }
  const std::vector<Rational>& witness() const;

 private:
  ErrorCode code_;
  std::vector<Rational> witness_;
};

}  // namespace usc
