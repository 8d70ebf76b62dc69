#include "usc/rational.h"

#include <cctype>

#include "usc/error.h"

namespace usc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kNotTotal: return "NOT_TOTAL";
    case ErrorCode::kNotSurjective: return "NOT_SURJECTIVE";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kRegionViolation: return "REGION_VIOLATION";
    case ErrorCode::kUnknownExample: return "UNKNOWN_EXAMPLE";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<Rational> witness)
    : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

const std::vector<Rational>& Error::witness() const { return witness_; }

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  return Rational(mpq_class(a.value_ / b.value_), Rational::Raw{});
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

}  // namespace usc
