#include "voa/scalar.hpp"

#include "voa/errors.hpp"

namespace voa {

Scalar parse_scalar(const std::string& text) {
  Scalar s;
  if (text.empty() || s.set_str(text, 10) != 0) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + text + "'");
  }
  if (s.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
  }
  s.canonicalize();
  return s;
}

Integer binomial(std::int64_t top, std::int64_t k) {
  if (k < 0) return 0;
  if (top >= 0 && k > top) return 0;
  Integer num = 1;
  Integer den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= Integer(static_cast<long>(top - i));
    den *= Integer(static_cast<long>(i + 1));
  }
  return num / den;
}

Scalar factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Scalar(f);
}

bool is_integer(const Scalar& s) { return s.get_den() == 1; }

std::int64_t to_int64(const Scalar& s) {
  if (!is_integer(s) || !s.get_num().fits_slong_p()) {
    throw Error(ErrorKind::NonIntegerWeight, "expected a machine integer, got " + s.get_str());
  }
  return s.get_num().get_si();
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedWeight: return "MixedWeight";
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::ModuleNotRegistered: return "ModuleNotRegistered";
    case ErrorKind::InvalidLattice: return "InvalidLattice";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::UnregisteredCoset: return "UnregisteredCoset";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnboundedRecursion: return "UnboundedRecursion";
    case ErrorKind::DenseTooLarge: return "DenseTooLarge";
    case ErrorKind::UnknownExperiment: return "UnknownExperiment";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace voa
