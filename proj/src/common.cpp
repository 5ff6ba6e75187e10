#include "covlab/common.hpp"

#include <cstdlib>
#include <limits>

namespace covlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::NotInGaugeGroup: return "NotInGaugeGroup";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::Eq18Violated: return "Eq18Violated";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SectionInvalid: return "SectionInvalid";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::JTooLarge: return "JTooLarge";
    case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::InvalidFunctor: return "InvalidFunctor";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::InvalidImplementation: return "InvalidImplementation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

namespace {
std::string format_message(ErrorKind kind, const std::string& detail,
                           const std::vector<int>& witness) {
  std::string msg = std::string(to_string(kind)) + ": " + detail;
  if (!witness.empty()) {
    msg += " (witness:";
    for (int w : witness) msg += " " + std::to_string(w);
    msg += ")";
  }
  return msg;
}
}  // namespace

Error::Error(ErrorKind kind, std::string detail, std::vector<int> witness)
    : std::runtime_error(format_message(kind, detail, witness)),
      kind_(kind),
      detail_(std::move(detail)),
      witness_(std::move(witness)) {}

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("COVLAB_ENUM_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.search_cap = v;
  }
  return limits;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

}  // namespace covlab
