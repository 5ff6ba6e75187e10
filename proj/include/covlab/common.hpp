#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace covlab {

/// Named failure categories shared by every module. The CLI maps these onto
/// exit codes; tests match on them.
enum class ErrorKind {
  IndexOutOfRange,
  NoIdentity,
  NotInvertible,
  NotAssociative,
  CapExceeded,
  SearchSpaceTooLarge,
  InvalidCocycle,
  NotInGaugeGroup,
  NotNatural,
  Eq18Violated,
  PreconditionFailed,
  SectionInvalid,
  NotCentral,
  JTooLarge,
  NonPositiveLambda,
  InvalidCategory,
  InvalidFunctor,
  InvalidAction,
  InvalidImplementation,
  ParseError,
  SchemaError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::vector<int> witness = {});

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::vector<int> witness_;
};

/// Outcome of an exhaustive check. `witness` holds element/morphism indices
/// naming the first failure found in enumeration order.
struct Verdict {
  bool ok = true;
  std::string violation;
  std::vector<int> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string violation, std::vector<int> witness = {}) {
    return {false, std::move(violation), std::move(witness)};
  }
  explicit operator bool() const { return ok; }
};

/// Enumeration bounds. `search_cap` bounds brute-force spaces (twist maps,
/// cochains, natural families); `aut_cap` bounds the group order accepted by
/// automorphism enumeration; `hom_set_cap` bounds category hom-sets.
struct Limits {
  std::uint64_t search_cap = 10'000'000;
  int aut_cap = 128;
  int hom_set_cap = 64;

  /// Defaults overridden by COVLAB_ENUM_CAP when set to a positive integer.
  static Limits from_env();
};

/// Saturating integer power, used to size search spaces against caps.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace covlab
