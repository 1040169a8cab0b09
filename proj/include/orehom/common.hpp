#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orehom {

enum class ErrorKind {
  BadShape,
  AssociativityViolation,
  AlgebraMismatch,
  DomainMismatch,
  RingMismatch,
  NotAField,
  BadScalar,
  DivByZeroDenominator,
  NotHomothetism,
  CommutationFails,
  QuadraticFails,
  BadVarsigma,
  NonIdempotentVarsigma,
  MuConstraintViolated,
  EndoPreconditionFailed,
  ConditionsFail,
  NotRestrictable,
  EnumerationBudgetExceeded,
  BadN,
  BadK,
  BadFamilyParams,
  ContextNotType1,
  IndexOutOfRange,
  DimensionCapExceeded,
  DegreeCapExceeded,
  ParseError,
  UnresolvedName,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

// A concrete counterexample: which identity failed, at which basis/sample
// indices, and the two sides that disagree (rendered as element strings).
struct Witness {
  std::string identity;
  std::vector<std::size_t> indices;
  std::string lhs;
  std::string rhs;
  std::string render() const;
};

struct CheckResult {
  bool ok = true;
  std::optional<Witness> witness;
  static CheckResult pass() { return {true, std::nullopt}; }
  static CheckResult fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

inline constexpr std::size_t kDimensionCap = 64;
inline constexpr std::size_t kDegreeCap = 32;
inline constexpr std::uint64_t kEnumerationCap = 1u << 20;

}  // namespace orehom
