#include "orehom/scalar.hpp"

#include <cctype>

namespace orehom {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::BadScalar: return "BadScalar";
    case ErrorKind::DivByZeroDenominator: return "DivByZeroDenominator";
    case ErrorKind::NotHomothetism: return "NotHomothetism";
    case ErrorKind::CommutationFails: return "CommutationFails";
    case ErrorKind::QuadraticFails: return "QuadraticFails";
    case ErrorKind::BadVarsigma: return "BadVarsigma";
    case ErrorKind::NonIdempotentVarsigma: return "NonIdempotentVarsigma";
    case ErrorKind::MuConstraintViolated: return "MuConstraintViolated";
    case ErrorKind::EndoPreconditionFailed: return "EndoPreconditionFailed";
    case ErrorKind::ConditionsFail: return "ConditionsFail";
    case ErrorKind::NotRestrictable: return "NotRestrictable";
    case ErrorKind::EnumerationBudgetExceeded:
      return "EnumerationBudgetExceeded";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadFamilyParams: return "BadFamilyParams";
    case ErrorKind::ContextNotType1: return "ContextNotType1";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnresolvedName: return "UnresolvedName";
  }
  return "UnknownError";
}

std::string Witness::render() const {
  std::string s = "identity '" + identity + "' fails";
  if (!indices.empty()) {
    s += " at indices (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(indices[i]);
    }
    s += ")";
  }
  s += ": lhs = " + lhs + ", rhs = " + rhs;
  return s;
}

bool is_prime_modulus(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

ScalarRing ScalarRing::Fp(std::int64_t p) {
  if (p >= (std::int64_t(1) << 31))
    fail(ErrorKind::BadScalar, "prime modulus must be < 2^31");
  if (!is_prime_modulus(p))
    fail(ErrorKind::BadScalar,
         "modulus " + std::to_string(p) + " is not prime");
  return {RingKind::PrimeField, p};
}

Scalar ScalarRing::canon(const Scalar& x) const {
  switch (kind) {
    case RingKind::Rationals:
      return x;  // cpp_rational keeps reduced form, positive denominator
    case RingKind::Integers:
      if (denominator(x) != 1)
        fail(ErrorKind::BadScalar, "non-integer value over Z");
      return x;
    case RingKind::PrimeField: {
      BigInt num = numerator(x), den = denominator(x);
      if (den == 1 && num >= 0 && num < p) return x;
      BigInt m(p);
      BigInt d = den % m;
      if (d < 0) d += m;
      BigInt n = num % m;
      if (n < 0) n += m;
      if (den == 1) return Scalar(n);
      if (d == 0)
        fail(ErrorKind::DivByZeroDenominator,
             "denominator divisible by " + std::to_string(p));
      BigInt dinv = boost::multiprecision::powm(d, m - 2, m);
      return Scalar((n * dinv) % m);
    }
  }
  fail(ErrorKind::BadScalar, "unreachable");
}

Scalar ScalarRing::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

Scalar ScalarRing::inv(const Scalar& a) const {
  if (!is_field())
    fail(ErrorKind::NotAField, "inversion requires a field, got Z");
  Scalar c = canon(a);
  if (c == 0) fail(ErrorKind::BadScalar, "division by zero");
  if (kind == RingKind::Rationals) return Scalar(1) / c;
  BigInt n = numerator(c);
  return Scalar(boost::multiprecision::powm(n, BigInt(p) - 2, BigInt(p)));
}

namespace {

bool parse_decimal(const std::string& s, std::size_t& i, BigInt& out) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) return false;
  out = BigInt(s.substr(start, i - start));
  return true;
}

}  // namespace

Scalar ScalarRing::parse(const std::string& text) const {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  BigInt num;
  if (!parse_decimal(text, i, num))
    fail(ErrorKind::ParseError, "bad scalar literal '" + text + "'");
  BigInt den(1);
  bool has_den = false;
  if (i < text.size() && text[i] == '/') {
    ++i;
    has_den = true;
    if (!parse_decimal(text, i, den))
      fail(ErrorKind::ParseError, "bad scalar literal '" + text + "'");
  }
  if (i != text.size())
    fail(ErrorKind::ParseError, "bad scalar literal '" + text + "'");

  switch (kind) {
    case RingKind::Rationals:
      if (den == 0)
        fail(ErrorKind::DivByZeroDenominator,
             "zero denominator in '" + text + "'");
      return Scalar(negative ? -num : num, den);
    case RingKind::Integers:
      if (has_den)
        fail(ErrorKind::ParseError,
             "fractional literal '" + text + "' not allowed over Z");
      return Scalar(negative ? -num : num);
    case RingKind::PrimeField:
      if (has_den || negative)
        fail(ErrorKind::ParseError, "F" + std::to_string(p) +
                                        " literal '" + text +
                                        "' must be a residue 0.." +
                                        std::to_string(p - 1));
      if (num >= p)
        fail(ErrorKind::ParseError, "residue '" + text + "' out of range 0.." +
                                        std::to_string(p - 1));
      return Scalar(num);
  }
  fail(ErrorKind::ParseError, "unreachable");
}

std::string ScalarRing::to_string(const Scalar& x) const {
  Scalar c = canon(x);
  if (denominator(c) == 1) return numerator(c).str();
  return numerator(c).str() + "/" + denominator(c).str();
}

Scalar ScalarRing::sample(std::mt19937_64& rng) const {
  switch (kind) {
    case RingKind::PrimeField:
      return Scalar(BigInt(rng() % static_cast<std::uint64_t>(p)));
    case RingKind::Integers:
      return Scalar(static_cast<std::int64_t>(rng() % 9) - 4);
    case RingKind::Rationals: {
      std::int64_t num = static_cast<std::int64_t>(rng() % 9) - 4;
      std::int64_t den = static_cast<std::int64_t>(rng() % 3) + 1;
      return Scalar(num, den);
    }
  }
  return Scalar(0);
}

std::string ScalarRing::name() const {
  switch (kind) {
    case RingKind::Rationals: return "Q";
    case RingKind::PrimeField: return "F" + std::to_string(p);
    case RingKind::Integers: return "Z";
  }
  return "?";
}

}  // namespace orehom
