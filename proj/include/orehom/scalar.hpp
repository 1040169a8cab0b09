#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>

#include "orehom/common.hpp"

namespace orehom {

// Universal exact scalar value. Each ring canonicalizes:
//   Q   : reduced fraction, positive denominator (cpp_rational invariant)
//   F_p : integer residue in [0, p)
//   Z   : integer
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Rationals, PrimeField, Integers };

struct ScalarRing {
  RingKind kind = RingKind::Rationals;
  std::int64_t p = 0;  // modulus, PrimeField only

  static ScalarRing Q() { return {RingKind::Rationals, 0}; }
  static ScalarRing Fp(std::int64_t p);
  static ScalarRing Z() { return {RingKind::Integers, 0}; }

  bool is_field() const { return kind != RingKind::Integers; }
  bool operator==(const ScalarRing& o) const {
    return kind == o.kind && p == o.p;
  }

  Scalar canon(const Scalar& x) const;

  // Canonical F_p values are integer residues in [0, p) with p < 2^31, so
  // pairs of them fit int64 arithmetic (products stay below 2^62). The
  // residue64 guard rejects anything non-canonical, which then takes the
  // exact rational route through canon.
  bool residue64(const Scalar& x, std::int64_t& out) const {
    if (denominator(x) != 1) return false;
    BigInt n = numerator(x);
    if (n < 0 || n >= p) return false;
    out = n.convert_to<std::int64_t>();
    return true;
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    std::int64_t x, y;
    if (kind == RingKind::PrimeField && residue64(a, x) && residue64(b, y)) {
      std::int64_t s = x + y;
      return Scalar(s >= p ? s - p : s);
    }
    return canon(a + b);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    std::int64_t x, y;
    if (kind == RingKind::PrimeField && residue64(a, x) && residue64(b, y)) {
      std::int64_t s = x - y;
      return Scalar(s < 0 ? s + p : s);
    }
    return canon(a - b);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    std::int64_t x, y;
    if (kind == RingKind::PrimeField && residue64(a, x) && residue64(b, y))
      return Scalar((x * y) % p);
    return canon(a * b);
  }
  Scalar neg(const Scalar& a) const {
    std::int64_t x;
    if (kind == RingKind::PrimeField && residue64(a, x))
      return Scalar(x == 0 ? 0 : p - x);
    return canon(-a);
  }
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const {
    std::int64_t x, y;
    if (kind == RingKind::PrimeField && residue64(a, x) && residue64(b, y))
      return x == y;
    return canon(a) == canon(b);
  }
  bool is_zero(const Scalar& a) const {
    std::int64_t x;
    if (kind == RingKind::PrimeField && residue64(a, x)) return x == 0;
    return canon(a) == 0;
  }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(std::int64_t v) const { return canon(Scalar(v)); }

  // Strict per-ring literal syntax; see dsl docs. Throws on violation.
  Scalar parse(const std::string& text) const;
  std::string to_string(const Scalar& x) const;

  // Deterministic small-sample draw (explicit modulo; no distribution
  // objects, their output is implementation-defined).
  Scalar sample(std::mt19937_64& rng) const;

  std::string name() const;
};

bool is_prime_modulus(std::int64_t p);

}  // namespace orehom
