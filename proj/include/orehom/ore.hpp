#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "orehom/linmap.hpp"
#include "orehom/skewderiv.hpp"

namespace orehom {

// R[x; alpha, delta] with left coefficients. x^i is not itself an element
// (the coefficient algebra is nonunital); it enters through coefficient
// positions and the x_left / x_right actions.
class OreRing {
 public:
  AlgebraPtr alg;
  LinMap alpha;
  LinMap delta;
  std::size_t degree_cap;

  OreRing(AlgebraPtr a, LinMap al, LinMap de, std::size_t cap)
      : alg(std::move(a)),
        alpha(std::move(al)),
        delta(std::move(de)),
        degree_cap(cap) {}

  // Gamma^m_i, memoized; levels_[m][i] once filled.
  const LinMap& gamma(std::size_t m, std::size_t i) const;

 private:
  mutable std::mutex memo_mutex_;
  mutable std::vector<std::vector<LinMap>> levels_;
};

using OreRingPtr = std::shared_ptr<const OreRing>;

// Validates that alpha is an endomorphism and delta an alpha-skew derivation.
OreRingPtr make_ore_ring(const AlgebraPtr& alg, const LinMap& alpha,
                         const LinMap& delta,
                         std::size_t degree_cap = kDegreeCap);

struct OrePoly {
  OreRingPtr ring;
  std::vector<Element> coeff;  // coeff[i] multiplies x^i; no trailing zeros

  bool is_zero() const { return coeff.empty(); }
  // degree of the zero polynomial is reported as -1
  long long deg() const { return static_cast<long long>(coeff.size()) - 1; }
};

OrePoly ore_zero(const OreRingPtr& ring);
OrePoly ore_monomial(const OreRingPtr& ring, Element a, std::size_t n);
OrePoly ore_from_coeffs(const OreRingPtr& ring, std::vector<Element> coeff);

OrePoly ore_add(const OrePoly& p, const OrePoly& q);
OrePoly ore_sub(const OrePoly& p, const OrePoly& q);
OrePoly ore_neg(const OrePoly& p);
OrePoly ore_scale(const Scalar& c, const OrePoly& p);
OrePoly ore_mul(const OrePoly& p, const OrePoly& q);
bool ore_eq(const OrePoly& p, const OrePoly& q);

// coefficient of x^n (zero element when n exceeds the degree)
Element ore_coeff(const OrePoly& p, std::size_t n);

// apply f coefficient-wise; f maps p's coefficient algebra into target's.
OrePoly ore_map_coeffs(const OreRingPtr& target, const OrePoly& p,
                       const LinMap& f);

OrePoly x_right(const OrePoly& p);  // a x^n -> a x^{n+1}
OrePoly x_left(const OrePoly& p);   // a x^n -> alpha(a) x^{n+1} + delta(a) x^n

std::string ore_str(const OrePoly& p);

const LinMap& gamma(const OreRingPtr& ring, std::size_t m, std::size_t i);

}  // namespace orehom
