#pragma once

#include "orehom/homext.hpp"

namespace orehom {

CheckResult is_endomorphism(const LinMap& alpha);
// delta(ab) = delta(a)b + alpha(a)delta(b)
CheckResult is_skew_derivation(const LinMap& delta, const LinMap& alpha);

// Full extension datum for S = R + F.@sigma:
//   alpha_S(a + xi @sigma) = alpha(a) + xi w + xi varsigma @sigma
//   delta_S(a + xi @sigma) = delta(a) + xi e + xi mu @sigma
struct Quintuple {
  HomotheticDatum datum;
  LinMap alpha, delta;
  Element w, e;
  Scalar varsigma, mu;
};

void validate_varsigma(const ScalarRing& ring, const Scalar& varsigma);
void validate_mu(const ScalarRing& ring, const Scalar& varsigma,
                 const Scalar& mu);

// Conditions for alpha_S to be an endomorphism of S, checked on basis
// elements:
//   (i)   alpha(s) - varsigma s = w^2 + varsigma(w sigma) + varsigma(sigma w) - w
//   (ii)  alpha(a sigma) = alpha(a)(varsigma sigma + w)
//   (iii) alpha(sigma a) = (varsigma sigma + w)alpha(a)
// require_endo gates the precondition that alpha is an endomorphism
// (EndoPreconditionFailed); pass false to evaluate the conditions formally.
CheckResult check_endo_ext(const HomotheticDatum& datum, const LinMap& alpha,
                           const Element& w, const Scalar& varsigma,
                           bool require_endo = true);

// Conditions for delta_S to be an alpha_S-skew derivation:
//   (a) delta(s) - mu s = e sigma + varsigma(sigma e) + w e + mu(w sigma) - e
//   (b) delta(a sigma) = delta(a)sigma + alpha(a)(e + mu sigma)
//   (c) delta(sigma a) = (w + varsigma sigma)delta(a) + (e + mu sigma)a
// require_endo additionally gates: alpha endomorphism, delta alpha-skew,
// and check_endo_ext passing.
CheckResult check_deriv_ext(const HomotheticDatum& datum, const LinMap& alpha,
                            const LinMap& delta, const Element& w,
                            const Element& e, const Scalar& varsigma,
                            const Scalar& mu, bool require_endo = true);

// alpha_S / delta_S as maps on S = as_algebra(E); conditions are verified
// first (ConditionsFail with witness).
LinMap extend_endo(const HomotheticExtension& E, const AlgebraPtr& S,
                   const LinMap& alpha, const Element& w,
                   const Scalar& varsigma);
LinMap extend_deriv(const HomotheticExtension& E, const AlgebraPtr& S,
                    const Quintuple& q);

// All w solving (ii)+(iii) and passing the quadratic filter (i).
// Over F_p the affine set of the linear part is enumerated and filtered;
// over Q only a zero-dimensional linear part can be decided.
struct WSolveResult {
  enum class Kind { Points, Indeterminate } kind = Kind::Points;
  std::vector<Element> points;
  AffineSolutionSet linear_part;
};
WSolveResult solve_endo_ext(const HomotheticDatum& datum, const LinMap& alpha,
                            const Scalar& varsigma,
                            std::uint64_t cap = kEnumerationCap);

// Affine solution set in e of (a)+(b)+(c) for fixed mu.
struct ESolveResult {
  bool solvable = false;
  Element particular;
  std::vector<Element> kernel;
};
ESolveResult solve_deriv_ext(const HomotheticDatum& datum,
                             const LinMap& alpha, const LinMap& delta,
                             const Element& w, const Scalar& varsigma,
                             const Scalar& mu, bool require_endo = true);

// Same system with (e, mu) jointly unknown; coordinates are (e_1..e_d, mu).
AffineSolutionSet solve_deriv_ext_mu(const HomotheticDatum& datum,
                                     const LinMap& alpha, const LinMap& delta,
                                     const Element& w, const Scalar& varsigma,
                                     bool require_endo = true);

// delta_S^c(u) = alpha_S(u)c - cu for c = b + zeta @sigma, together with its
// restriction to R and the extracted (e, mu).
struct InnerExtDerivation {
  LinMap deltaS;  // on S
  LinMap delta;   // restriction to R
  Element e;
  Scalar mu;
};
InnerExtDerivation inner_ext_derivation(const HomotheticExtension& E,
                                        const AlgebraPtr& S,
                                        const LinMap& alpha, const Element& w,
                                        const Scalar& varsigma,
                                        const ExtElement& c);

/// Closed forms for the same data:
//   e = varsigma(sigma b) - b sigma + w b + zeta(w sigma + (varsigma - 1)s)
//   mu = zeta(varsigma - 1)
std::pair<Element, Scalar> inner_ext_closed_form(const HomotheticDatum& datum,
                                                 const LinMap& alpha,
                                                 const Element& w,
                                                 const Scalar& varsigma,
                                                 const ExtElement& c);

// Split a map on S preserving iota(R) into (map on R, extra, coeff) where
// f(@sigma) = extra + coeff @sigma; NotRestrictable otherwise.
struct SigmaSplit {
  LinMap base;
  Element extra;
  Scalar coeff;
};
SigmaSplit split_over_sigma(const HomotheticExtension& E, const AlgebraPtr& S,
                            const LinMap& f);

// Read a full quintuple back from (alpha_S, delta_S); the result passes both
// checkers (ConditionsFail otherwise). NonIdempotentVarsigma when the
// sigma-coefficient of alpha_S(@sigma) is not 0/1.
Quintuple restrict_and_extract(const HomotheticExtension& E,
                               const AlgebraPtr& S, const LinMap& alphaS,
                               const LinMap& deltaS);

// delta^sigma(a) = alpha(a)sigma - sigma a; an alpha-skew derivation even
// when sigma is merely a bimultiplication.
LinMap homothetic_derivation(const DoubleOperator& sigma, const LinMap& alpha);

}  // namespace orehom
