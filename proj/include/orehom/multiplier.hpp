#pragma once

#include "orehom/linmap.hpp"

namespace orehom {

// A pair of linear endomaps of R packaging two-sided action of a formal
// element: left(a) plays the role of a*sigma, right(a) the role of sigma*a.
struct DoubleOperator {
  LinMap left;   // a -> a sigma
  LinMap right;  // a -> sigma a

  AlgebraPtr algebra() const { return left.dom; }
};

DoubleOperator make_double_operator(LinMap left, LinMap right);
DoubleOperator inner(const Element& a);
DoubleOperator dop_add(const DoubleOperator& s1, const DoubleOperator& s2);
DoubleOperator dop_scale(const Scalar& c, const DoubleOperator& s);
// (s1 s2): a(s1 s2) = (a s1)s2 and (s1 s2)a = s1(s2 a)
DoubleOperator dop_mul(const DoubleOperator& s1, const DoubleOperator& s2);
bool dop_eq(const DoubleOperator& s1, const DoubleOperator& s2);

// a(sigma b) = (a sigma)b, sigma(ab) = (sigma a)b, (ab)sigma = a(b sigma)
CheckResult is_bimultiplication(const DoubleOperator& s);
// bimultiplication + sigma(a sigma) = (sigma a)sigma
CheckResult is_double_homothetism(const DoubleOperator& s);

struct HomotheticDatum {
  DoubleOperator sigma;
  Element s;

  AlgebraPtr algebra() const { return sigma.algebra(); }
};

// Axioms, in check order: bimult.1/2/3, homothetism, commutation
// (sigma s = s sigma), quadratic (sigma^2 = sigma + inner(s)).
CheckResult check_datum(const DoubleOperator& sigma, const Element& s);

// Validated constructor; throws NotHomothetism / CommutationFails /
// QuadraticFails with a witness.
HomotheticDatum make_datum(DoubleOperator sigma, Element s);

// All w with w*w = w, by exhaustive element search (PrimeField only),
// sorted lexicographically.
std::vector<Element> enumerate_idempotents(const AlgebraPtr& A,
                                           std::uint64_t cap = kEnumerationCap);

// Some a with inner(a) = sigma, if one exists (exact linear solve).
std::optional<Element> find_inner_representative(const DoubleOperator& sigma);

}  // namespace orehom
