#pragma once

#include "orehom/multiplier.hpp"

namespace orehom {

// Element of the one-dimensional extension R + F.@sigma determined by a
// homothetic datum: pairs (a, xi) with product
//   (a, xi)(b, zeta) = (ab + zeta*(a sigma) + xi*(sigma b) + xi zeta s,
//    xi zeta).
struct ExtElement {
  Element a;
  Scalar xi;
};

struct HomotheticExtension {
  HomotheticDatum datum;

  AlgebraPtr base() const { return datum.algebra(); }
};

HomotheticExtension make_extension(HomotheticDatum datum);

ExtElement ext_zero(const HomotheticExtension& E);
ExtElement ext_sigma(const HomotheticExtension& E);
ExtElement ext_from(const HomotheticExtension& E, Element a, Scalar xi);
ExtElement ext_add(const HomotheticExtension& E, const ExtElement& x,
                   const ExtElement& y);
ExtElement ext_neg(const HomotheticExtension& E, const ExtElement& x);
ExtElement ext_mul(const HomotheticExtension& E, const ExtElement& x,
                   const ExtElement& y);
bool ext_eq(const HomotheticExtension& E, const ExtElement& x,
            const ExtElement& y);
std::string ext_str(const HomotheticExtension& E, const ExtElement& x);

ExtElement iota(const HomotheticExtension& E, const Element& a);
Scalar pi(const HomotheticExtension& E, const ExtElement& x);

// Structure constants of the (d+1)-dimensional algebra on basis
// (b_1..b_d, @sigma); no datum axioms assumed. Feeding the result to
// make_algebra runs the associativity gate, which succeeds exactly when
// (sigma, s) is a homothetic datum.
std::vector<Scalar> ext_structure_constants(const DoubleOperator& sigma,
                                            const Element& s);

// Extension materialized as an Algebra (runs the gate).
AlgebraPtr as_algebra(const HomotheticExtension& E);

// Rows: iota linear+injective, pi surjective, pi(iota(a)) = 0,
// ker(pi) = im(iota), iota multiplicative, and the @sigma rules
// a.@sigma = a sigma, @sigma.a = sigma a, @sigma^2 = @sigma + s,
// @sigma s = s @sigma (inside as_algebra).
struct ExactnessReport {
  std::vector<std::pair<std::string, CheckResult>> rows;
  bool ok() const;
};
ExactnessReport check_exactness(const HomotheticExtension& E);

// Coordinates of (a, xi) in as_algebra's basis and back.
Element ext_to_coords(const HomotheticExtension& E, const AlgebraPtr& S,
                      const ExtElement& x);
ExtElement coords_to_ext(const HomotheticExtension& E, const Element& v);

}  // namespace orehom
