#pragma once

#include "orehom/algebra.hpp"

namespace orehom {

// Linear map between algebras over the same scalar ring; m.at(k, i) is the
// coefficient of codomain basis k in the image of domain basis i.
struct LinMap {
  AlgebraPtr dom, cod;
  Mat m;

  static LinMap zero(AlgebraPtr dom, AlgebraPtr cod);
  static LinMap identity(AlgebraPtr a);
  static LinMap from_matrix(AlgebraPtr dom, AlgebraPtr cod, Mat m);
  static LinMap from_columns(AlgebraPtr dom, const std::vector<Element>& cols);

  Element operator()(const Element& x) const;
  bool is_zero() const { return mat_is_zero(dom->ring, m); }
};

LinMap operator+(const LinMap& f, const LinMap& g);
LinMap operator-(const LinMap& f, const LinMap& g);
LinMap operator*(const Scalar& c, const LinMap& f);
LinMap compose(const LinMap& f, const LinMap& g);  // x -> f(g(x))
LinMap power(const LinMap& f, std::size_t n);      // f^n, n >= 0 (f^0 = id)
bool operator==(const LinMap& f, const LinMap& g);

}  // namespace orehom
