#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orehom/linalg.hpp"
#include "orehom/scalar.hpp"

namespace orehom {

// Finite-dimensional (not necessarily unital) associative algebra given by
// structure constants: b_i b_j = sum_k sc(i,j,k) b_k. Construction verifies
// associativity on every basis triple.
struct Algebra {
  ScalarRing ring;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Scalar> sc;  // dim^3, index (i*dim + j)*dim + k
  std::string label;

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return sc[(i * dim + j) * dim + k];
  }
  bool same_content(const Algebra& o) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

AlgebraPtr make_algebra(ScalarRing ring, std::size_t dim,
                        std::vector<Scalar> sc,
                        std::vector<std::string> basis = {},
                        std::string label = "");

struct Element {
  AlgebraPtr alg;
  std::vector<Scalar> c;

  static Element zero(AlgebraPtr a);
  static Element basis(AlgebraPtr a, std::size_t i);
  static Element from(AlgebraPtr a, std::vector<Scalar> coords);

  bool is_zero() const;
  std::string str() const;
};

Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator-(const Element& x);
Element operator*(const Element& x, const Element& y);
Element operator*(const Scalar& c, const Element& x);
bool operator==(const Element& x, const Element& y);

void require_same_algebra(const Element& x, const Element& y);

// Basis of {a : a b = 0 for all b} (left annihilator) or {a : b a = 0}
// (right annihilator).
std::vector<Element> left_annihilator(const AlgebraPtr& a);
std::vector<Element> right_annihilator(const AlgebraPtr& a);

std::string render_coords(const ScalarRing& ring,
                          const std::vector<std::string>& basis,
                          const std::vector<Scalar>& coords);

}  // namespace orehom
