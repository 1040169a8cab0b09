#include <doctest.h>

#include <algorithm>

#include "orehom/catalog.hpp"
#include "orehom/multiplier.hpp"

using namespace orehom;

TEST_CASE("epsilon_k is an idempotent double homothetism on daleth_n") {
  for (const ScalarRing& ring : {ScalarRing::Fp(2), ScalarRing::Q()}) {
    for (std::size_t n : {3, 4, 5}) {
      AlgebraPtr A = daleth(n, ring);
      for (std::size_t k = 2; k <= n - 1; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        DoubleOperator eps = epsilon(A, k);
        CHECK(is_bimultiplication(eps).ok);
        CHECK(is_double_homothetism(eps).ok);
        // idempotent: eps * eps = eps
        CHECK(dop_eq(dop_mul(eps, eps), eps));
        CHECK(check_datum(eps, Element::zero(A)).ok);
      }
    }
  }
  AlgebraPtr A = daleth(3, ScalarRing::Fp(2));
  CHECK_THROWS_AS((void)epsilon(A, 1), Error);
  CHECK_THROWS_AS((void)epsilon(A, 3), Error);
}

TEST_CASE("inner double operators are bimultiplications") {
  AlgebraPtr A = daleth(3, ScalarRing::Q());
  Element a = Element::basis(A, 0) + Element::basis(A, 2);  // e11 + e13
  DoubleOperator ia = inner(a);
  CHECK(is_bimultiplication(ia).ok);
  CHECK(is_double_homothetism(ia).ok);
  Element x = Element::basis(A, 1);  // e12
  CHECK(ia.left(x) == x * a);
  CHECK(ia.right(x) == a * x);
  auto rep = find_inner_representative(ia);
  REQUIRE(rep.has_value());
  CHECK(inner(*rep).left == ia.left);
  CHECK(inner(*rep).right == ia.right);
}

TEST_CASE("epsilon_k is not inner") {
  AlgebraPtr A = daleth(3, ScalarRing::Fp(2));
  CHECK(!find_inner_representative(epsilon(A, 2)).has_value());
}

TEST_CASE("make_datum rejects broken data with the right kinds") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  DoubleOperator eps = epsilon(A, 2);

  // same projection on both sides: bimult.1 fails
  DoubleOperator bad = make_double_operator(eps.left, eps.left);
  try {
    (void)make_datum(bad, Element::zero(A));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHomothetism);
  }

  // valid sigma but s it does not commute with / satisfy the quadratic for
  Element e11 = Element::basis(A, 0);
  try {
    (void)make_datum(eps, e11);
    CHECK(false);
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::CommutationFails ||
           e.kind() == ErrorKind::QuadraticFails));
  }

  CheckResult r = check_datum(bad, Element::zero(A));
  REQUIRE(!r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(!r.witness->identity.empty());
  CHECK(!r.witness->lhs.empty());
}

TEST_CASE("dop algebra operations") {
  AlgebraPtr A = daleth(3, ScalarRing::Q());
  DoubleOperator eps = epsilon(A, 2);
  DoubleOperator zero = make_double_operator(LinMap::zero(A, A),
                                             LinMap::zero(A, A));
  CHECK(dop_eq(dop_add(eps, zero), eps));
  CHECK(dop_eq(dop_scale(Scalar(1), eps), eps));
  CHECK(dop_eq(dop_scale(Scalar(0), eps), zero));
  CHECK(dop_eq(dop_mul(eps, zero), zero));
}

TEST_CASE("idempotent enumeration over F2 matches brute force") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  auto idem = enumerate_idempotents(A);
  CHECK(idem.size() == 13);

  // brute-force oracle over all 2^5 elements
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < 32; ++mask) {
    std::vector<Scalar> c(5, Scalar(0));
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i)) c[i] = Scalar(1);
    Element w = Element::from(A, c);
    if (w * w == w) ++count;
  }
  CHECK(count == idem.size());

  for (const Element& w : idem) CHECK(w * w == w);
  CHECK(std::find(idem.begin(), idem.end(), Element::zero(A)) != idem.end());

  AlgebraPtr AQ = daleth(3, ScalarRing::Q());
  CHECK_THROWS_AS((void)enumerate_idempotents(AQ), Error);
}
