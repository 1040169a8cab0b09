#include "orehom/multiplier.hpp"

#include <algorithm>

namespace orehom {

DoubleOperator make_double_operator(LinMap left, LinMap right) {
  if (left.dom != left.cod || right.dom != right.cod ||
      left.dom != right.dom)
    fail(ErrorKind::DomainMismatch,
         "double operator needs two endomaps of one algebra");
  return {std::move(left), std::move(right)};
}

DoubleOperator inner(const Element& a) {
  const AlgebraPtr& A = a.alg;
  std::vector<Element> left_cols, right_cols;
  for (std::size_t i = 0; i < A->dim; ++i) {
    Element b = Element::basis(A, i);
    left_cols.push_back(b * a);
    right_cols.push_back(a * b);
  }
  return {LinMap::from_columns(A, left_cols),
          LinMap::from_columns(A, right_cols)};
}

DoubleOperator dop_add(const DoubleOperator& s1, const DoubleOperator& s2) {
  return {s1.left + s2.left, s1.right + s2.right};
}

DoubleOperator dop_scale(const Scalar& c, const DoubleOperator& s) {
  return {c * s.left, c * s.right};
}

DoubleOperator dop_mul(const DoubleOperator& s1, const DoubleOperator& s2) {
  return {compose(s2.left, s1.left), compose(s1.right, s2.right)};
}

bool dop_eq(const DoubleOperator& s1, const DoubleOperator& s2) {
  return s1.left == s2.left && s1.right == s2.right;
}

namespace {

CheckResult pairwise_check(const DoubleOperator& s, const char* identity,
                           Element (*lhs)(const DoubleOperator&,
                                          const Element&, const Element&),
                           Element (*rhs)(const DoubleOperator&,
                                          const Element&, const Element&)) {
  AlgebraPtr A = s.algebra();
  for (std::size_t i = 0; i < A->dim; ++i)
    for (std::size_t j = 0; j < A->dim; ++j) {
      Element a = Element::basis(A, i), b = Element::basis(A, j);
      Element l = lhs(s, a, b), r = rhs(s, a, b);
      if (!(l == r))
        return CheckResult::fail(
            {identity, {i + 1, j + 1}, l.str(), r.str()});
    }
  return CheckResult::pass();
}

}  // namespace

CheckResult is_bimultiplication(const DoubleOperator& s) {
  CheckResult r = pairwise_check(
      s, "bimult.1 sigma(ab) = (sigma a)b",
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return t.right(a * b);
      },
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return t.right(a) * b;
      });
  if (!r) return r;
  r = pairwise_check(
      s, "bimult.2 (ab)sigma = a(b sigma)",
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return t.left(a * b);
      },
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return a * t.left(b);
      });
  if (!r) return r;
  return pairwise_check(
      s, "bimult.3 a(sigma b) = (a sigma)b",
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return a * t.right(b);
      },
      [](const DoubleOperator& t, const Element& a, const Element& b) {
        return t.left(a) * b;
      });
}

CheckResult is_double_homothetism(const DoubleOperator& s) {
  CheckResult r = is_bimultiplication(s);
  if (!r) return r;
  AlgebraPtr A = s.algebra();
  for (std::size_t i = 0; i < A->dim; ++i) {
    Element a = Element::basis(A, i);
    Element l = s.right(s.left(a)), rr = s.left(s.right(a));
    if (!(l == rr))
      return CheckResult::fail(
          {"homothetism sigma(a sigma) = (sigma a)sigma", {i + 1}, l.str(),
           rr.str()});
  }
  return CheckResult::pass();
}

CheckResult check_datum(const DoubleOperator& sigma, const Element& s) {
  if (s.alg != sigma.algebra())
    fail(ErrorKind::AlgebraMismatch, "datum element s not in sigma's algebra");
  CheckResult r = is_double_homothetism(sigma);
  if (!r) return r;
  Element ss = sigma.right(s), sl = sigma.left(s);
  if (!(ss == sl))
    return CheckResult::fail(
        {"commutation sigma s = s sigma", {}, ss.str(), sl.str()});
  DoubleOperator sq = dop_mul(sigma, sigma);
  DoubleOperator want = dop_add(sigma, inner(s));
  AlgebraPtr A = sigma.algebra();
  for (std::size_t i = 0; i < A->dim; ++i) {
    Element a = Element::basis(A, i);
    Element l = sq.left(a), w = want.left(a);
    if (!(l == w))
      return CheckResult::fail(
          {"quadratic (a sigma)sigma = a sigma + a s", {i + 1}, l.str(),
           w.str()});
    l = sq.right(a);
    w = want.right(a);
    if (!(l == w))
      return CheckResult::fail(
          {"quadratic sigma(sigma a) = sigma a + s a", {i + 1}, l.str(),
           w.str()});
  }
  return CheckResult::pass();
}

std::vector<Element> enumerate_idempotents(const AlgebraPtr& A,
                                           std::uint64_t cap) {
  const ScalarRing& ring = A->ring;
  if (ring.kind != RingKind::PrimeField)
    fail(ErrorKind::NotAField,
         "idempotent enumeration is exhaustive and needs F_p");
  std::uint64_t p = static_cast<std::uint64_t>(ring.p);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < A->dim; ++i) {
    if (count > cap / p)
      fail(ErrorKind::EnumerationBudgetExceeded,
           "p^dim exceeds cap " + std::to_string(cap));
    count *= p;
  }
  std::vector<Element> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    std::vector<Scalar> v(A->dim);
    for (std::size_t i = A->dim; i-- > 0;) {
      v[i] = Scalar(BigInt(t % p));
      t /= p;
    }
    Element w = Element::from(A, std::move(v));
    if (w * w == w) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const Element& x, const Element& y) { return x.c < y.c; });
  return out;
}

std::optional<Element> find_inner_representative(const DoubleOperator& sigma) {
  AlgebraPtr A = sigma.algebra();
  const ScalarRing& ring = A->ring;
  std::size_t d = A->dim;
  // unknown a: b_i a = left(b_i) and a b_i = right(b_i) for all i
  Mat M(2 * d * d, d);
  std::vector<Scalar> rhs(2 * d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    Element bi = Element::basis(A, i);
    Element lt = sigma.left(bi), rt = sigma.right(bi);
    for (std::size_t j = 0; j < d; ++j) {
      Element bij = bi * Element::basis(A, j);   // coefficient of a_j in b_i a
      Element bji = Element::basis(A, j) * bi;   // coefficient of a_j in a b_i
      for (std::size_t k = 0; k < d; ++k) {
        M.at(i * d + k, j) = bij.c[k];
        M.at(d * d + i * d + k, j) = bji.c[k];
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      rhs[i * d + k] = lt.c[k];
      rhs[d * d + i * d + k] = rt.c[k];
    }
  }
  ScalarRing field =
      ring.kind == RingKind::Integers ? ScalarRing::Q() : ring;
  AffineSolutionSet s = solve_affine(field, M, rhs);
  if (!s.consistent) return std::nullopt;
  if (ring.kind == RingKind::Integers) {
    for (const Scalar& x : s.particular)
      if (denominator(x) != 1) return std::nullopt;
  }
  return Element::from(A, s.particular);
}

HomotheticDatum make_datum(DoubleOperator sigma, Element s) {
  CheckResult r = check_datum(sigma, s);
  if (!r) {
    const std::string& id = r.witness->identity;
    ErrorKind kind = ErrorKind::NotHomothetism;
    if (id.rfind("commutation", 0) == 0) kind = ErrorKind::CommutationFails;
    if (id.rfind("quadratic", 0) == 0) kind = ErrorKind::QuadraticFails;
    fail(kind, r.witness->render());
  }
  return {std::move(sigma), std::move(s)};
}

}  // namespace orehom
