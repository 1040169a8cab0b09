#include "orehom/algebra.hpp"

#include <algorithm>

namespace orehom {

bool Algebra::same_content(const Algebra& o) const {
  if (!(ring == o.ring) || dim != o.dim || basis != o.basis) return false;
  for (std::size_t i = 0; i < sc.size(); ++i)
    if (!ring.eq(sc[i], o.sc[i])) return false;
  return true;
}

std::string render_coords(const ScalarRing& ring,
                          const std::vector<std::string>& basis,
                          const std::vector<Scalar>& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (ring.is_zero(coords[i])) continue;
    if (!out.empty()) out += " + ";
    out += ring.to_string(coords[i]) + "*" + basis[i];
  }
  return out.empty() ? "0" : out;
}

AlgebraPtr make_algebra(ScalarRing ring, std::size_t dim,
                        std::vector<Scalar> sc,
                        std::vector<std::string> basis, std::string label) {
  if (dim == 0) fail(ErrorKind::BadShape, "algebra dimension must be >= 1");
  if (dim > kDimensionCap)
    fail(ErrorKind::DimensionCapExceeded,
         "dim " + std::to_string(dim) + " exceeds cap " +
             std::to_string(kDimensionCap));
  if (sc.size() != dim * dim * dim)
    fail(ErrorKind::BadShape, "structure constant array must have dim^3 "
                              "entries, got " +
                                  std::to_string(sc.size()));
  for (Scalar& x : sc) x = ring.canon(x);
  if (basis.empty()) {
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      basis.push_back("b" + std::to_string(i + 1));
  }
  if (basis.size() != dim)
    fail(ErrorKind::BadShape, "basis label count does not match dim");

  auto A = std::make_shared<Algebra>();
  A->ring = ring;
  A->dim = dim;
  A->basis = std::move(basis);
  A->sc = std::move(sc);
  A->label = std::move(label);

  // eager gate: (b_i b_j) b_k == b_i (b_j b_k) for every triple
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Scalar> lhs(dim, Scalar(0)), rhs(dim, Scalar(0));
        for (std::size_t m = 0; m < dim; ++m) {
          const Scalar& ijm = A->c(i, j, m);
          if (!ring.is_zero(ijm))
            for (std::size_t l = 0; l < dim; ++l)
              lhs[l] = ring.add(lhs[l], ring.mul(ijm, A->c(m, k, l)));
          const Scalar& jkm = A->c(j, k, m);
          if (!ring.is_zero(jkm))
            for (std::size_t l = 0; l < dim; ++l)
              rhs[l] = ring.add(rhs[l], ring.mul(A->c(i, m, l), jkm));
        }
        for (std::size_t l = 0; l < dim; ++l)
          if (!ring.eq(lhs[l], rhs[l])) {
            Witness w{"associativity (b_i b_j) b_k = b_i (b_j b_k)",
                      {i + 1, j + 1, k + 1},
                      render_coords(ring, A->basis, lhs),
                      render_coords(ring, A->basis, rhs)};
            fail(ErrorKind::AssociativityViolation, w.render());
          }
      }
  return A;
}

Element Element::zero(AlgebraPtr a) {
  return {a, std::vector<Scalar>(a->dim, Scalar(0))};
}

Element Element::basis(AlgebraPtr a, std::size_t i) {
  if (i >= a->dim)
    fail(ErrorKind::IndexOutOfRange,
         "basis index " + std::to_string(i) + " out of range");
  Element e = zero(a);
  e.c[i] = Scalar(1);
  return e;
}

Element Element::from(AlgebraPtr a, std::vector<Scalar> coords) {
  if (coords.size() != a->dim)
    fail(ErrorKind::BadShape, "coordinate count does not match algebra dim");
  for (Scalar& x : coords) x = a->ring.canon(x);
  return {a, std::move(coords)};
}

bool Element::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [&](const Scalar& x) { return alg->ring.is_zero(x); });
}

std::string Element::str() const {
  return render_coords(alg->ring, alg->basis, c);
}

void require_same_algebra(const Element& x, const Element& y) {
  if (x.alg != y.alg && !(x.alg && y.alg && x.alg->same_content(*y.alg)))
    fail(ErrorKind::AlgebraMismatch,
         "operands live in different algebras");
}

Element operator+(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Element r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = x.alg->ring.add(r.c[i], y.c[i]);
  return r;
}

Element operator-(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  Element r = x;
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = x.alg->ring.sub(r.c[i], y.c[i]);
  return r;
}

Element operator-(const Element& x) {
  Element r = x;
  for (Scalar& v : r.c) v = x.alg->ring.neg(v);
  return r;
}

Element operator*(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Algebra& A = *x.alg;
  Element r = Element::zero(x.alg);
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (A.ring.is_zero(x.c[i])) continue;
    for (std::size_t j = 0; j < A.dim; ++j) {
      if (A.ring.is_zero(y.c[j])) continue;
      Scalar f = A.ring.mul(x.c[i], y.c[j]);
      for (std::size_t k = 0; k < A.dim; ++k)
        r.c[k] = A.ring.add(r.c[k], A.ring.mul(f, A.c(i, j, k)));
    }
  }
  return r;
}

Element operator*(const Scalar& c, const Element& x) {
  Element r = x;
  for (Scalar& v : r.c) v = x.alg->ring.mul(c, v);
  return r;
}

bool operator==(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  for (std::size_t i = 0; i < x.c.size(); ++i)
    if (!x.alg->ring.eq(x.c[i], y.c[i])) return false;
  return true;
}

namespace {

std::vector<Element> one_sided_annihilator(const AlgebraPtr& a, bool left) {
  const Algebra& A = *a;
  ScalarRing field =
      A.ring.kind == RingKind::Integers ? ScalarRing::Q() : A.ring;
  Mat M(A.dim * A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i)
    for (std::size_t j = 0; j < A.dim; ++j)
      for (std::size_t k = 0; k < A.dim; ++k)
        M.at(j * A.dim + k, i) = left ? A.c(i, j, k) : A.c(j, i, k);
  AffineSolutionSet s =
      solve_affine(field, M, std::vector<Scalar>(M.rows, Scalar(0)));
  std::vector<Element> out;
  for (auto v : s.kernel) {
    if (A.ring.kind == RingKind::Integers) {
      BigInt l(1);
      for (const Scalar& x : v) l = lcm(l, denominator(x));
      for (Scalar& x : v) x = x * Scalar(l);
    }
    out.push_back(Element::from(a, v));
  }
  return out;
}

}  // namespace

std::vector<Element> left_annihilator(const AlgebraPtr& a) {
  return one_sided_annihilator(a, true);
}

std::vector<Element> right_annihilator(const AlgebraPtr& a) {
  return one_sided_annihilator(a, false);
}

}  // namespace orehom
