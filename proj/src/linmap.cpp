#include "orehom/linmap.hpp"

namespace orehom {

namespace {

void require_compatible(const LinMap& f, const LinMap& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    fail(ErrorKind::DomainMismatch, "linear maps have different dom/cod");
}

}  // namespace

LinMap LinMap::zero(AlgebraPtr dom, AlgebraPtr cod) {
  if (!(dom->ring == cod->ring))
    fail(ErrorKind::RingMismatch, "dom and cod scalar rings differ");
  return {dom, cod, Mat(cod->dim, dom->dim)};
}

LinMap LinMap::identity(AlgebraPtr a) {
  return {a, a, Mat::identity(a->dim)};
}

LinMap LinMap::from_matrix(AlgebraPtr dom, AlgebraPtr cod, Mat m) {
  if (!(dom->ring == cod->ring))
    fail(ErrorKind::RingMismatch, "dom and cod scalar rings differ");
  if (m.rows != cod->dim || m.cols != dom->dim)
    fail(ErrorKind::BadShape, "matrix shape does not match dom/cod dims");
  for (Scalar& x : m.a) x = dom->ring.canon(x);
  return {dom, cod, std::move(m)};
}

LinMap LinMap::from_columns(AlgebraPtr dom, const std::vector<Element>& cols) {
  if (cols.size() != dom->dim)
    fail(ErrorKind::BadShape, "need one image column per domain basis");
  AlgebraPtr cod = cols.front().alg;
  Mat m(cod->dim, dom->dim);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].alg != cod)
      fail(ErrorKind::AlgebraMismatch, "image columns in different algebras");
    for (std::size_t k = 0; k < cod->dim; ++k) m.at(k, i) = cols[i].c[k];
  }
  return from_matrix(dom, cod, std::move(m));
}

Element LinMap::operator()(const Element& x) const {
  if (x.alg != dom && !(x.alg && dom && x.alg->same_content(*dom)))
    fail(ErrorKind::DomainMismatch, "element not in the map's domain");
  return Element{cod, mat_apply(dom->ring, m, x.c)};
}

LinMap operator+(const LinMap& f, const LinMap& g) {
  require_compatible(f, g);
  return {f.dom, f.cod, mat_add(f.dom->ring, f.m, g.m)};
}

LinMap operator-(const LinMap& f, const LinMap& g) {
  require_compatible(f, g);
  return {f.dom, f.cod, mat_sub(f.dom->ring, f.m, g.m)};
}

LinMap operator*(const Scalar& c, const LinMap& f) {
  return {f.dom, f.cod, mat_scale(f.dom->ring, c, f.m)};
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (g.cod != f.dom)
    fail(ErrorKind::DomainMismatch, "compose: cod(g) != dom(f)");
  return {g.dom, f.cod, mat_mul(f.dom->ring, f.m, g.m)};
}

LinMap power(const LinMap& f, std::size_t n) {
  if (f.dom != f.cod)
    fail(ErrorKind::DomainMismatch, "power needs an endomap");
  LinMap r = LinMap::identity(f.dom);
  for (std::size_t i = 0; i < n; ++i) r = compose(f, r);
  return r;
}

bool operator==(const LinMap& f, const LinMap& g) {
  return f.dom == g.dom && f.cod == g.cod && mat_eq(f.dom->ring, f.m, g.m);
}

}  // namespace orehom
