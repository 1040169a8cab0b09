#include "orehom/homext.hpp"

namespace orehom {

HomotheticExtension make_extension(HomotheticDatum datum) {
  return {std::move(datum)};
}

ExtElement ext_zero(const HomotheticExtension& E) {
  return {Element::zero(E.base()), Scalar(0)};
}

ExtElement ext_sigma(const HomotheticExtension& E) {
  return {Element::zero(E.base()), Scalar(1)};
}

ExtElement ext_from(const HomotheticExtension& E, Element a, Scalar xi) {
  if (a.alg != E.base())
    fail(ErrorKind::AlgebraMismatch, "element not in the extension's base");
  return {std::move(a), E.base()->ring.canon(xi)};
}

ExtElement ext_add(const HomotheticExtension& E, const ExtElement& x,
                   const ExtElement& y) {
  return {x.a + y.a, E.base()->ring.add(x.xi, y.xi)};
}

ExtElement ext_neg(const HomotheticExtension& E, const ExtElement& x) {
  return {-x.a, E.base()->ring.neg(x.xi)};
}

ExtElement ext_mul(const HomotheticExtension& E, const ExtElement& x,
                   const ExtElement& y) {
  const ScalarRing& ring = E.base()->ring;
  const DoubleOperator& sigma = E.datum.sigma;
  Element a = x.a * y.a + y.xi * sigma.left(x.a) + x.xi * sigma.right(y.a) +
              ring.mul(x.xi, y.xi) * E.datum.s;
  return {a, ring.mul(x.xi, y.xi)};
}

bool ext_eq(const HomotheticExtension& E, const ExtElement& x,
            const ExtElement& y) {
  return x.a == y.a && E.base()->ring.eq(x.xi, y.xi);
}

std::string ext_str(const HomotheticExtension& E, const ExtElement& x) {
  const ScalarRing& ring = E.base()->ring;
  if (ring.is_zero(x.xi)) return x.a.str();
  std::string sig = ring.to_string(x.xi) + "*@sigma";
  if (x.a.is_zero()) return sig;
  return x.a.str() + " + " + sig;
}

ExtElement iota(const HomotheticExtension& E, const Element& a) {
  return ext_from(E, a, Scalar(0));
}

Scalar pi(const HomotheticExtension& E, const ExtElement& x) {
  return E.base()->ring.canon(x.xi);
}

std::vector<Scalar> ext_structure_constants(const DoubleOperator& sigma,
                                            const Element& s) {
  AlgebraPtr R = sigma.algebra();
  if (s.alg != R)
    fail(ErrorKind::AlgebraMismatch, "datum element s not in sigma's algebra");
  std::size_t d = R->dim, n = d + 1;
  std::vector<Scalar> sc(n * n * n, Scalar(0));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k,
                 const Scalar& v) { sc[(i * n + j) * n + k] = v; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) put(i, j, k, R->c(i, j, k));
  for (std::size_t i = 0; i < d; ++i) {
    Element bi = Element::basis(R, i);
    Element bs = sigma.left(bi);   // b_i sigma
    Element sb = sigma.right(bi);  // sigma b_i
    for (std::size_t k = 0; k < d; ++k) {
      put(i, d, k, bs.c[k]);
      put(d, i, k, sb.c[k]);
    }
  }
  for (std::size_t k = 0; k < d; ++k) put(d, d, k, s.c[k]);
  put(d, d, d, Scalar(1));
  return sc;
}

AlgebraPtr as_algebra(const HomotheticExtension& E) {
  AlgebraPtr R = E.base();
  std::vector<std::string> basis = R->basis;
  basis.push_back("@sigma");
  return make_algebra(R->ring, R->dim + 1,
                      ext_structure_constants(E.datum.sigma, E.datum.s),
                      std::move(basis),
                      R->label.empty() ? "ext" : R->label + "(sigma,s)");
}

Element ext_to_coords(const HomotheticExtension& E, const AlgebraPtr& S,
                      const ExtElement& x) {
  if (x.a.alg != E.base() || S->dim != E.base()->dim + 1)
    fail(ErrorKind::AlgebraMismatch, "coordinates do not fit the extension");
  std::vector<Scalar> v = x.a.c;
  v.push_back(x.xi);
  return Element::from(S, std::move(v));
}

ExtElement coords_to_ext(const HomotheticExtension& E, const Element& v) {
  if (v.alg->dim != E.base()->dim + 1)
    fail(ErrorKind::AlgebraMismatch, "coordinates do not fit the extension");
  std::vector<Scalar> a(v.c.begin(), v.c.end() - 1);
  return {Element::from(E.base(), std::move(a)), v.c.back()};
}

bool ExactnessReport::ok() const {
  for (const auto& [name, r] : rows)
    if (!r.ok) return false;
  return true;
}

ExactnessReport check_exactness(const HomotheticExtension& E) {
  ExactnessReport rep;
  AlgebraPtr R = E.base();
  const ScalarRing& ring = R->ring;
  AlgebraPtr S = as_algebra(E);

  auto add = [&](std::string name, CheckResult r) {
    rep.rows.emplace_back(std::move(name), std::move(r));
  };

  // iota injective and xi-free; pi . iota = 0
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t i = 0; i < R->dim && r.ok; ++i) {
      ExtElement im = iota(E, Element::basis(R, i));
      if (!(im.a == Element::basis(R, i)) || !ring.is_zero(im.xi))
        r = CheckResult::fail({"iota basis image", {i + 1},
                               ext_str(E, im),
                               Element::basis(R, i).str()});
      if (!ring.is_zero(pi(E, im)))
        r = CheckResult::fail({"pi(iota(a)) = 0", {i + 1},
                               ring.to_string(pi(E, im)), "0"});
    }
    add("iota injective, pi.iota = 0", r);
  }
  // pi surjective: pi(@sigma) = 1
  {
    Scalar v = pi(E, ext_sigma(E));
    add("pi surjective",
        ring.eq(v, Scalar(1))
            ? CheckResult::pass()
            : CheckResult::fail(
                  {"pi(@sigma) = 1", {}, ring.to_string(v), "1"}));
  }
  // ker(pi) = im(iota): xi = 0 exactly on R-coordinates
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t i = 0; i <= R->dim && r.ok; ++i) {
      Element v = Element::basis(S, i);
      ExtElement x = coords_to_ext(E, v);
      bool in_ker = ring.is_zero(pi(E, x));
      bool in_im = ring.is_zero(x.xi);
      if (in_ker != in_im)
        r = CheckResult::fail({"ker(pi) = im(iota)", {i + 1},
                               in_ker ? "in kernel" : "not in kernel",
                               in_im ? "in image" : "not in image"});
    }
    add("ker(pi) = im(iota)", r);
  }
  // iota multiplicative: iota(ab) = iota(a) iota(b)
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t i = 0; i < R->dim && r.ok; ++i)
      for (std::size_t j = 0; j < R->dim && r.ok; ++j) {
        Element a = Element::basis(R, i), b = Element::basis(R, j);
        ExtElement lhs = iota(E, a * b);
        ExtElement rhs = ext_mul(E, iota(E, a), iota(E, b));
        if (!ext_eq(E, lhs, rhs))
          r = CheckResult::fail({"iota(ab) = iota(a) iota(b)",
                                 {i + 1, j + 1},
                                 ext_str(E, lhs), ext_str(E, rhs)});
      }
    add("iota multiplicative", r);
  }
  // @sigma rules inside as_algebra
  {
    Element sig = Element::basis(S, R->dim);
    auto lift = [&](const Element& a) {
      return ext_to_coords(E, S, iota(E, a));
    };
    CheckResult r = CheckResult::pass();
    for (std::size_t i = 0; i < R->dim && r.ok; ++i) {
      Element a = Element::basis(S, i);
      Element ra = Element::basis(R, i);
      Element lhs = a * sig;
      Element want = lift(E.datum.sigma.left(ra));
      if (!(lhs == want))
        r = CheckResult::fail(
            {"a @sigma = a sigma", {i + 1}, lhs.str(), want.str()});
      lhs = sig * a;
      want = lift(E.datum.sigma.right(ra));
      if (!(lhs == want))
        r = CheckResult::fail(
            {"@sigma a = sigma a", {i + 1}, lhs.str(), want.str()});
    }
    if (r.ok) {
      Element lhs = sig * sig;
      Element want = sig + lift(E.datum.s);
      if (!(lhs == want))
        r = CheckResult::fail(
            {"@sigma^2 = @sigma + s", {}, lhs.str(), want.str()});
    }
    if (r.ok) {
      Element s_in_S = lift(E.datum.s);
      Element lhs = sig * s_in_S, want = s_in_S * sig;
      if (!(lhs == want))
        r = CheckResult::fail(
            {"@sigma s = s @sigma", {}, lhs.str(), want.str()});
    }
    add("@sigma rules", r);
  }
  // im(iota) is a two-sided ideal: u * iota(b) and iota(b) * u stay xi-free
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t i = 0; i <= R->dim && r.ok; ++i)
      for (std::size_t j = 0; j < R->dim && r.ok; ++j) {
        ExtElement u = coords_to_ext(E, Element::basis(S, i));
        ExtElement b = iota(E, Element::basis(R, j));
        ExtElement lhs = ext_mul(E, u, b);
        if (!ring.is_zero(lhs.xi))
          r = CheckResult::fail({"u iota(b) in im(iota)", {i + 1, j + 1},
                                 ext_str(E, lhs), "xi-free element"});
        ExtElement rhs = ext_mul(E, b, u);
        if (!ring.is_zero(rhs.xi))
          r = CheckResult::fail({"iota(b) u in im(iota)", {i + 1, j + 1},
                                 ext_str(E, rhs), "xi-free element"});
      }
    add("im(iota) is an ideal", r);
  }
  return rep;
}

}  // namespace orehom
