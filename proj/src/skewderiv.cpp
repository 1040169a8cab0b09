#include "orehom/skewderiv.hpp"

namespace orehom {

CheckResult is_endomorphism(const LinMap& alpha) {
  if (alpha.dom != alpha.cod)
    fail(ErrorKind::DomainMismatch, "endomorphism check needs an endomap");
  AlgebraPtr A = alpha.dom;
  for (std::size_t i = 0; i < A->dim; ++i)
    for (std::size_t j = 0; j < A->dim; ++j) {
      Element a = Element::basis(A, i), b = Element::basis(A, j);
      Element lhs = alpha(a * b), rhs = alpha(a) * alpha(b);
      if (!(lhs == rhs))
        return CheckResult::fail({"alpha(ab) = alpha(a)alpha(b)",
                                  {i + 1, j + 1}, lhs.str(), rhs.str()});
    }
  return CheckResult::pass();
}

CheckResult is_skew_derivation(const LinMap& delta, const LinMap& alpha) {
  if (delta.dom != delta.cod || delta.dom != alpha.dom ||
      alpha.dom != alpha.cod)
    fail(ErrorKind::DomainMismatch,
         "skew-derivation check needs endomaps of one algebra");
  AlgebraPtr A = delta.dom;
  for (std::size_t i = 0; i < A->dim; ++i)
    for (std::size_t j = 0; j < A->dim; ++j) {
      Element a = Element::basis(A, i), b = Element::basis(A, j);
      Element lhs = delta(a * b);
      Element rhs = delta(a) * b + alpha(a) * delta(b);
      if (!(lhs == rhs))
        return CheckResult::fail(
            {"delta(ab) = delta(a)b + alpha(a)delta(b)",
             {i + 1, j + 1}, lhs.str(), rhs.str()});
    }
  return CheckResult::pass();
}

void validate_varsigma(const ScalarRing& ring, const Scalar& varsigma) {
  Scalar v = ring.canon(varsigma);
  if (!ring.eq(ring.mul(v, v), v))
    fail(ErrorKind::NonIdempotentVarsigma,
         "varsigma = " + ring.to_string(v) + " is not idempotent");
  // in a field (or Z) the only idempotents are 0 and 1
  if (!ring.eq(v, Scalar(0)) && !ring.eq(v, Scalar(1)))
    fail(ErrorKind::BadVarsigma, "varsigma must be 0 or 1");
}

void validate_mu(const ScalarRing& ring, const Scalar& varsigma,
                 const Scalar& mu) {
  if (ring.eq(varsigma, Scalar(1)) && !ring.is_zero(mu))
    fail(ErrorKind::MuConstraintViolated,
         "mu must vanish when varsigma = 1, got " + ring.to_string(mu));
}

namespace {

void check_datum_membership(const HomotheticDatum& datum, const LinMap& map,
                            const Element& v, const char* what) {
  if (map.dom != datum.algebra() || map.cod != datum.algebra())
    fail(ErrorKind::AlgebraMismatch,
         std::string(what) + " is not an endomap of the datum's algebra");
  if (v.alg != datum.algebra())
    fail(ErrorKind::AlgebraMismatch,
         std::string(what) + " data not in the datum's algebra");
}

}  // namespace

CheckResult check_endo_ext(const HomotheticDatum& datum, const LinMap& alpha,
                           const Element& w, const Scalar& varsigma,
                           bool require_endo) {
  check_datum_membership(datum, alpha, w, "alpha/w");
  const ScalarRing& ring = datum.algebra()->ring;
  validate_varsigma(ring, varsigma);
  if (require_endo) {
    CheckResult r = is_endomorphism(alpha);
    if (!r)
      fail(ErrorKind::EndoPreconditionFailed,
           "alpha is not an endomorphism: " + r.witness->render());
  }
  const DoubleOperator& sg = datum.sigma;
  AlgebraPtr R = datum.algebra();
  Scalar vs = ring.canon(varsigma);

  // (i)
  {
    Element lhs = alpha(datum.s) - vs * datum.s;
    Element rhs = w * w + vs * sg.left(w) + vs * sg.right(w) - w;
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(i) alpha(s) - vs s = w^2 + vs(w sigma) + vs(sigma w) - w",
           {}, lhs.str(), rhs.str()});
  }
  for (std::size_t i = 0; i < R->dim; ++i) {
    Element a = Element::basis(R, i);
    // (ii)
    Element lhs = alpha(sg.left(a));
    Element rhs = vs * sg.left(alpha(a)) + alpha(a) * w;
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(ii) alpha(a sigma) = alpha(a)(vs sigma + w)", {i + 1},
           lhs.str(), rhs.str()});
    // (iii)
    lhs = alpha(sg.right(a));
    rhs = vs * sg.right(alpha(a)) + w * alpha(a);
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(iii) alpha(sigma a) = (vs sigma + w)alpha(a)", {i + 1},
           lhs.str(), rhs.str()});
  }
  return CheckResult::pass();
}

CheckResult check_deriv_ext(const HomotheticDatum& datum, const LinMap& alpha,
                            const LinMap& delta, const Element& w,
                            const Element& e, const Scalar& varsigma,
                            const Scalar& mu, bool require_endo) {
  check_datum_membership(datum, delta, e, "delta/e");
  const ScalarRing& ring = datum.algebra()->ring;
  validate_varsigma(ring, varsigma);
  validate_mu(ring, varsigma, mu);
  if (require_endo) {
    CheckResult endo = check_endo_ext(datum, alpha, w, varsigma, true);
    if (!endo)
      fail(ErrorKind::EndoPreconditionFailed,
           "(alpha, w, varsigma) does not extend: " + endo.witness->render());
    CheckResult skew = is_skew_derivation(delta, alpha);
    if (!skew)
      fail(ErrorKind::EndoPreconditionFailed,
           "delta is not an alpha-skew derivation: " + skew.witness->render());
  }
  const DoubleOperator& sg = datum.sigma;
  AlgebraPtr R = datum.algebra();
  Scalar vs = ring.canon(varsigma);
  Scalar m = ring.canon(mu);

  // (a)
  {
    Element lhs = delta(datum.s) - m * datum.s;
    Element rhs = sg.left(e) + vs * sg.right(e) + w * e + m * sg.left(w) - e;
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(a) delta(s) - mu s = e sigma + vs(sigma e) + w e + mu(w sigma) - e",
           {}, lhs.str(), rhs.str()});
  }
  for (std::size_t i = 0; i < R->dim; ++i) {
    Element a = Element::basis(R, i);
    // (b)
    Element lhs = delta(sg.left(a));
    Element rhs = sg.left(delta(a)) + alpha(a) * e + m * sg.left(alpha(a));
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(b) delta(a sigma) = delta(a)sigma + alpha(a)(e + mu sigma)",
           {i + 1}, lhs.str(), rhs.str()});
    // (c)
    lhs = delta(sg.right(a));
    rhs = w * delta(a) + vs * sg.right(delta(a)) + e * a + m * sg.right(a);
    if (!(lhs == rhs))
      return CheckResult::fail(
          {"(c) delta(sigma a) = (w + vs sigma)delta(a) + (e + mu sigma)a",
           {i + 1}, lhs.str(), rhs.str()});
  }
  return CheckResult::pass();
}

namespace {

LinMap assemble_extension(const HomotheticExtension& E, const AlgebraPtr& S,
                          const LinMap& base, const Element& extra,
                          const Scalar& sigma_coeff) {
  AlgebraPtr R = E.base();
  std::vector<Element> cols;
  for (std::size_t i = 0; i < R->dim; ++i) {
    ExtElement im = iota(E, base(Element::basis(R, i)));
    cols.push_back(ext_to_coords(E, S, im));
  }
  cols.push_back(ext_to_coords(E, S, ext_from(E, extra, sigma_coeff)));
  return LinMap::from_columns(S, cols);
}

}  // namespace

LinMap extend_endo(const HomotheticExtension& E, const AlgebraPtr& S,
                   const LinMap& alpha, const Element& w,
                   const Scalar& varsigma) {
  CheckResult r = check_endo_ext(E.datum, alpha, w, varsigma, true);
  if (!r) fail(ErrorKind::ConditionsFail, r.witness->render());
  return assemble_extension(E, S, alpha, w, varsigma);
}

LinMap extend_deriv(const HomotheticExtension& E, const AlgebraPtr& S,
                    const Quintuple& q) {
  CheckResult r = check_deriv_ext(q.datum, q.alpha, q.delta, q.w, q.e,
                                  q.varsigma, q.mu, true);
  if (!r) fail(ErrorKind::ConditionsFail, r.witness->render());
  return assemble_extension(E, S, q.delta, q.e, q.mu);
}

namespace {

// rows of "linear_op(unknown) = const" appended to (A | b)
struct SystemBuilder {
  AlgebraPtr R;
  std::size_t unknowns;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;

  // op maps the j-th unknown basis vector to an R-element contribution;
  // target is the constant side.
  void add(const std::vector<Element>& op_columns, const Element& target) {
    std::size_t d = R->dim;
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Scalar> row(unknowns, Scalar(0));
      for (std::size_t j = 0; j < op_columns.size(); ++j)
        row[j] = op_columns[j].c[k];
      rows.push_back(std::move(row));
      rhs.push_back(target.c[k]);
    }
  }

  AffineSolutionSet solve() const {
    Mat A(rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < unknowns; ++j) A.at(i, j) = rows[i][j];
    return solve_affine(R->ring, A, rhs);
  }
};

}  // namespace

WSolveResult solve_endo_ext(const HomotheticDatum& datum, const LinMap& alpha,
                            const Scalar& varsigma, std::uint64_t cap) {
  AlgebraPtr R = datum.algebra();
  const ScalarRing& ring = R->ring;
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "solve_endo_ext requires a field, got Z");
  validate_varsigma(ring, varsigma);
  {
    CheckResult r = is_endomorphism(alpha);
    if (!r)
      fail(ErrorKind::EndoPreconditionFailed,
           "alpha is not an endomorphism: " + r.witness->render());
  }
  const DoubleOperator& sg = datum.sigma;
  Scalar vs = ring.canon(varsigma);
  std::size_t d = R->dim;

  SystemBuilder sys{R, d, {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    Element a = Element::basis(R, i);
    Element aa = alpha(a);
    // (ii): alpha(a)*w = alpha(a sigma) - vs*(alpha(a) sigma)
    std::vector<Element> cols;
    for (std::size_t j = 0; j < d; ++j)
      cols.push_back(aa * Element::basis(R, j));
    sys.add(cols, alpha(sg.left(a)) - vs * sg.left(aa));
    // (iii): w*alpha(a) = alpha(sigma a) - vs*(sigma alpha(a))
    cols.clear();
    for (std::size_t j = 0; j < d; ++j)
      cols.push_back(Element::basis(R, j) * aa);
    sys.add(cols, alpha(sg.right(a)) - vs * sg.right(aa));
  }
  WSolveResult out;
  out.linear_part = sys.solve();
  if (!out.linear_part.consistent) return out;

  auto passes_quadratic = [&](const Element& w) {
    Element lhs = alpha(datum.s) - vs * datum.s;
    Element rhs = w * w + vs * sg.left(w) + vs * sg.right(w) - w;
    return lhs == rhs;
  };

  if (ring.kind == RingKind::PrimeField) {
    for (auto& v : enumerate_affine(ring, out.linear_part, cap)) {
      Element w = Element::from(R, v);
      if (passes_quadratic(w)) out.points.push_back(std::move(w));
    }
    return out;
  }
  if (out.linear_part.kernel.empty()) {
    Element w = Element::from(R, out.linear_part.particular);
    if (passes_quadratic(w)) out.points.push_back(std::move(w));
    return out;
  }
  out.kind = WSolveResult::Kind::Indeterminate;
  return out;
}

namespace {

void deriv_preconditions(const HomotheticDatum& datum, const LinMap& alpha,
                         const LinMap& delta, const Element& w,
                         const Scalar& varsigma, bool require_endo) {
  if (require_endo) {
    CheckResult endo = check_endo_ext(datum, alpha, w, varsigma, true);
    if (!endo)
      fail(ErrorKind::EndoPreconditionFailed,
           "(alpha, w, varsigma) does not extend: " + endo.witness->render());
    CheckResult skew = is_skew_derivation(delta, alpha);
    if (!skew)
      fail(ErrorKind::EndoPreconditionFailed,
           "delta is not an alpha-skew derivation: " + skew.witness->render());
  }
}

// Shared row assembly; with_mu appends mu as a trailing unknown, otherwise
// mu is the supplied constant.
AffineSolutionSet deriv_system(const HomotheticDatum& datum,
                               const LinMap& alpha, const LinMap& delta,
                               const Element& w, const Scalar& varsigma,
                               const Scalar& mu, bool with_mu) {
  AlgebraPtr R = datum.algebra();
  const ScalarRing& ring = R->ring;
  const DoubleOperator& sg = datum.sigma;
  Scalar vs = ring.canon(varsigma);
  std::size_t d = R->dim;
  std::size_t unknowns = with_mu ? d + 1 : d;

  SystemBuilder sys{R, unknowns, {}, {}};
  auto e_basis = [&](std::size_t j) { return Element::basis(R, j); };

  // (a): e sigma + vs(sigma e) + w e - e  [+ mu(w sigma + s... )] = delta(s) - mu s - mu(w sigma)
  {
    std::vector<Element> cols;
    for (std::size_t j = 0; j < d; ++j) {
      Element ej = e_basis(j);
      cols.push_back(sg.left(ej) + vs * sg.right(ej) + w * ej - ej);
    }
    if (with_mu)
      cols.push_back(datum.s + sg.left(w));  // mu-column: -(lhs mu terms) sign handled below
    Element target = delta(datum.s);
    if (!with_mu)
      target = target - ring.canon(mu) * datum.s -
               ring.canon(mu) * sg.left(w);
    sys.add(cols, target);
  }
  for (std::size_t i = 0; i < d; ++i) {
    Element a = Element::basis(R, i);
    Element aa = alpha(a);
    // (b): alpha(a) e [+ mu (alpha(a) sigma)] = delta(a sigma) - delta(a)sigma
    std::vector<Element> cols;
    for (std::size_t j = 0; j < d; ++j) cols.push_back(aa * e_basis(j));
    if (with_mu) cols.push_back(sg.left(aa));
    Element target = delta(sg.left(a)) - sg.left(delta(a));
    if (!with_mu) target = target - ring.canon(mu) * sg.left(aa);
    sys.add(cols, target);
    // (c): e a [+ mu (sigma a)] = delta(sigma a) - w delta(a) - vs(sigma delta(a))
    cols.clear();
    for (std::size_t j = 0; j < d; ++j) cols.push_back(e_basis(j) * a);
    if (with_mu) cols.push_back(sg.right(a));
    target = delta(sg.right(a)) - w * delta(a) - vs * sg.right(delta(a));
    if (!with_mu) target = target - ring.canon(mu) * sg.right(a);
    sys.add(cols, target);
  }
  return sys.solve();
}

}  // namespace

ESolveResult solve_deriv_ext(const HomotheticDatum& datum,
                             const LinMap& alpha, const LinMap& delta,
                             const Element& w, const Scalar& varsigma,
                             const Scalar& mu, bool require_endo) {
  AlgebraPtr R = datum.algebra();
  const ScalarRing& ring = R->ring;
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "solve_deriv_ext requires a field, got Z");
  validate_varsigma(ring, varsigma);
  validate_mu(ring, varsigma, mu);
  deriv_preconditions(datum, alpha, delta, w, varsigma, require_endo);
  AffineSolutionSet s =
      deriv_system(datum, alpha, delta, w, varsigma, mu, false);
  ESolveResult out;
  out.solvable = s.consistent;
  if (s.consistent) {
    out.particular = Element::from(R, s.particular);
    for (const auto& k : s.kernel) out.kernel.push_back(Element::from(R, k));
  } else {
    out.particular = Element::zero(R);
  }
  return out;
}

AffineSolutionSet solve_deriv_ext_mu(const HomotheticDatum& datum,
                                     const LinMap& alpha, const LinMap& delta,
                                     const Element& w, const Scalar& varsigma,
                                     bool require_endo) {
  const ScalarRing& ring = datum.algebra()->ring;
  if (!ring.is_field())
    fail(ErrorKind::NotAField, "solve_deriv_ext_mu requires a field, got Z");
  validate_varsigma(ring, varsigma);
  deriv_preconditions(datum, alpha, delta, w, varsigma, require_endo);
  return deriv_system(datum, alpha, delta, w, varsigma, Scalar(0), true);
}

InnerExtDerivation inner_ext_derivation(const HomotheticExtension& E,
                                        const AlgebraPtr& S,
                                        const LinMap& alpha, const Element& w,
                                        const Scalar& varsigma,
                                        const ExtElement& c) {
  LinMap alphaS = extend_endo(E, S, alpha, w, varsigma);
  Element cS = ext_to_coords(E, S, c);
  std::vector<Element> cols;
  for (std::size_t i = 0; i < S->dim; ++i) {
    Element u = Element::basis(S, i);
    cols.push_back(alphaS(u) * cS - cS * u);
  }
  LinMap deltaS = LinMap::from_columns(S, cols);
  SigmaSplit split = split_over_sigma(E, S, deltaS);
  return {std::move(deltaS), std::move(split.base), std::move(split.extra),
          std::move(split.coeff)};
}

std::pair<Element, Scalar> inner_ext_closed_form(const HomotheticDatum& datum,
                                                 const LinMap& alpha,
                                                 const Element& w,
                                                 const Scalar& varsigma,
                                                 const ExtElement& c) {
  (void)alpha;
  const ScalarRing& ring = datum.algebra()->ring;
  const DoubleOperator& sg = datum.sigma;
  Scalar vs = ring.canon(varsigma);
  Scalar zeta = ring.canon(c.xi);
  Scalar vs_minus_1 = ring.sub(vs, Scalar(1));
  Element e = vs * sg.right(c.a) - sg.left(c.a) + w * c.a +
              zeta * (sg.left(w) + vs_minus_1 * datum.s);
  Scalar mu = ring.mul(zeta, vs_minus_1);
  return {std::move(e), std::move(mu)};
}

SigmaSplit split_over_sigma(const HomotheticExtension& E, const AlgebraPtr& S,
                            const LinMap& f) {
  AlgebraPtr R = E.base();
  if (f.dom != S || f.cod != S)
    fail(ErrorKind::DomainMismatch, "map is not an endomap of the extension");
  std::vector<Element> cols;
  for (std::size_t i = 0; i < R->dim; ++i) {
    Element im = f(Element::basis(S, i));
    ExtElement x = coords_to_ext(E, im);
    if (!R->ring.is_zero(x.xi))
      fail(ErrorKind::NotRestrictable,
           "image of basis element " + std::to_string(i + 1) +
               " leaves iota(R): " + im.str());
    cols.push_back(x.a);
  }
  ExtElement sig_im = coords_to_ext(E, f(Element::basis(S, R->dim)));
  return {LinMap::from_columns(R, cols), sig_im.a, sig_im.xi};
}

Quintuple restrict_and_extract(const HomotheticExtension& E,
                               const AlgebraPtr& S, const LinMap& alphaS,
                               const LinMap& deltaS) {
  SigmaSplit asplit = split_over_sigma(E, S, alphaS);
  SigmaSplit dsplit = split_over_sigma(E, S, deltaS);
  const ScalarRing& ring = E.base()->ring;
  validate_varsigma(ring, asplit.coeff);
  Quintuple q{E.datum,
              std::move(asplit.base),
              std::move(dsplit.base),
              std::move(asplit.extra),
              std::move(dsplit.extra),
              ring.canon(asplit.coeff),
              ring.canon(dsplit.coeff)};
  CheckResult r = check_deriv_ext(q.datum, q.alpha, q.delta, q.w, q.e,
                                  q.varsigma, q.mu, true);
  if (!r) fail(ErrorKind::ConditionsFail, r.witness->render());
  return q;
}

LinMap homothetic_derivation(const DoubleOperator& sigma,
                             const LinMap& alpha) {
  AlgebraPtr R = sigma.algebra();
  if (alpha.dom != R || alpha.cod != R)
    fail(ErrorKind::AlgebraMismatch, "alpha must be an endomap of R");
  std::vector<Element> cols;
  for (std::size_t i = 0; i < R->dim; ++i) {
    Element a = Element::basis(R, i);
    cols.push_back(sigma.left(alpha(a)) - sigma.right(a));
  }
  return LinMap::from_columns(R, cols);
}

}  // namespace orehom
