#include "orehom/ore.hpp"

#include <algorithm>

namespace orehom {

const LinMap& OreRing::gamma(std::size_t m, std::size_t i) const {
  if (i > m)
    fail(ErrorKind::IndexOutOfRange,
         "gamma(" + std::to_string(m) + ", " + std::to_string(i) + ")");
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (levels_.empty()) levels_.push_back({LinMap::identity(alg)});
  while (levels_.size() <= m) {
    std::size_t mm = levels_.size();
    const auto& prev = levels_[mm - 1];
    std::vector<LinMap> row;
    for (std::size_t j = 0; j <= mm; ++j) {
      LinMap g = LinMap::zero(alg, alg);
      if (j > 0) g = g + compose(alpha, prev[j - 1]);
      if (j < mm) g = g + compose(delta, prev[j]);
      row.push_back(std::move(g));
    }
    levels_.push_back(std::move(row));
  }
  return levels_[m][i];
}

OreRingPtr make_ore_ring(const AlgebraPtr& alg, const LinMap& alpha,
                         const LinMap& delta, std::size_t degree_cap) {
  if (alpha.dom != alg || alpha.cod != alg || delta.dom != alg ||
      delta.cod != alg)
    fail(ErrorKind::AlgebraMismatch,
         "alpha and delta must be endomaps of the coefficient algebra");
  if (degree_cap > kDegreeCap)
    fail(ErrorKind::DegreeCapExceeded,
         "degree cap " + std::to_string(degree_cap) + " exceeds " +
             std::to_string(kDegreeCap));
  CheckResult endo = is_endomorphism(alpha);
  if (!endo)
    fail(ErrorKind::EndoPreconditionFailed,
         "alpha is not an endomorphism: " + endo.witness->render());
  CheckResult skew = is_skew_derivation(delta, alpha);
  if (!skew)
    fail(ErrorKind::EndoPreconditionFailed,
         "delta is not an alpha-skew derivation: " + skew.witness->render());
  return std::make_shared<const OreRing>(alg, alpha, delta, degree_cap);
}

namespace {

void require_same_ring(const OrePoly& p, const OrePoly& q) {
  if (p.ring != q.ring)
    fail(ErrorKind::RingMismatch, "polynomials live in different Ore rings");
}

OrePoly canonicalize(OreRingPtr ring, std::vector<Element> coeff) {
  while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
  if (coeff.size() > ring->degree_cap + 1)
    fail(ErrorKind::DegreeCapExceeded,
         "degree " + std::to_string(coeff.size() - 1) + " exceeds cap " +
             std::to_string(ring->degree_cap));
  return {std::move(ring), std::move(coeff)};
}

}  // namespace

OrePoly ore_zero(const OreRingPtr& ring) { return {ring, {}}; }

OrePoly ore_monomial(const OreRingPtr& ring, Element a, std::size_t n) {
  if (a.alg != ring->alg)
    fail(ErrorKind::AlgebraMismatch, "coefficient not in the ring's algebra");
  std::vector<Element> coeff(n + 1, Element::zero(ring->alg));
  coeff[n] = std::move(a);
  return canonicalize(ring, std::move(coeff));
}

OrePoly ore_from_coeffs(const OreRingPtr& ring, std::vector<Element> coeff) {
  for (const Element& a : coeff)
    if (a.alg != ring->alg)
      fail(ErrorKind::AlgebraMismatch,
           "coefficient not in the ring's algebra");
  return canonicalize(ring, std::move(coeff));
}

OrePoly ore_add(const OrePoly& p, const OrePoly& q) {
  require_same_ring(p, q);
  std::vector<Element> coeff(std::max(p.coeff.size(), q.coeff.size()),
                             Element::zero(p.ring->alg));
  for (std::size_t i = 0; i < p.coeff.size(); ++i) coeff[i] = p.coeff[i];
  for (std::size_t i = 0; i < q.coeff.size(); ++i)
    coeff[i] = coeff[i] + q.coeff[i];
  return canonicalize(p.ring, std::move(coeff));
}

OrePoly ore_neg(const OrePoly& p) {
  std::vector<Element> coeff;
  for (const Element& a : p.coeff) coeff.push_back(-a);
  return {p.ring, std::move(coeff)};
}

OrePoly ore_sub(const OrePoly& p, const OrePoly& q) {
  return ore_add(p, ore_neg(q));
}

OrePoly ore_scale(const Scalar& c, const OrePoly& p) {
  std::vector<Element> coeff;
  for (const Element& a : p.coeff) coeff.push_back(c * a);
  return canonicalize(p.ring, std::move(coeff));
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
  require_same_ring(p, q);
  if (p.is_zero() || q.is_zero()) return ore_zero(p.ring);
  std::size_t dp = p.coeff.size() - 1, dq = q.coeff.size() - 1;
  std::vector<Element> coeff(dp + dq + 1, Element::zero(p.ring->alg));
  for (std::size_t m = 0; m <= dp; ++m) {
    if (p.coeff[m].is_zero()) continue;
    for (std::size_t n = 0; n <= dq; ++n) {
      if (q.coeff[n].is_zero()) continue;
      for (std::size_t i = 0; i <= m; ++i) {
        Element term = p.coeff[m] * p.ring->gamma(m, i)(q.coeff[n]);
        coeff[n + i] = coeff[n + i] + term;
      }
    }
  }
  return canonicalize(p.ring, std::move(coeff));
}

bool ore_eq(const OrePoly& p, const OrePoly& q) {
  require_same_ring(p, q);
  if (p.coeff.size() != q.coeff.size()) return false;
  for (std::size_t i = 0; i < p.coeff.size(); ++i)
    if (!(p.coeff[i] == q.coeff[i])) return false;
  return true;
}

Element ore_coeff(const OrePoly& p, std::size_t n) {
  if (n < p.coeff.size()) return p.coeff[n];
  return Element::zero(p.ring->alg);
}

OrePoly ore_map_coeffs(const OreRingPtr& target, const OrePoly& p,
                       const LinMap& f) {
  if (f.dom != p.ring->alg || f.cod != target->alg)
    fail(ErrorKind::AlgebraMismatch,
         "coefficient map does not connect the two rings");
  std::vector<Element> coeff;
  for (const Element& a : p.coeff) coeff.push_back(f(a));
  return canonicalize(target, std::move(coeff));
}

OrePoly x_right(const OrePoly& p) {
  if (p.is_zero()) return p;
  std::vector<Element> coeff(p.coeff.size() + 1, Element::zero(p.ring->alg));
  for (std::size_t i = 0; i < p.coeff.size(); ++i) coeff[i + 1] = p.coeff[i];
  return canonicalize(p.ring, std::move(coeff));
}

OrePoly x_left(const OrePoly& p) {
  if (p.is_zero()) return p;
  std::vector<Element> coeff(p.coeff.size() + 1, Element::zero(p.ring->alg));
  for (std::size_t i = 0; i < p.coeff.size(); ++i) {
    coeff[i + 1] = coeff[i + 1] + p.ring->alpha(p.coeff[i]);
    coeff[i] = coeff[i] + p.ring->delta(p.coeff[i]);
  }
  return canonicalize(p.ring, std::move(coeff));
}

std::string ore_str(const OrePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeff.size(); i-- > 0;) {
    if (p.coeff[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + p.coeff[i].str() + ")";
    if (i == 1)
      out += "*x";
    else if (i > 1)
      out += "*x^" + std::to_string(i);
  }
  return out;
}

const LinMap& gamma(const OreRingPtr& ring, std::size_t m, std::size_t i) {
  return ring->gamma(m, i);
}

}  // namespace orehom
