#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orehom/homext.hpp"
#include "orehom/ore.hpp"
#include "orehom/skewderiv.hpp"

namespace orehom {

// Scalar polynomials over the coefficient field; canonical form has no
// trailing zeros.
using ScalarPoly = std::vector<Scalar>;

ScalarPoly scalar_poly_canon(const ScalarRing& ring, ScalarPoly f);
ScalarPoly scalar_poly_add(const ScalarRing& ring, const ScalarPoly& f,
                           const ScalarPoly& g);
ScalarPoly scalar_poly_mul(const ScalarRing& ring, const ScalarPoly& f,
                           const ScalarPoly& g);
bool scalar_poly_eq(const ScalarRing& ring, const ScalarPoly& f,
                    const ScalarPoly& g);
std::string scalar_poly_str(const ScalarRing& ring, const ScalarPoly& f);

// The two Ore rings attached to a validated quintuple: R[x; alpha, delta]
// and S[x; alpha_S, delta_S] with S = R(sigma, s), plus the splitting data
// connecting them.
struct BridgeContext {
  Quintuple q;
  HomotheticExtension E;
  AlgebraPtr S;
  LinMap alphaS;
  LinMap deltaS;
  LinMap iota_map;  // R -> S
  LinMap p_map;     // S -> R, drops the @sigma coordinate
  Element sigma_el; // @sigma as an element of S
  OreRingPtr OR;
  OreRingPtr OS;
  std::size_t D;  // verification degree bound

  AlgebraPtr R() const { return E.base(); }
  bool type1() const;
};

BridgeContext make_bridge_context(const Quintuple& q, std::size_t D = 6);

OrePoly iota_prime(const BridgeContext& ctx, const OrePoly& p);
ScalarPoly pi_prime(const BridgeContext& ctx, const OrePoly& P);
OrePoly p_split(const BridgeContext& ctx, const OrePoly& P);
OrePoly j_split(const BridgeContext& ctx, const ScalarPoly& f);

// sigma_tilde_left(p) = sigma~ p, sigma_tilde_right(p) = p sigma~, both
// computed by multiplying by the constant @sigma in S[x] and projecting.
OrePoly sigma_tilde_left(const BridgeContext& ctx, const OrePoly& p);
OrePoly sigma_tilde_right(const BridgeContext& ctx, const OrePoly& p);

// p(Gamma[alpha_S, delta_S]^n_i(@sigma)) as an element of R
Element gamma_bar(const BridgeContext& ctx, std::size_t n, std::size_t i);

// element p + xi @sigma of R[x; alpha, delta](sigma~, s)
struct OreHomElement {
  OrePoly poly;
  Scalar xi;
};

OreHomElement orehom_from(const BridgeContext& ctx, OrePoly p, Scalar xi);
OreHomElement orehom_add(const BridgeContext& ctx, const OreHomElement& u,
                         const OreHomElement& v);
OreHomElement orehom_mul(const BridgeContext& ctx, const OreHomElement& u,
                         const OreHomElement& v);
bool orehom_eq(const BridgeContext& ctx, const OreHomElement& u,
               const OreHomElement& v);
std::string orehom_str(const BridgeContext& ctx, const OreHomElement& u);

OrePoly phi(const BridgeContext& ctx, const OreHomElement& u);

struct DiagramReport {
  std::vector<std::pair<std::string, CheckResult>> rows;
  bool ok() const;
};

DiagramReport verify_diagram(const BridgeContext& ctx);

// Diagnostic for varsigma = 0: the substitution map P -> sum zeta_n mu^n is
// still multiplicative but lands in constants, so no bridge is claimed.
DiagramReport probe_type0(const BridgeContext& ctx);

}  // namespace orehom
