#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "orehom/homext.hpp"
#include "orehom/multiplier.hpp"
#include "orehom/skewderiv.hpp"

namespace orehom {

// The (2n-1)-dimensional span of the matrix units e_{11}..e_{1n}, e_{2n}..
// e_{nn}, in that basis order.
AlgebraPtr daleth(std::size_t n, const ScalarRing& ring);
std::size_t daleth_n(const AlgebraPtr& A);
std::size_t daleth_idx1(std::size_t n, std::size_t i);  // e_{1i}, 1 <= i <= n
std::size_t daleth_idxn(std::size_t n, std::size_t j);  // e_{jn}, 2 <= j <= n

// x eps_k = x_k e_{1k}, eps_k x = x^k e_{kn}; 2 <= k <= n-1
DoubleOperator epsilon(const AlgebraPtr& A, std::size_t k);
HomotheticDatum epsilon_datum(const AlgebraPtr& A, std::size_t k);

// (w, varsigma) for family 0 (varsigma = 0) and families 1-4 (varsigma = 1).
// lower = coordinates of e_{11}..e_{1n}, upper = of e_{2n}..e_{nn}; each
// family fixes most of them and BadFamilyParams reports any violation
// (e.g. a family-4 e_{1n} coordinate missing the -v_j v^j cross terms).
std::pair<Element, Scalar> theta_family(const AlgebraPtr& A, std::size_t k,
                                        int family,
                                        const std::vector<Scalar>& lower,
                                        const std::vector<Scalar>& upper);

// v_i = v_i v_1 (i < n, i != k), v^j = v^j v^n (j != k), v_k v_1 = 0,
// v^k v^n = 0, v_n = v_1 v_n + sum_{j=2}^n v_j v^j
CheckResult daleth_cond(const AlgebraPtr& A, std::size_t k, const Element& w);

// delta(e_{1i}) = g_1 e_{1i}, delta(e_{jn}) = g_j e_{jn}
LinMap rlin_derivation(const AlgebraPtr& A, const std::vector<Scalar>& gammas);

// canonical basis of {f linear : f(xy) = f(x)y}
std::vector<LinMap> right_module_endos(const AlgebraPtr& A);

struct RlinAudit {
  std::size_t endo_dim;
  std::size_t rlin_dim;
  bool complete;
  std::optional<LinMap> witness;  // a right-module endo outside the family
};
RlinAudit audit_rlin(const AlgebraPtr& A);

// Formal-mode e-solvability audit for the printed family shapes with
// alpha = 0, delta = rlin(gammas), varsigma = 1, mu = 0. The predicted
// column carries the reference obstruction/solution formulas.
struct ObstructionAudit {
  Element w;
  bool endo_admissible;
  bool predicted_solvable;
  bool solver_solvable;
  std::size_t kernel_dim;
  std::optional<Element> solver_e;
  std::optional<Element> predicted_e;

  bool match() const {
    if (predicted_solvable != solver_solvable) return false;
    if (!solver_solvable) return true;
    if (kernel_dim != 0) return false;
    return !predicted_e || (solver_e && *solver_e == *predicted_e);
  }
};
// family 1: params_lower = {v_k};  family 2: {v_2..v_n};
// family 3: params_lower = {v_n}, params_upper = {v^2..v^{n-1}};
// family 4: params_lower = {v_j}, params_upper = {v^j} for j = 2..n-1,
//           j != k; naive4 drops the e_{1n} cross terms.
ObstructionAudit audit_theta_obstruction(const AlgebraPtr& A, std::size_t k,
                                         int family,
                                         const std::vector<Scalar>& params_lower,
                                         const std::vector<Scalar>& params_upper,
                                         const std::vector<Scalar>& gammas,
                                         bool naive4 = false);

// The reference branch element: pq = 0 branch is -p g_1 e_{11} + g_k e_{1n}
// - q g_n e_{nn} (printed with mu = 0); the p = q = 1 branch is
// -(g_1+mu)e_{11} - mu sum_{j=2, j != k}^{n-1} e_{1j} + (g_k-mu)e_{1k}
// - (g_n+mu)e_{nn}.
Element theta0_displayed_e(const AlgebraPtr& A, std::size_t k, const Scalar& p,
                           const Scalar& q, const std::vector<Scalar>& gammas,
                           const Scalar& mu);

// varsigma = 0, w = p e_{11} + q e_{nn}, delta = rlin(gammas): joint (e, mu)
// solve vs the reference-formula claims.
struct Theta0Audit {
  Element w;
  bool solvable;
  std::size_t kernel_dim;
  std::optional<Scalar> mu;   // solver output when unique
  std::optional<Element> e;
  Scalar displayed_mu;        // reference branch: 0 when pq = 0, g_k otherwise
  Element displayed_e;        // reference branch element at displayed_mu
  bool displayed_ok;          // (displayed_e, displayed_mu) passes the checker
  bool claim_mu_zero_on_pq0;  // "mu = 0 whenever pq = 0" at this point
  Scalar pattern_mu;          // g_k
  Element pattern_e;          // -p g_1 e_{11} - q g_n e_{nn}
  bool pattern_match;         // solver agrees with the pattern
};
Theta0Audit audit_theta0(const AlgebraPtr& A, std::size_t k, const Scalar& p,
                         const Scalar& q, const std::vector<Scalar>& gammas);

// R = A_1 + A_2 + A_3 + A_4 with zero multiplication; a sigma = a_2 + a_3,
// sigma a = a_1 + a_3, s = 0.
struct ZeroMultSpec {
  ScalarRing ring;
  std::array<std::size_t, 4> dims;
};
AlgebraPtr zero_mult_algebra(const ZeroMultSpec& spec);
DoubleOperator zero_mult_sigma(const ZeroMultSpec& spec, const AlgebraPtr& A);
HomotheticDatum zero_mult_datum(const ZeroMultSpec& spec, const AlgebraPtr& A);

std::size_t zm_offset(const ZeroMultSpec& spec, std::size_t i);  // i in 1..4
Element zm_embed(const ZeroMultSpec& spec, const AlgebraPtr& A, std::size_t i,
                 const std::vector<Scalar>& block);
// omega_j . comp . pi_i (block i -> block j); comp is dims[j-1] x dims[i-1]
LinMap zm_block_map(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    std::size_t i, std::size_t j, const Mat& comp);

struct ZeroMultEndo {
  std::array<Mat, 4> diag;   // alpha_ii : A_i -> A_i   (varsigma = 1)
  std::array<Mat, 4> from4;  // alpha_4j : A_4 -> A_j   (varsigma = 0)
};
// varsigma sum_i omega_i alpha_ii pi_i + (1 - varsigma) sum_j omega_j
// alpha_4j pi_4
LinMap zero_mult_endo(const ZeroMultSpec& spec, const AlgebraPtr& A,
                      const Scalar& varsigma, const ZeroMultEndo& comp);
Element zero_mult_w(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    const Scalar& varsigma, const std::vector<Scalar>& w1,
                    const std::vector<Scalar>& w2);

struct ZeroMultDeriv {
  std::array<Mat, 4> diag;  // d_ii (d_11, d_33 used at varsigma = 1)
  Mat d23;                  // A_2 -> A_3  (varsigma = 0)
  Mat d41;                  // A_4 -> A_1  (varsigma = 0)
};
// omega_2 d22 pi_2 + omega_4 d44 pi_4 + vs(omega_1 d11 pi_1 + omega_3 d33
// pi_3) + (1-vs)(omega_3 d23 pi_2 + omega_1 d41 pi_4) + mu(omega_1 pi_1 +
// omega_3 pi_3 - omega_2 alpha_42 pi_4 - omega_3 alpha_43 pi_4)
LinMap zero_mult_deriv(const ZeroMultSpec& spec, const AlgebraPtr& A,
                       const Scalar& varsigma, const Scalar& mu,
                       const ZeroMultDeriv& dcomp, const ZeroMultEndo& acomp);
Element zero_mult_e(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    const Scalar& varsigma, const std::vector<Scalar>& e1,
                    const std::vector<Scalar>& e2,
                    const std::vector<Scalar>& e3);

struct ZeroMultAudit {
  std::vector<std::pair<std::string, CheckResult>> rows;
  bool ok() const;
};
ZeroMultAudit audit_zero_mult(const ZeroMultSpec& spec, const Scalar& varsigma,
                              int samples = 25);

}  // namespace orehom
