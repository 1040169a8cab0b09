#include "orehom/catalog.hpp"

#include <random>
#include <string>
#include <utility>

namespace orehom {

namespace {

std::size_t idx1_checked(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) fail(ErrorKind::IndexOutOfRange, "e_{1i} needs 1 <= i <= n");
  return i - 1;
}

std::size_t idxn_checked(std::size_t n, std::size_t j) {
  if (j < 2 || j > n) fail(ErrorKind::IndexOutOfRange, "e_{jn} needs 2 <= j <= n");
  return n + (j - 2);
}

void require_k(std::size_t n, std::size_t k) {
  if (k < 2 || k + 1 > n)
    fail(ErrorKind::BadK, "k must satisfy 2 <= k <= n-1, got k=" +
                              std::to_string(k) + ", n=" + std::to_string(n));
}

void require_coord(const ScalarRing& ring, const Scalar& got,
                   const Scalar& want, const std::string& name, int family) {
  if (!ring.eq(got, want))
    fail(ErrorKind::BadFamilyParams,
         "family " + std::to_string(family) + " fixes " + name + " = " +
             ring.to_string(want) + ", got " + ring.to_string(got));
}

void require_zero_one(const ScalarRing& ring, const Scalar& v,
                      const std::string& name, int family) {
  if (!ring.is_zero(v) && !ring.eq(v, ring.one()))
    fail(ErrorKind::BadFamilyParams,
         "family " + std::to_string(family) + " needs " + name +
             " in {0, 1}, got " + ring.to_string(v));
}

CheckResult scalar_eq_check(const ScalarRing& ring, const std::string& identity,
                            std::vector<std::size_t> indices, const Scalar& lhs,
                            const Scalar& rhs) {
  if (ring.eq(lhs, rhs)) return CheckResult::pass();
  return CheckResult::fail(Witness{identity, std::move(indices),
                                   ring.to_string(lhs), ring.to_string(rhs)});
}

Mat random_mat(const ScalarRing& ring, std::size_t r, std::size_t c,
               std::mt19937_64& rng) {
  Mat m(r, c);
  for (auto& v : m.a) v = ring.sample(rng);
  return m;
}

std::vector<Scalar> random_vec(const ScalarRing& ring, std::size_t n,
                               std::mt19937_64& rng) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = ring.sample(rng);
  return v;
}

}  // namespace

AlgebraPtr daleth(std::size_t n, const ScalarRing& ring) {
  if (n < 2) fail(ErrorKind::BadN, "daleth needs n >= 2");
  std::size_t d = 2 * n - 1;
  if (d > kDimensionCap)
    fail(ErrorKind::DimensionCapExceeded,
         "daleth(" + std::to_string(n) + ") has dimension " + std::to_string(d));

  // basis index -> matrix-unit position
  std::vector<std::pair<std::size_t, std::size_t>> pos(d);
  std::vector<std::string> names(d);
  for (std::size_t i = 1; i <= n; ++i) {
    pos[i - 1] = {1, i};
    names[i - 1] = "e1" + std::to_string(i);
  }
  for (std::size_t j = 2; j <= n; ++j) {
    pos[n + (j - 2)] = {j, n};
    names[n + (j - 2)] = "e" + std::to_string(j) + std::to_string(n);
  }

  auto unit_index = [&](std::size_t r, std::size_t c) {
    if (r == 1) return idx1_checked(n, c);
    return idxn_checked(n, r);  // only reachable with c == n
  };

  std::vector<Scalar> sc(d * d * d, Scalar(0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto [r1, c1] = pos[a];
      auto [r2, c2] = pos[b];
      if (c1 != r2) continue;
      std::size_t t = unit_index(r1, c2);
      sc[(a * d + b) * d + t] = Scalar(1);
    }
  return make_algebra(ring, d, std::move(sc), std::move(names),
                      "daleth" + std::to_string(n));
}

std::size_t daleth_n(const AlgebraPtr& A) {
  if (A->dim < 3 || A->dim % 2 == 0)
    fail(ErrorKind::BadN,
         "not a daleth dimension: " + std::to_string(A->dim));
  return (A->dim + 1) / 2;
}

std::size_t daleth_idx1(std::size_t n, std::size_t i) {
  return idx1_checked(n, i);
}

std::size_t daleth_idxn(std::size_t n, std::size_t j) {
  return idxn_checked(n, j);
}

DoubleOperator epsilon(const AlgebraPtr& A, std::size_t k) {
  std::size_t n = daleth_n(A);
  require_k(n, k);
  Mat l(A->dim, A->dim), r(A->dim, A->dim);
  std::size_t lo = idx1_checked(n, k), hi = idxn_checked(n, k);
  l.at(lo, lo) = Scalar(1);  // x eps_k = x_k e_{1k}
  r.at(hi, hi) = Scalar(1);  // eps_k x = x^k e_{kn}
  return make_double_operator(LinMap::from_matrix(A, A, std::move(l)),
                              LinMap::from_matrix(A, A, std::move(r)));
}

HomotheticDatum epsilon_datum(const AlgebraPtr& A, std::size_t k) {
  return make_datum(epsilon(A, k), Element::zero(A));
}

std::pair<Element, Scalar> theta_family(const AlgebraPtr& A, std::size_t k,
                                        int family,
                                        const std::vector<Scalar>& lower,
                                        const std::vector<Scalar>& upper) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  require_k(n, k);
  if (family < 0 || family > 4)
    fail(ErrorKind::BadFamilyParams, "family must be 0..4");
  if (lower.size() != n)
    fail(ErrorKind::BadShape, "lower needs n = " + std::to_string(n) +
                                  " coordinates (e_{11}..e_{1n})");
  if (upper.size() != n - 1)
    fail(ErrorKind::BadShape, "upper needs n-1 = " + std::to_string(n - 1) +
                                  " coordinates (e_{2n}..e_{nn})");
  auto lo = [&](std::size_t i) -> const Scalar& { return lower[i - 1]; };
  auto up = [&](std::size_t j) -> const Scalar& { return upper[j - 2]; };
  auto lo_name = [](std::size_t i) { return "v_" + std::to_string(i); };
  auto up_name = [](std::size_t j) { return "v^" + std::to_string(j); };

  Scalar zero = ring.zero(), one = ring.one();
  switch (family) {
    case 0:
      require_zero_one(ring, lo(1), lo_name(1), 0);
      require_zero_one(ring, up(n), up_name(n), 0);
      for (std::size_t i = 2; i <= n; ++i)
        require_coord(ring, lo(i), zero, lo_name(i), 0);
      for (std::size_t j = 2; j + 1 <= n; ++j)
        require_coord(ring, up(j), zero, up_name(j), 0);
      break;
    case 1:
      for (std::size_t i = 1; i <= n; ++i)
        if (i != k) require_coord(ring, lo(i), zero, lo_name(i), 1);
      for (std::size_t j = 2; j <= n; ++j)
        require_coord(ring, up(j), zero, up_name(j), 1);
      break;
    case 2:
      require_coord(ring, lo(1), one, lo_name(1), 2);
      require_coord(ring, lo(k), zero, lo_name(k), 2);
      for (std::size_t j = 2; j <= n; ++j)
        require_coord(ring, up(j), zero, up_name(j), 2);
      break;
    case 3:
      require_coord(ring, up(n), one, up_name(n), 3);
      require_coord(ring, up(k), zero, up_name(k), 3);
      for (std::size_t i = 1; i + 1 <= n; ++i)
        require_coord(ring, lo(i), zero, lo_name(i), 3);
      break;
    case 4: {
      require_coord(ring, lo(1), one, lo_name(1), 4);
      require_coord(ring, up(n), one, up_name(n), 4);
      require_coord(ring, lo(k), zero, lo_name(k), 4);
      require_coord(ring, up(k), zero, up_name(k), 4);
      Scalar cross = zero;
      for (std::size_t j = 2; j + 1 <= n; ++j)
        if (j != k) cross = ring.add(cross, ring.mul(lo(j), up(j)));
      Scalar want = ring.neg(cross);
      if (!ring.eq(lo(n), want))
        fail(ErrorKind::BadFamilyParams,
             "family 4 fixes v_n = -sum_j v_j v^j = " + ring.to_string(want) +
                 ", got " + ring.to_string(lo(n)) +
                 " (the e_{1n} cross terms are not optional)");
      break;
    }
    default:
      break;
  }

  std::vector<Scalar> c(A->dim, Scalar(0));
  for (std::size_t i = 1; i <= n; ++i) c[daleth_idx1(n, i)] = ring.canon(lo(i));
  for (std::size_t j = 2; j <= n; ++j) c[daleth_idxn(n, j)] = ring.canon(up(j));
  Scalar varsigma = family == 0 ? zero : one;
  return {Element::from(A, std::move(c)), varsigma};
}

CheckResult daleth_cond(const AlgebraPtr& A, std::size_t k, const Element& w) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  require_k(n, k);
  if (w.alg != A && !w.alg->same_content(*A))
    fail(ErrorKind::AlgebraMismatch, "w lives in a different algebra");
  auto lo = [&](std::size_t i) { return w.c[daleth_idx1(n, i)]; };
  auto up = [&](std::size_t j) { return w.c[daleth_idxn(n, j)]; };

  for (std::size_t i = 1; i + 1 <= n; ++i) {
    if (i == k) continue;
    auto r = scalar_eq_check(ring, "v_i = v_i v_1", {i}, lo(i),
                             ring.mul(lo(i), lo(1)));
    if (!r) return r;
  }
  for (std::size_t j = 2; j <= n; ++j) {
    if (j == k) continue;
    auto r = scalar_eq_check(ring, "v^j = v^j v^n", {j}, up(j),
                             ring.mul(up(j), up(n)));
    if (!r) return r;
  }
  auto r1 = scalar_eq_check(ring, "v_k v_1 = 0", {k},
                            ring.mul(lo(k), lo(1)), ring.zero());
  if (!r1) return r1;
  auto r2 = scalar_eq_check(ring, "v^k v^n = 0", {k},
                            ring.mul(up(k), up(n)), ring.zero());
  if (!r2) return r2;
  Scalar rhs = ring.mul(lo(1), lo(n));
  for (std::size_t j = 2; j <= n; ++j)
    rhs = ring.add(rhs, ring.mul(lo(j), up(j)));
  return scalar_eq_check(ring, "v_n = v_1 v_n + sum_j v_j v^j", {n}, lo(n),
                         rhs);
}

LinMap rlin_derivation(const AlgebraPtr& A, const std::vector<Scalar>& gammas) {
  std::size_t n = daleth_n(A);
  if (gammas.size() != n)
    fail(ErrorKind::BadShape,
         "need n = " + std::to_string(n) + " coefficients");
  Mat m(A->dim, A->dim);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t t = daleth_idx1(n, i);
    m.at(t, t) = gammas[0];
  }
  for (std::size_t j = 2; j <= n; ++j) {
    std::size_t t = daleth_idxn(n, j);
    m.at(t, t) = gammas[j - 1];
  }
  return LinMap::from_matrix(A, A, std::move(m));
}

std::vector<LinMap> right_module_endos(const AlgebraPtr& A) {
  const ScalarRing& ring = A->ring;
  std::size_t d = A->dim;
  // unknowns f_{k,i} at column k*d + i; rows: coefficient of b_k in
  // f(b_i b_j) - f(b_i) b_j
  Mat sys(d * d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::size_t row = (i * d + j) * d + k;
        for (std::size_t m = 0; m < d; ++m) {
          std::size_t ca = k * d + m, cb = m * d + i;
          sys.at(row, ca) = ring.add(sys.at(row, ca), A->c(i, j, m));
          sys.at(row, cb) = ring.sub(sys.at(row, cb), A->c(m, j, k));
        }
      }
  auto sol = solve_affine(ring, sys, std::vector<Scalar>(d * d * d, Scalar(0)));
  std::vector<LinMap> out;
  out.reserve(sol.kernel.size());
  for (const auto& v : sol.kernel) {
    Mat m(d, d);
    m.a = v;
    out.push_back(LinMap::from_matrix(A, A, std::move(m)));
  }
  return out;
}

RlinAudit audit_rlin(const AlgebraPtr& A) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  auto endos = right_module_endos(A);

  std::vector<std::vector<Scalar>> gens;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Scalar> g(n, Scalar(0));
    g[t] = Scalar(1);
    gens.push_back(rlin_derivation(A, g).m.a);
  }
  Mat gm(gens.size(), A->dim * A->dim);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < gens[r].size(); ++c) gm.at(r, c) = gens[r][c];

  RlinAudit audit;
  audit.endo_dim = endos.size();
  audit.rlin_dim = rank(ring, gm);
  audit.complete = true;
  for (const auto& f : endos) {
    if (!in_span(ring, gens, f.m.a)) {
      audit.complete = false;
      audit.witness = f;
      break;
    }
  }
  return audit;
}

ObstructionAudit audit_theta_obstruction(const AlgebraPtr& A, std::size_t k,
                                         int family,
                                         const std::vector<Scalar>& params_lower,
                                         const std::vector<Scalar>& params_upper,
                                         const std::vector<Scalar>& gammas,
                                         bool naive4) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  require_k(n, k);
  if (gammas.size() != n)
    fail(ErrorKind::BadShape, "need n = " + std::to_string(n) + " gammas");
  auto g = [&](std::size_t i) { return gammas[i - 1]; };

  auto want = [&](std::size_t got, std::size_t lo_n, std::size_t up_n,
                  const char* what) {
    if (got != lo_n + up_n)
      fail(ErrorKind::BadShape, std::string("family shape params: ") + what);
  };

  Element w = Element::zero(A);
  Element pred_e = Element::zero(A);
  bool pred_solvable = true;
  bool have_pred_e = true;
  auto& wc = w.c;
  auto& pc = pred_e.c;

  switch (family) {
    case 1: {
      want(params_lower.size(), 1, 0, "family 1 takes {v_k}");
      want(params_upper.size(), 0, 0, "family 1 takes no upper params");
      const Scalar& v = params_lower[0];
      wc[daleth_idx1(n, k)] = ring.canon(v);
      pc[daleth_idx1(n, k)] = ring.neg(ring.mul(g(k), v));
      break;
    }
    case 2: {
      want(params_lower.size(), n - 1, 0, "family 2 takes {v_2..v_n}");
      want(params_upper.size(), 0, 0, "family 2 takes no upper params");
      wc[daleth_idx1(n, 1)] = ring.one();
      pc[daleth_idx1(n, 1)] = ring.neg(g(1));
      for (std::size_t j = 2; j <= n; ++j) {
        const Scalar& v = params_lower[j - 2];
        wc[daleth_idx1(n, j)] = ring.canon(v);
        pc[daleth_idx1(n, j)] = ring.neg(ring.mul(g(j), v));
        if (j == k) pred_solvable = ring.is_zero(ring.mul(g(k), v));
      }
      break;
    }
    case 3: {
      want(params_lower.size(), 1, 0, "family 3 takes lower {v_n}");
      want(params_upper.size(), n - 2, 0, "family 3 takes {v^2..v^{n-1}}");
      const Scalar& vn = params_lower[0];
      wc[daleth_idx1(n, n)] = ring.canon(vn);
      pred_solvable = ring.is_zero(ring.mul(g(n), vn));
      for (std::size_t j = 2; j + 1 <= n; ++j) {
        const Scalar& v = params_upper[j - 2];
        wc[daleth_idxn(n, j)] = ring.canon(v);
        if (j == k)
          pc[daleth_idxn(n, k)] = ring.neg(ring.mul(g(n), v));
        else if (pred_solvable)
          pred_solvable = ring.is_zero(ring.mul(g(n), v));
      }
      break;
    }
    case 4: {
      std::size_t free_count = n >= 3 ? n - 3 : 0;
      want(params_lower.size(), free_count, 0,
           "family 4 takes {v_j : j = 2..n-1, j != k}");
      want(params_upper.size(), free_count, 0,
           "family 4 takes {v^j : j = 2..n-1, j != k}");
      wc[daleth_idx1(n, 1)] = ring.one();
      wc[daleth_idxn(n, n)] = ring.one();
      Scalar cross = ring.zero();
      std::size_t t = 0;
      for (std::size_t j = 2; j + 1 <= n; ++j) {
        if (j == k) continue;
        const Scalar& vj = params_lower[t];
        const Scalar& vuj = params_upper[t];
        ++t;
        wc[daleth_idx1(n, j)] = ring.canon(vj);
        wc[daleth_idxn(n, j)] = ring.canon(vuj);
        cross = ring.add(cross, ring.mul(vj, vuj));
      }
      if (naive4) {
        pred_solvable = ring.is_zero(ring.mul(g(n), cross));
      } else {
        wc[daleth_idx1(n, n)] = ring.neg(cross);
        pred_solvable = true;
      }
      have_pred_e = false;
      break;
    }
    default:
      fail(ErrorKind::BadFamilyParams, "obstruction audit covers families 1-4");
  }

  HomotheticDatum datum = epsilon_datum(A, k);
  LinMap alpha = LinMap::zero(A, A);
  LinMap delta = rlin_derivation(A, gammas);

  ObstructionAudit audit;
  audit.w = w;
  audit.endo_admissible =
      static_cast<bool>(check_endo_ext(datum, alpha, w, ring.one(), true));
  auto sol = solve_deriv_ext(datum, alpha, delta, w, ring.one(), ring.zero(),
                             /*require_endo=*/false);
  audit.predicted_solvable = pred_solvable;
  audit.solver_solvable = sol.solvable;
  audit.kernel_dim = sol.kernel.size();
  if (sol.solvable) audit.solver_e = sol.particular;
  if (have_pred_e && pred_solvable) audit.predicted_e = pred_e;
  return audit;
}

Element theta0_displayed_e(const AlgebraPtr& A, std::size_t k, const Scalar& p,
                           const Scalar& q, const std::vector<Scalar>& gammas,
                           const Scalar& mu) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  require_k(n, k);
  if (gammas.size() != n)
    fail(ErrorKind::BadShape, "need n = " + std::to_string(n) + " gammas");
  Element e = Element::zero(A);
  if (ring.is_zero(ring.mul(p, q))) {
    e.c[daleth_idx1(n, 1)] = ring.neg(ring.mul(p, gammas[0]));
    e.c[daleth_idx1(n, n)] = ring.canon(gammas[k - 1]);
    e.c[daleth_idxn(n, n)] = ring.neg(ring.mul(q, gammas[n - 1]));
  } else {
    e.c[daleth_idx1(n, 1)] = ring.neg(ring.add(gammas[0], mu));
    for (std::size_t j = 2; j + 1 <= n; ++j)
      if (j != k) e.c[daleth_idx1(n, j)] = ring.neg(mu);
    e.c[daleth_idx1(n, k)] = ring.sub(gammas[k - 1], mu);
    e.c[daleth_idxn(n, n)] = ring.neg(ring.add(gammas[n - 1], mu));
  }
  return e;
}

Theta0Audit audit_theta0(const AlgebraPtr& A, std::size_t k, const Scalar& p,
                         const Scalar& q, const std::vector<Scalar>& gammas) {
  const ScalarRing& ring = A->ring;
  std::size_t n = daleth_n(A);
  require_k(n, k);
  if (gammas.size() != n)
    fail(ErrorKind::BadShape, "need n = " + std::to_string(n) + " gammas");
  require_zero_one(ring, p, "p", 0);
  require_zero_one(ring, q, "q", 0);

  Element w = Element::zero(A);
  w.c[daleth_idx1(n, 1)] = ring.canon(p);
  w.c[daleth_idxn(n, n)] = ring.canon(q);

  HomotheticDatum datum = epsilon_datum(A, k);
  LinMap alpha = LinMap::zero(A, A);
  LinMap delta = rlin_derivation(A, gammas);
  auto sol = solve_deriv_ext_mu(datum, alpha, delta, w, ring.zero(), true);

  Theta0Audit audit;
  audit.w = w;
  audit.solvable = sol.consistent;
  audit.kernel_dim = sol.kernel_dim();
  if (sol.consistent && sol.kernel.empty()) {
    audit.e = Element::from(
        A, std::vector<Scalar>(sol.particular.begin(),
                               sol.particular.begin() + A->dim));
    audit.mu = sol.particular[A->dim];
  }

  bool pq0 = ring.is_zero(ring.mul(p, q));
  audit.displayed_mu = pq0 ? ring.zero() : ring.canon(gammas[k - 1]);
  audit.displayed_e =
      theta0_displayed_e(A, k, p, q, gammas, audit.displayed_mu);
  audit.displayed_ok =
      static_cast<bool>(check_deriv_ext(datum, alpha, delta, w,
                                        audit.displayed_e, ring.zero(),
                                        audit.displayed_mu, true));
  audit.claim_mu_zero_on_pq0 =
      !pq0 || !audit.solvable || (audit.mu && ring.is_zero(*audit.mu));

  audit.pattern_mu = ring.canon(gammas[k - 1]);
  Element pe = Element::zero(A);
  pe.c[daleth_idx1(n, 1)] = ring.neg(ring.mul(p, gammas[0]));
  pe.c[daleth_idxn(n, n)] = ring.neg(ring.mul(q, gammas[n - 1]));
  audit.pattern_e = pe;
  audit.pattern_match = audit.solvable && audit.kernel_dim == 0 && audit.mu &&
                        ring.eq(*audit.mu, audit.pattern_mu) &&
                        *audit.e == audit.pattern_e;
  return audit;
}

namespace {

std::size_t zm_total(const ZeroMultSpec& spec) {
  return spec.dims[0] + spec.dims[1] + spec.dims[2] + spec.dims[3];
}

void zm_check(const ZeroMultSpec& spec, const AlgebraPtr& A) {
  if (!(A->ring == spec.ring))
    fail(ErrorKind::RingMismatch, "algebra ring differs from the spec ring");
  if (A->dim != zm_total(spec))
    fail(ErrorKind::AlgebraMismatch,
         "algebra dimension does not match the block dims");
}

std::size_t zm_block_index(std::size_t i) {
  if (i < 1 || i > 4) fail(ErrorKind::IndexOutOfRange, "block index is 1..4");
  return i - 1;
}

}  // namespace

AlgebraPtr zero_mult_algebra(const ZeroMultSpec& spec) {
  std::size_t d = zm_total(spec);
  if (d == 0) fail(ErrorKind::BadShape, "at least one block must be nonzero");
  std::vector<std::string> names;
  names.reserve(d);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t t = 1; t <= spec.dims[i - 1]; ++t)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(t));
  std::string label = "zeromult(" + std::to_string(spec.dims[0]) + "," +
                      std::to_string(spec.dims[1]) + "," +
                      std::to_string(spec.dims[2]) + "," +
                      std::to_string(spec.dims[3]) + ")";
  return make_algebra(spec.ring, d, std::vector<Scalar>(d * d * d, Scalar(0)),
                      std::move(names), std::move(label));
}

std::size_t zm_offset(const ZeroMultSpec& spec, std::size_t i) {
  std::size_t b = zm_block_index(i);
  std::size_t off = 0;
  for (std::size_t t = 0; t < b; ++t) off += spec.dims[t];
  return off;
}

Element zm_embed(const ZeroMultSpec& spec, const AlgebraPtr& A, std::size_t i,
                 const std::vector<Scalar>& block) {
  zm_check(spec, A);
  std::size_t b = zm_block_index(i);
  if (block.size() != spec.dims[b])
    fail(ErrorKind::BadShape, "block " + std::to_string(i) + " has dimension " +
                                  std::to_string(spec.dims[b]));
  Element x = Element::zero(A);
  std::size_t off = zm_offset(spec, i);
  for (std::size_t t = 0; t < block.size(); ++t)
    x.c[off + t] = spec.ring.canon(block[t]);
  return x;
}

LinMap zm_block_map(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    std::size_t i, std::size_t j, const Mat& comp) {
  zm_check(spec, A);
  std::size_t bi = zm_block_index(i), bj = zm_block_index(j);
  if (comp.rows != spec.dims[bj] || comp.cols != spec.dims[bi])
    fail(ErrorKind::BadShape,
         "component A_" + std::to_string(i) + " -> A_" + std::to_string(j) +
             " must be " + std::to_string(spec.dims[bj]) + " x " +
             std::to_string(spec.dims[bi]));
  Mat m(A->dim, A->dim);
  std::size_t oi = zm_offset(spec, i), oj = zm_offset(spec, j);
  for (std::size_t r = 0; r < comp.rows; ++r)
    for (std::size_t c = 0; c < comp.cols; ++c)
      m.at(oj + r, oi + c) = comp.at(r, c);
  return LinMap::from_matrix(A, A, std::move(m));
}

DoubleOperator zero_mult_sigma(const ZeroMultSpec& spec, const AlgebraPtr& A) {
  zm_check(spec, A);
  Mat l(A->dim, A->dim), r(A->dim, A->dim);
  for (std::size_t i : {2, 3}) {
    std::size_t off = zm_offset(spec, i);
    for (std::size_t t = 0; t < spec.dims[i - 1]; ++t)
      l.at(off + t, off + t) = Scalar(1);
  }
  for (std::size_t i : {1, 3}) {
    std::size_t off = zm_offset(spec, i);
    for (std::size_t t = 0; t < spec.dims[i - 1]; ++t)
      r.at(off + t, off + t) = Scalar(1);
  }
  return make_double_operator(LinMap::from_matrix(A, A, std::move(l)),
                              LinMap::from_matrix(A, A, std::move(r)));
}

HomotheticDatum zero_mult_datum(const ZeroMultSpec& spec, const AlgebraPtr& A) {
  return make_datum(zero_mult_sigma(spec, A), Element::zero(A));
}

LinMap zero_mult_endo(const ZeroMultSpec& spec, const AlgebraPtr& A,
                      const Scalar& varsigma, const ZeroMultEndo& comp) {
  zm_check(spec, A);
  validate_varsigma(spec.ring, varsigma);
  LinMap alpha = LinMap::zero(A, A);
  if (spec.ring.eq(varsigma, spec.ring.one())) {
    for (std::size_t i = 1; i <= 4; ++i)
      alpha = alpha + zm_block_map(spec, A, i, i, comp.diag[i - 1]);
  } else {
    for (std::size_t j = 1; j <= 4; ++j)
      alpha = alpha + zm_block_map(spec, A, 4, j, comp.from4[j - 1]);
  }
  return alpha;
}

Element zero_mult_w(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    const Scalar& varsigma, const std::vector<Scalar>& w1,
                    const std::vector<Scalar>& w2) {
  validate_varsigma(spec.ring, varsigma);
  Element w = zm_embed(spec, A, 1, w1) + zm_embed(spec, A, 2, w2);
  return varsigma * w;
}

LinMap zero_mult_deriv(const ZeroMultSpec& spec, const AlgebraPtr& A,
                       const Scalar& varsigma, const Scalar& mu,
                       const ZeroMultDeriv& dcomp, const ZeroMultEndo& acomp) {
  zm_check(spec, A);
  const ScalarRing& ring = spec.ring;
  validate_varsigma(ring, varsigma);
  validate_mu(ring, varsigma, mu);
  bool vs1 = ring.eq(varsigma, ring.one());

  LinMap delta = zm_block_map(spec, A, 2, 2, dcomp.diag[1]) +
                 zm_block_map(spec, A, 4, 4, dcomp.diag[3]);
  if (vs1) {
    delta = delta + zm_block_map(spec, A, 1, 1, dcomp.diag[0]) +
            zm_block_map(spec, A, 3, 3, dcomp.diag[2]);
  } else {
    delta = delta + zm_block_map(spec, A, 2, 3, dcomp.d23) +
            zm_block_map(spec, A, 4, 1, dcomp.d41);
  }
  if (!ring.is_zero(mu)) {
    LinMap mterm =
        zm_block_map(spec, A, 1, 1, Mat::identity(spec.dims[0])) +
        zm_block_map(spec, A, 3, 3, Mat::identity(spec.dims[2])) -
        zm_block_map(spec, A, 4, 2, acomp.from4[1]) -
        zm_block_map(spec, A, 4, 3, acomp.from4[2]);
    delta = delta + mu * mterm;
  }
  return delta;
}

Element zero_mult_e(const ZeroMultSpec& spec, const AlgebraPtr& A,
                    const Scalar& varsigma, const std::vector<Scalar>& e1,
                    const std::vector<Scalar>& e2,
                    const std::vector<Scalar>& e3) {
  const ScalarRing& ring = spec.ring;
  validate_varsigma(ring, varsigma);
  Scalar cvs = ring.sub(ring.one(), varsigma);
  return varsigma * zm_embed(spec, A, 1, e1) + zm_embed(spec, A, 2, e2) +
         cvs * zm_embed(spec, A, 3, e3);
}

bool ZeroMultAudit::ok() const {
  for (const auto& [name, r] : rows)
    if (!r) return false;
  return true;
}

ZeroMultAudit audit_zero_mult(const ZeroMultSpec& spec, const Scalar& varsigma,
                              int samples) {
  const ScalarRing& ring = spec.ring;
  validate_varsigma(ring, varsigma);
  bool vs1 = ring.eq(varsigma, ring.one());
  AlgebraPtr A = zero_mult_algebra(spec);
  DoubleOperator sigma = zero_mult_sigma(spec, A);
  HomotheticDatum datum = make_datum(sigma, Element::zero(A));
  std::mt19937_64 rng(0x7a65726f6dULL);

  auto rand_endo = [&]() {
    ZeroMultEndo c;
    for (std::size_t i = 0; i < 4; ++i) {
      c.diag[i] = random_mat(ring, spec.dims[i], spec.dims[i], rng);
      c.from4[i] = random_mat(ring, spec.dims[i], spec.dims[3], rng);
    }
    return c;
  };
  auto rand_deriv = [&]() {
    ZeroMultDeriv c;
    for (std::size_t i = 0; i < 4; ++i)
      c.diag[i] = random_mat(ring, spec.dims[i], spec.dims[i], rng);
    c.d23 = random_mat(ring, spec.dims[2], spec.dims[1], rng);
    c.d41 = random_mat(ring, spec.dims[0], spec.dims[3], rng);
    return c;
  };

  ZeroMultAudit audit;
  audit.rows.emplace_back("datum axioms", check_datum(sigma, Element::zero(A)));

  CheckResult alpha_ok = CheckResult::pass();
  for (int t = 0; t < samples && alpha_ok; ++t) {
    ZeroMultEndo ac = rand_endo();
    LinMap alpha = zero_mult_endo(spec, A, varsigma, ac);
    Element w = zero_mult_w(spec, A, varsigma,
                            random_vec(ring, spec.dims[0], rng),
                            random_vec(ring, spec.dims[1], rng));
    alpha_ok = check_endo_ext(datum, alpha, w, varsigma, true);
  }
  audit.rows.emplace_back("displayed alpha family admissible", alpha_ok);

  // a block the display keeps at zero; adding a unit there must leave the
  // w-system inconsistent
  std::vector<std::pair<std::size_t, std::size_t>> banned;
  if (vs1) {
    banned = {{1, 2}, {2, 1}, {1, 3}, {3, 1}, {1, 4},
              {4, 1}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 4}, {4, 3}};
  } else {
    banned = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2},
              {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {3, 4}};
  }
  CheckResult alpha_bad_ok = CheckResult::pass();
  bool perturbed = false;
  for (auto [i, j] : banned) {
    if (spec.dims[i - 1] == 0 || spec.dims[j - 1] == 0) continue;
    perturbed = true;
    Mat unit(spec.dims[j - 1], spec.dims[i - 1]);
    unit.at(0, 0) = Scalar(1);
    LinMap alpha = zero_mult_endo(spec, A, varsigma, rand_endo()) +
                   zm_block_map(spec, A, i, j, unit);
    auto sol = solve_endo_ext(datum, alpha, varsigma);
    if (sol.linear_part.consistent) {
      alpha_bad_ok = CheckResult::fail(
          Witness{"off-shape alpha admits some w", {i, j}, "consistent",
                  "inconsistent"});
      break;
    }
  }
  audit.rows.emplace_back(perturbed ? "off-shape alpha rejected"
                                    : "off-shape alpha rejected (no room)",
                          alpha_bad_ok);

  CheckResult delta_ok = CheckResult::pass();
  for (int t = 0; t < samples && delta_ok; ++t) {
    ZeroMultEndo ac = rand_endo();
    ZeroMultDeriv dc = rand_deriv();
    Scalar mu = vs1 ? ring.zero() : ring.sample(rng);
    LinMap alpha = zero_mult_endo(spec, A, varsigma, ac);
    Element w = zero_mult_w(spec, A, varsigma,
                            random_vec(ring, spec.dims[0], rng),
                            random_vec(ring, spec.dims[1], rng));
    LinMap delta = zero_mult_deriv(spec, A, varsigma, mu, dc, ac);
    Element e = zero_mult_e(spec, A, varsigma,
                            random_vec(ring, spec.dims[0], rng),
                            random_vec(ring, spec.dims[1], rng),
                            random_vec(ring, spec.dims[2], rng));
    delta_ok = check_deriv_ext(datum, alpha, delta, w, e, varsigma, mu, true);
  }
  audit.rows.emplace_back("displayed delta family extends", delta_ok);

  std::vector<std::pair<std::size_t, std::size_t>> dbanned = {
      {1, 2}, {2, 1}, {3, 4}, {1, 4}, {2, 4}, {3, 1}, {3, 2}};
  CheckResult delta_bad_ok = CheckResult::pass();
  bool dperturbed = false;
  for (auto [i, j] : dbanned) {
    if (spec.dims[i - 1] == 0 || spec.dims[j - 1] == 0) continue;
    dperturbed = true;
    Mat unit(spec.dims[j - 1], spec.dims[i - 1]);
    unit.at(0, 0) = Scalar(1);
    ZeroMultEndo ac = rand_endo();
    Scalar mu = vs1 ? ring.zero() : ring.sample(rng);
    LinMap alpha = zero_mult_endo(spec, A, varsigma, ac);
    Element w = zero_mult_w(spec, A, varsigma,
                            random_vec(ring, spec.dims[0], rng),
                            random_vec(ring, spec.dims[1], rng));
    LinMap delta = zero_mult_deriv(spec, A, varsigma, mu, rand_deriv(), ac) +
                   zm_block_map(spec, A, i, j, unit);
    auto sol = solve_deriv_ext_mu(datum, alpha, delta, w, varsigma, true);
    if (sol.consistent) {
      delta_bad_ok = CheckResult::fail(
          Witness{"off-shape delta admits some (e, mu)", {i, j}, "consistent",
                  "inconsistent"});
      break;
    }
  }
  audit.rows.emplace_back(dperturbed ? "off-shape delta rejected"
                                     : "off-shape delta rejected (no room)",
                          delta_bad_ok);
  return audit;
}

}  // namespace orehom
