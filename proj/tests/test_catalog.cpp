#include <doctest.h>

#include <random>
#include <vector>

#include "orehom/catalog.hpp"

using namespace orehom;

namespace {

std::vector<Scalar> zeros(std::size_t n) {
  return std::vector<Scalar>(n, Scalar(0));
}

// all (lower, upper) pairs of a family over F2 for daleth3, k = 2
std::vector<std::pair<Element, Scalar>> sweep_f2_n3(const AlgebraPtr& A,
                                                    int family) {
  std::vector<std::pair<Element, Scalar>> out;
  auto try_point = [&](std::vector<Scalar> lo, std::vector<Scalar> up) {
    try {
      out.push_back(theta_family(A, 2, family, lo, up));
    } catch (const Error&) {
    }
  };
  for (int mask = 0; mask < (1 << 5); ++mask) {
    std::vector<Scalar> lo = zeros(3), up = zeros(2);
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) lo[b] = Scalar(1);
    for (int b = 0; b < 2; ++b)
      if (mask & (1 << (3 + b))) up[b] = Scalar(1);
    try_point(lo, up);
  }
  // de-duplicate (different masks can collide only if invalid; keep order)
  return out;
}

}  // namespace

TEST_CASE("theta families over F2/daleth3 yield the expected points") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  HomotheticDatum datum = epsilon_datum(A, 2);
  LinMap zero = LinMap::zero(A, A);

  std::size_t counts[5] = {4, 2, 2, 2, 1};
  std::vector<Element> all;
  for (int family = 0; family <= 4; ++family) {
    CAPTURE(family);
    auto pts = sweep_f2_n3(A, family);
    CHECK(pts.size() == counts[family]);
    for (const auto& [w, vs] : pts) {
      CAPTURE(w.str());
      CHECK(F2.eq(vs, family == 0 ? F2.zero() : F2.one()));
      // every family point is admissible for alpha = 0
      CHECK(check_endo_ext(datum, zero, w, vs).ok);
      if (family > 0) {
        CHECK(daleth_cond(A, 2, w).ok);
        all.push_back(w);
      } else {
        CHECK(w * w == w);
      }
    }
  }
  // the varsigma = 1 points are pairwise distinct: 2+2+2+1 = 7
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      CHECK(!(all[i] == all[j]));
  CHECK(all.size() == 7);
}

TEST_CASE("family constructors validate forced coordinates") {
  ScalarRing F3 = ScalarRing::Fp(3);
  AlgebraPtr A = daleth(4, F3);

  // family 4 with the e_{1n} cross term dropped
  std::vector<Scalar> lo = zeros(4), up = zeros(3);
  lo[0] = Scalar(1);            // v_1 = 1
  up[2] = Scalar(1);            // v^4 = 1
  lo[2] = Scalar(1);            // v_3 = 1
  up[1] = Scalar(1);            // v^3 = 1
  // correct v_4 = -v_3 v^3 = 2; pass 0 instead
  try {
    (void)theta_family(A, 2, 4, lo, up);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadFamilyParams);
    CHECK(std::string(e.what()).find("cross terms") != std::string::npos);
  }
  lo[3] = F3.from_int(-1);
  auto [w, vs] = theta_family(A, 2, 4, lo, up);
  CHECK(F3.eq(vs, F3.one()));
  CHECK(daleth_cond(A, 2, w).ok);

  CHECK_THROWS_AS((void)theta_family(A, 2, 1, zeros(3), zeros(3)), Error);
  CHECK_THROWS_AS((void)theta_family(A, 2, 5, zeros(4), zeros(3)), Error);
  // family 2 rejects v_k != 0
  std::vector<Scalar> lo2 = zeros(4);
  lo2[0] = Scalar(1);
  lo2[1] = Scalar(1);  // v_2 = v_k
  CHECK_THROWS_AS((void)theta_family(A, 2, 2, lo2, zeros(3)), Error);
}

TEST_CASE("daleth_cond rejects off-family points") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  Element bad = Element::basis(A, 1) + Element::basis(A, 2);  // e12 + e13
  CheckResult r = daleth_cond(A, 2, bad);
  REQUIRE(!r.ok);
  CHECK(r.witness->identity.find("v_n") != std::string::npos);
}

TEST_CASE("rlin derivations are right-module endomorphisms, not all of them") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  LinMap rl = rlin_derivation(A, {Scalar(1), Scalar(0), Scalar(1)});
  for (std::size_t i = 0; i < A->dim; ++i)
    for (std::size_t j = 0; j < A->dim; ++j) {
      Element x = Element::basis(A, i), y = Element::basis(A, j);
      CHECK(rl(x * y) == rl(x) * y);
    }
  CHECK(is_skew_derivation(rl, LinMap::zero(A, A)).ok);

  auto endos = right_module_endos(A);
  for (const LinMap& f : endos)
    for (std::size_t i = 0; i < A->dim; ++i)
      for (std::size_t j = 0; j < A->dim; ++j) {
        Element x = Element::basis(A, i), y = Element::basis(A, j);
        CHECK(f(x * y) == f(x) * y);
      }

  RlinAudit audit = audit_rlin(A);
  CHECK(audit.endo_dim == endos.size());
  CHECK(audit.rlin_dim == 3);
  CHECK(audit.endo_dim > audit.rlin_dim);
  CHECK(!audit.complete);
  REQUIRE(audit.witness.has_value());
  const LinMap& wmap = *audit.witness;
  for (std::size_t i = 0; i < A->dim; ++i)
    for (std::size_t j = 0; j < A->dim; ++j) {
      Element x = Element::basis(A, i), y = Element::basis(A, j);
      CHECK(wmap(x * y) == wmap(x) * y);
    }
  CHECK_THROWS_AS((void)rlin_derivation(A, {Scalar(1)}), Error);
}

TEST_CASE("obstruction audits: the four theta^1 families") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  Scalar one = F2.one(), zero = F2.zero();

  // family 1, v = 1, gammas (0,1,0): e = -g_k v e_{1k} = e12
  ObstructionAudit a1 =
      audit_theta_obstruction(A, 2, 1, {one}, {}, {zero, one, zero});
  CHECK(a1.endo_admissible);
  CHECK(a1.predicted_solvable);
  CHECK(a1.solver_solvable);
  CHECK(a1.kernel_dim == 0);
  REQUIRE(a1.predicted_e.has_value());
  CHECK(*a1.predicted_e == Element::basis(A, 1));
  CHECK(a1.match());

  // family 2 printed shape keeps v_k free: obstruction g_k v_k = 0
  ObstructionAudit blocked =
      audit_theta_obstruction(A, 2, 2, {one, zero}, {}, {one, one, one});
  CHECK(!blocked.predicted_solvable);
  CHECK(!blocked.solver_solvable);
  CHECK(blocked.match());
  ObstructionAudit open =
      audit_theta_obstruction(A, 2, 2, {zero, one}, {}, {one, one, one});
  CHECK(open.predicted_solvable);
  CHECK(open.solver_solvable);
  CHECK(open.match());

  // family 3 printed shape: obstruction g_n v_n = 0 and g_n v^j = 0 (j != k);
  // v^k stays free and only shifts e = -g_n v^k e_{kn}
  ObstructionAudit f3 =
      audit_theta_obstruction(A, 2, 3, {one}, {zero}, {one, one, one});
  CHECK(!f3.predicted_solvable);
  CHECK(f3.match());
  ObstructionAudit f3open =
      audit_theta_obstruction(A, 2, 3, {zero}, {one}, {one, one, one});
  CHECK(f3open.predicted_solvable);
  REQUIRE(f3open.predicted_e.has_value());
  CHECK(*f3open.predicted_e == Element::basis(A, 3));  // e23 over F2
  CHECK(f3open.match());
}

TEST_CASE("family 4: printed shape extends, naive shape is obstructed") {
  ScalarRing F3 = ScalarRing::Fp(3);
  AlgebraPtr A = daleth(4, F3);
  Scalar one = F3.one();
  std::vector<Scalar> gam = {one, one, one, one};

  ObstructionAudit printed =
      audit_theta_obstruction(A, 2, 4, {one}, {one}, gam, false);
  CHECK(printed.predicted_solvable);
  CHECK(printed.solver_solvable);
  CHECK(printed.match());

  ObstructionAudit naive =
      audit_theta_obstruction(A, 2, 4, {one}, {one}, gam, true);
  CHECK(!naive.predicted_solvable);  // g_n v_j v^j = 1 != 0
  CHECK(!naive.solver_solvable);
  CHECK(naive.match());

  std::vector<Scalar> gam0 = {one, one, one, F3.zero()};
  ObstructionAudit naive_open =
      audit_theta_obstruction(A, 2, 4, {one}, {one}, gam0, true);
  CHECK(naive_open.predicted_solvable);
  CHECK(naive_open.match());
}

TEST_CASE("theta^0: the solver pattern is mu = g_k, e = -p g_1 e11 - q g_n enn") {
  ScalarRing F2 = ScalarRing::Fp(2);
  AlgebraPtr A = daleth(3, F2);
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q)
      for (int g = 0; g < 8; ++g) {
        std::vector<Scalar> gam = {F2.from_int(g & 1), F2.from_int((g >> 1) & 1),
                                   F2.from_int((g >> 2) & 1)};
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(g);
        Theta0Audit a =
            audit_theta0(A, 2, F2.from_int(p), F2.from_int(q), gam);
        CHECK(a.solvable);
        CHECK(a.kernel_dim == 0);
        CHECK(a.pattern_match);
        REQUIRE(a.mu.has_value());
        CHECK(F2.eq(*a.mu, gam[1]));
      }

  // the displayed-branch reading fails at p=1, q=0, gammas=(0,1,0): the
  // joint system forces mu = 1 while the branch formula pins mu = 0
  Theta0Audit cx = audit_theta0(A, 2, F2.one(), F2.zero(),
                                {F2.zero(), F2.one(), F2.zero()});
  CHECK(cx.solvable);
  REQUIRE(cx.mu.has_value());
  CHECK(F2.eq(*cx.mu, F2.one()));
  CHECK(!cx.displayed_ok);
  CHECK(!cx.claim_mu_zero_on_pq0);

  ScalarRing F3 = ScalarRing::Fp(3);
  AlgebraPtr A4 = daleth(4, F3);
  Theta0Audit b = audit_theta0(A4, 3, F3.one(), F3.one(),
                               {F3.from_int(2), F3.one(), F3.from_int(2),
                                F3.one()});
  CHECK(b.solvable);
  CHECK(b.pattern_match);
  REQUIRE(b.mu.has_value());
  CHECK(F3.eq(*b.mu, F3.from_int(2)));  // g_k with k = 3
}

TEST_CASE("zero-mult audits pass for both varsigma values") {
  for (const ScalarRing& ring : {ScalarRing::Fp(2), ScalarRing::Q()}) {
    for (auto dims : {std::array<std::size_t, 4>{1, 1, 1, 1},
                      std::array<std::size_t, 4>{2, 1, 1, 2}}) {
      ZeroMultSpec spec{ring, dims};
      for (int vs = 0; vs <= 1; ++vs) {
        CAPTURE(ring.name());
        CAPTURE(vs);
        ZeroMultAudit a = audit_zero_mult(spec, ring.from_int(vs), 10);
        for (const auto& [name, res] : a.rows) {
          CAPTURE(name);
          CHECK(res.ok);
        }
        CHECK(a.ok());
      }
    }
  }
}

TEST_CASE("every linear map on a zero-mult algebra is an endomorphism") {
  ScalarRing F2 = ScalarRing::Fp(2);
  ZeroMultSpec spec{F2, {1, 1, 1, 1}};
  AlgebraPtr A = zero_mult_algebra(spec);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Mat m(4, 4);
    for (auto& x : m.a) x = F2.sample(rng);
    CHECK(is_endomorphism(LinMap::from_matrix(A, A, m)).ok);
  }
}
