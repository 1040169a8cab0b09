#include "orehom/bridge.hpp"

#include <random>

namespace orehom {

ScalarPoly scalar_poly_canon(const ScalarRing& ring, ScalarPoly f) {
  for (auto& c : f) c = ring.canon(c);
  while (!f.empty() && ring.is_zero(f.back())) f.pop_back();
  return f;
}

ScalarPoly scalar_poly_add(const ScalarRing& ring, const ScalarPoly& f,
                           const ScalarPoly& g) {
  ScalarPoly out(std::max(f.size(), g.size()), Scalar(0));
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = ring.add(out[i], g[i]);
  return scalar_poly_canon(ring, std::move(out));
}

ScalarPoly scalar_poly_mul(const ScalarRing& ring, const ScalarPoly& f,
                           const ScalarPoly& g) {
  if (f.empty() || g.empty()) return {};
  ScalarPoly out(f.size() + g.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = ring.add(out[i + j], ring.mul(f[i], g[j]));
  return scalar_poly_canon(ring, std::move(out));
}

bool scalar_poly_eq(const ScalarRing& ring, const ScalarPoly& f,
                    const ScalarPoly& g) {
  ScalarPoly a = scalar_poly_canon(ring, f), b = scalar_poly_canon(ring, g);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ring.eq(a[i], b[i])) return false;
  return true;
}

std::string scalar_poly_str(const ScalarRing& ring, const ScalarPoly& f) {
  ScalarPoly a = scalar_poly_canon(ring, f);
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (ring.is_zero(a[i])) continue;
    if (!out.empty()) out += " + ";
    out += ring.to_string(a[i]);
    if (i == 1)
      out += "*x";
    else if (i > 1)
      out += "*x^" + std::to_string(i);
  }
  return out;
}

bool BridgeContext::type1() const {
  return R()->ring.eq(q.varsigma, Scalar(1));
}

namespace {

void require_type1(const BridgeContext& ctx, const char* op) {
  if (!ctx.type1())
    fail(ErrorKind::ContextNotType1,
         std::string(op) + " requires a type-1 (varsigma = 1) context");
}

}  // namespace

BridgeContext make_bridge_context(const Quintuple& q, std::size_t D) {
  CheckResult r = check_deriv_ext(q.datum, q.alpha, q.delta, q.w, q.e,
                                  q.varsigma, q.mu, true);
  if (!r)
    fail(ErrorKind::ConditionsFail,
         "quintuple fails the extension conditions: " + r.witness->render());
  if (2 * D + 2 > kDegreeCap)
    fail(ErrorKind::DegreeCapExceeded,
         "verification degree " + std::to_string(D) + " needs headroom 2D+2");
  HomotheticExtension E = make_extension(q.datum);
  AlgebraPtr S = as_algebra(E);
  LinMap alphaS = extend_endo(E, S, q.alpha, q.w, q.varsigma);
  LinMap deltaS = extend_deriv(E, S, q);
  AlgebraPtr R = E.base();

  std::vector<Element> icols, pcols;
  for (std::size_t i = 0; i < R->dim; ++i)
    icols.push_back(ext_to_coords(E, S, iota(E, Element::basis(R, i))));
  LinMap iota_map = LinMap::from_columns(R, icols);
  for (std::size_t i = 0; i < S->dim; ++i)
    pcols.push_back(coords_to_ext(E, Element::basis(S, i)).a);
  LinMap p_map = LinMap::from_columns(S, pcols);

  Element sigma_el = Element::basis(S, R->dim);
  std::size_t cap = 2 * D + 2;
  OreRingPtr OR = make_ore_ring(R, q.alpha, q.delta, cap);
  OreRingPtr OS = make_ore_ring(S, alphaS, deltaS, cap);
  return {q,       E,  S,  std::move(alphaS), std::move(deltaS),
          std::move(iota_map), std::move(p_map), std::move(sigma_el),
          std::move(OR), std::move(OS), D};
}

OrePoly iota_prime(const BridgeContext& ctx, const OrePoly& p) {
  require_type1(ctx, "iota_prime");
  return ore_map_coeffs(ctx.OS, p, ctx.iota_map);
}

ScalarPoly pi_prime(const BridgeContext& ctx, const OrePoly& P) {
  require_type1(ctx, "pi_prime");
  const ScalarRing& ring = ctx.S->ring;
  ScalarPoly f;
  for (const Element& c : P.coeff) f.push_back(c.c[ctx.R()->dim]);
  return scalar_poly_canon(ring, std::move(f));
}

OrePoly p_split(const BridgeContext& ctx, const OrePoly& P) {
  return ore_map_coeffs(ctx.OR, P, ctx.p_map);
}

OrePoly j_split(const BridgeContext& ctx, const ScalarPoly& f) {
  std::vector<Element> coeff;
  for (const Scalar& z : f) coeff.push_back(z * ctx.sigma_el);
  return ore_from_coeffs(ctx.OS, std::move(coeff));
}

namespace {

OrePoly sigma0(const BridgeContext& ctx) {
  return ore_monomial(ctx.OS, ctx.sigma_el, 0);
}

OrePoly lift(const BridgeContext& ctx, const OrePoly& p) {
  return ore_map_coeffs(ctx.OS, p, ctx.iota_map);
}

}  // namespace

OrePoly sigma_tilde_left(const BridgeContext& ctx, const OrePoly& p) {
  require_type1(ctx, "sigma_tilde_left");
  return p_split(ctx, ore_mul(sigma0(ctx), lift(ctx, p)));
}

OrePoly sigma_tilde_right(const BridgeContext& ctx, const OrePoly& p) {
  require_type1(ctx, "sigma_tilde_right");
  return p_split(ctx, ore_mul(lift(ctx, p), sigma0(ctx)));
}

Element gamma_bar(const BridgeContext& ctx, std::size_t n, std::size_t i) {
  require_type1(ctx, "gamma_bar");
  if (i > n)
    fail(ErrorKind::IndexOutOfRange,
         "gamma_bar(" + std::to_string(n) + ", " + std::to_string(i) + ")");
  return ctx.p_map(ctx.OS->gamma(n, i)(ctx.sigma_el));
}

OreHomElement orehom_from(const BridgeContext& ctx, OrePoly p, Scalar xi) {
  if (p.ring != ctx.OR)
    fail(ErrorKind::RingMismatch, "polynomial part must live over R");
  return {std::move(p), ctx.R()->ring.canon(xi)};
}

OreHomElement orehom_add(const BridgeContext& ctx, const OreHomElement& u,
                         const OreHomElement& v) {
  return {ore_add(u.poly, v.poly), ctx.R()->ring.add(u.xi, v.xi)};
}

OreHomElement orehom_mul(const BridgeContext& ctx, const OreHomElement& u,
                         const OreHomElement& v) {
  require_type1(ctx, "orehom_mul");
  const ScalarRing& ring = ctx.R()->ring;
  OrePoly prod = ore_mul(u.poly, v.poly);
  prod = ore_add(prod, ore_scale(v.xi, sigma_tilde_right(ctx, u.poly)));
  prod = ore_add(prod, ore_scale(u.xi, sigma_tilde_left(ctx, v.poly)));
  Scalar xixi = ring.mul(u.xi, v.xi);
  prod = ore_add(prod,
                 ore_scale(xixi, ore_monomial(ctx.OR, ctx.q.datum.s, 0)));
  return {std::move(prod), std::move(xixi)};
}

bool orehom_eq(const BridgeContext& ctx, const OreHomElement& u,
               const OreHomElement& v) {
  return ore_eq(u.poly, v.poly) && ctx.R()->ring.eq(u.xi, v.xi);
}

std::string orehom_str(const BridgeContext& ctx, const OreHomElement& u) {
  const ScalarRing& ring = ctx.R()->ring;
  if (ring.is_zero(u.xi)) return ore_str(u.poly);
  std::string sig = ring.to_string(u.xi) + "*@sigma";
  if (u.poly.is_zero()) return sig;
  return ore_str(u.poly) + " + " + sig;
}

OrePoly phi(const BridgeContext& ctx, const OreHomElement& u) {
  require_type1(ctx, "phi");
  OrePoly out = iota_prime(ctx, u.poly);
  return ore_add(out,
                 ore_monomial(ctx.OS, u.xi * ctx.sigma_el, 0));
}

bool DiagramReport::ok() const {
  for (const auto& [name, r] : rows)
    if (!r.ok) return false;
  return true;
}

namespace {

Element sample_element(const AlgebraPtr& A, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < A->dim; ++i) c.push_back(A->ring.sample(rng));
  return Element::from(A, std::move(c));
}

OrePoly sample_poly(const OreRingPtr& ring, std::size_t maxdeg,
                    std::mt19937_64& rng) {
  std::size_t n = static_cast<std::size_t>(rng() % (maxdeg + 1));
  std::vector<Element> coeff;
  for (std::size_t i = 0; i <= n; ++i)
    coeff.push_back(sample_element(ring->alg, rng));
  return ore_from_coeffs(ring, std::move(coeff));
}

CheckResult poly_expect(const char* identity, std::vector<std::size_t> idx,
                        const OrePoly& lhs, const OrePoly& rhs) {
  if (ore_eq(lhs, rhs)) return CheckResult::pass();
  return CheckResult::fail(
      {identity, std::move(idx), ore_str(lhs), ore_str(rhs)});
}

}  // namespace

DiagramReport verify_diagram(const BridgeContext& ctx) {
  require_type1(ctx, "verify_diagram");
  DiagramReport rep;
  AlgebraPtr R = ctx.R();
  const ScalarRing& ring = R->ring;
  std::size_t d = R->dim, D = ctx.D;
  auto add = [&](std::string name, CheckResult r) {
    rep.rows.emplace_back(std::move(name), std::move(r));
  };
  auto mono = [&](std::size_t j, std::size_t n) {
    return ore_monomial(ctx.OR, Element::basis(R, j), n);
  };
  const DoubleOperator& sg = ctx.q.datum.sigma;
  OrePoly s0 = ore_monomial(ctx.OR, ctx.q.datum.s, 0);
  OrePoly w0 = ore_monomial(ctx.OR, ctx.q.w, 0);
  OrePoly e0 = ore_monomial(ctx.OR, ctx.q.e, 0);

  // sigma~ restricted to degree-0 polynomials is sigma
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t j = 0; j < d && r.ok; ++j) {
      OrePoly a = mono(j, 0);
      r = poly_expect("sigma~ a = sigma a on R", {j + 1},
                      sigma_tilde_left(ctx, a),
                      ore_monomial(ctx.OR, sg.right(Element::basis(R, j)), 0));
      if (r.ok)
        r = poly_expect("a sigma~ = a sigma on R", {j + 1},
                        sigma_tilde_right(ctx, a),
                        ore_monomial(ctx.OR, sg.left(Element::basis(R, j)), 0));
    }
    add("sigma~ restricts to sigma", r);
  }
  // datum identities on monomials (degree-sum bounded by D, hence exact)
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t j = 0; j < d && r.ok; ++j)
      for (std::size_t m = 0; m <= D && r.ok; ++m) {
        OrePoly u = mono(j, m);
        OrePoly ul = sigma_tilde_left(ctx, u);
        OrePoly ur = sigma_tilde_right(ctx, u);
        r = poly_expect("(sigma~ u)sigma~ = sigma~(u sigma~)",
                        {j + 1, m}, sigma_tilde_right(ctx, ul),
                        sigma_tilde_left(ctx, ur));
        if (r.ok)
          r = poly_expect("(u sigma~)sigma~ = u sigma~ + u s", {j + 1, m},
                          sigma_tilde_right(ctx, ur),
                          ore_add(ur, ore_mul(u, s0)));
        if (r.ok)
          r = poly_expect("sigma~(sigma~ u) = sigma~ u + s u", {j + 1, m},
                          sigma_tilde_left(ctx, ul),
                          ore_add(ul, ore_mul(s0, u)));
        for (std::size_t k = 0; k < d && r.ok; ++k)
          for (std::size_t n = 0; m + n <= D && r.ok; ++n) {
            OrePoly v = mono(k, n);
            OrePoly uv = ore_mul(u, v);
            r = poly_expect("sigma~(uv) = (sigma~ u)v", {j + 1, m, k + 1, n},
                            sigma_tilde_left(ctx, uv), ore_mul(ul, v));
            if (r.ok)
              r = poly_expect("(uv)sigma~ = u(v sigma~)",
                              {j + 1, m, k + 1, n},
                              sigma_tilde_right(ctx, uv),
                              ore_mul(u, sigma_tilde_right(ctx, v)));
            if (r.ok)
              r = poly_expect("u(sigma~ v) = (u sigma~)v",
                              {j + 1, m, k + 1, n},
                              ore_mul(u, sigma_tilde_left(ctx, v)),
                              ore_mul(ur, v));
          }
      }
    if (r.ok)
      r = poly_expect("sigma~ s = s sigma~", {}, sigma_tilde_left(ctx, s0),
                      sigma_tilde_right(ctx, s0));
    add("(sigma~, s) datum identities", r);
  }
  // top row: 0 -> R[x] -> R[x](sigma~, s) -> F -> 0
  {
    CheckResult r = CheckResult::pass();
    std::mt19937_64 rng(0x746f70726f77ULL);
    for (int t = 0; t < 50 && r.ok; ++t) {
      OrePoly p = sample_poly(ctx.OR, D / 2, rng);
      OrePoly q = sample_poly(ctx.OR, D / 2, rng);
      OreHomElement ip = orehom_from(ctx, p, Scalar(0));
      OreHomElement iq = orehom_from(ctx, q, Scalar(0));
      OreHomElement prod = orehom_mul(ctx, ip, iq);
      if (!orehom_eq(ctx, prod, orehom_from(ctx, ore_mul(p, q), Scalar(0))))
        r = CheckResult::fail({"iota~ multiplicative", {std::size_t(t)},
                               orehom_str(ctx, prod), ore_str(ore_mul(p, q))});
      if (r.ok && !ring.is_zero(prod.xi))
        r = CheckResult::fail({"pi~(iota~ p iota~ q) = 0", {std::size_t(t)},
                               ring.to_string(prod.xi), "0"});
    }
    for (int t = 0; t < 50 && r.ok; ++t) {
      OreHomElement u = orehom_from(ctx, sample_poly(ctx.OR, 2, rng),
                                    ring.sample(rng));
      OreHomElement v = orehom_from(ctx, sample_poly(ctx.OR, 2, rng),
                                    ring.sample(rng));
      OreHomElement w = orehom_from(ctx, sample_poly(ctx.OR, 2, rng),
                                    ring.sample(rng));
      OreHomElement lhs = orehom_mul(ctx, orehom_mul(ctx, u, v), w);
      OreHomElement rhs = orehom_mul(ctx, u, orehom_mul(ctx, v, w));
      if (!orehom_eq(ctx, lhs, rhs))
        r = CheckResult::fail({"(uv)w = u(vw) in R[x](sigma~, s)",
                               {std::size_t(t)}, orehom_str(ctx, lhs),
                               orehom_str(ctx, rhs)});
      if (r.ok && !ring.eq(ring.mul(ring.mul(u.xi, v.xi), w.xi), lhs.xi))
        r = CheckResult::fail({"pi~ multiplicative", {std::size_t(t)},
                               ring.to_string(lhs.xi), "xi eta zeta"});
    }
    add("top row exact", r);
  }
  // bottom row: 0 -> R[x] -> S[x] -> F[x] -> 0
  {
    CheckResult r = CheckResult::pass();
    std::mt19937_64 rng(0x626f74726f77ULL);
    for (std::size_t j = 0; j < d && r.ok; ++j)
      for (std::size_t n = 0; n <= D && r.ok; ++n) {
        OrePoly a = mono(j, n);
        OrePoly ia = iota_prime(ctx, a);
        r = poly_expect("p(iota'(a)) = a", {j + 1, n}, p_split(ctx, ia), a);
        if (r.ok && !pi_prime(ctx, ia).empty())
          r = CheckResult::fail({"pi'(iota'(a)) = 0", {j + 1, n},
                                 scalar_poly_str(ring, pi_prime(ctx, ia)),
                                 "0"});
      }
    for (int t = 0; t < 100 && r.ok; ++t) {
      OrePoly p = sample_poly(ctx.OR, D / 2, rng);
      OrePoly q = sample_poly(ctx.OR, D / 2, rng);
      r = poly_expect("iota'(pq) = iota'(p)iota'(q)", {std::size_t(t)},
                      iota_prime(ctx, ore_mul(p, q)),
                      ore_mul(iota_prime(ctx, p), iota_prime(ctx, q)));
    }
    for (int t = 0; t < 100 && r.ok; ++t) {
      OrePoly P = sample_poly(ctx.OS, D / 2, rng);
      OrePoly Q = sample_poly(ctx.OS, D / 2, rng);
      ScalarPoly lhs = pi_prime(ctx, ore_mul(P, Q));
      ScalarPoly rhs =
          scalar_poly_mul(ring, pi_prime(ctx, P), pi_prime(ctx, Q));
      if (!scalar_poly_eq(ring, lhs, rhs))
        r = CheckResult::fail({"pi'(PQ) = pi'(P)pi'(Q)", {std::size_t(t)},
                               scalar_poly_str(ring, lhs),
                               scalar_poly_str(ring, rhs)});
      // splitting identity: iota'(p(P)) + j(pi'(P)) = P
      if (r.ok) {
        OrePoly recon = ore_add(iota_prime(ctx, p_split(ctx, P)),
                                j_split(ctx, pi_prime(ctx, P)));
        r = poly_expect("iota'p + j pi' = id", {std::size_t(t)}, recon, P);
      }
      // surjectivity: pi'(j(f)) = f
      if (r.ok) {
        ScalarPoly f = pi_prime(ctx, P);
        if (!scalar_poly_eq(ring, pi_prime(ctx, j_split(ctx, f)), f))
          r = CheckResult::fail({"pi'(j(f)) = f", {std::size_t(t)},
                                 scalar_poly_str(
                                     ring, pi_prime(ctx, j_split(ctx, f))),
                                 scalar_poly_str(ring, f)});
      }
    }
    add("bottom row exact", r);
  }
  // squares commute (phi iota~ = iota', pi' phi = incl pi~)
  {
    CheckResult r = CheckResult::pass();
    std::mt19937_64 rng(0x73717561726573ULL);
    for (std::size_t j = 0; j < d && r.ok; ++j)
      for (std::size_t n = 0; n <= D && r.ok; ++n) {
        OrePoly a = mono(j, n);
        r = poly_expect("phi(iota~(a)) = iota'(a)", {j + 1, n},
                        phi(ctx, orehom_from(ctx, a, Scalar(0))),
                        iota_prime(ctx, a));
      }
    for (int t = 0; t < 50 && r.ok; ++t) {
      OreHomElement u = orehom_from(ctx, sample_poly(ctx.OR, D, rng),
                                    ring.sample(rng));
      ScalarPoly lhs = pi_prime(ctx, phi(ctx, u));
      ScalarPoly rhs = scalar_poly_canon(ring, {u.xi});
      if (!scalar_poly_eq(ring, lhs, rhs))
        r = CheckResult::fail({"pi'(phi(u)) = incl(pi~(u))", {std::size_t(t)},
                               scalar_poly_str(ring, lhs),
                               scalar_poly_str(ring, rhs)});
    }
    add("squares commute", r);
  }
  // phi injective on the degree-D truncation
  {
    std::size_t cols = d * (D + 1) + 1;
    std::size_t rows = ctx.S->dim * (D + 1);
    Mat M(rows, cols);
    auto put_poly = [&](std::size_t col, const OrePoly& P) {
      for (std::size_t n = 0; n < P.coeff.size(); ++n)
        for (std::size_t k = 0; k < ctx.S->dim; ++k)
          M.at(n * ctx.S->dim + k, col) = P.coeff[n].c[k];
    };
    std::size_t col = 0;
    for (std::size_t n = 0; n <= D; ++n)
      for (std::size_t j = 0; j < d; ++j)
        put_poly(col++, phi(ctx, orehom_from(ctx, mono(j, n), Scalar(0))));
    put_poly(col++, phi(ctx, orehom_from(ctx, ore_zero(ctx.OR), Scalar(1))));
    std::size_t rk = rank(ring, M);
    add("phi injective",
        rk == cols ? CheckResult::pass()
                   : CheckResult::fail({"rank of phi on truncation", {},
                                        std::to_string(rk),
                                        std::to_string(cols)}));
  }
  // phi multiplicative on sampled pairs
  {
    CheckResult r = CheckResult::pass();
    std::mt19937_64 rng(0x7068696d756c74ULL);
    for (int t = 0; t < 200 && r.ok; ++t) {
      OreHomElement u = orehom_from(ctx, sample_poly(ctx.OR, D / 2, rng),
                                    ring.sample(rng));
      OreHomElement v = orehom_from(ctx, sample_poly(ctx.OR, D / 2, rng),
                                    ring.sample(rng));
      r = poly_expect("phi(uv) = phi(u)phi(v)", {std::size_t(t)},
                      phi(ctx, orehom_mul(ctx, u, v)),
                      ore_mul(phi(ctx, u), phi(ctx, v)));
    }
    add("phi multiplicative", r);
  }
  // uniqueness: the recursion x sigma~ = (w + sigma~)x + e pins sigma~
  {
    CheckResult r = CheckResult::pass();
    for (std::size_t j = 0; j < d && r.ok; ++j) {
      OrePoly u = mono(j, 0);
      OrePoly rec_left =
          ore_monomial(ctx.OR, sg.right(Element::basis(R, j)), 0);
      OrePoly rec_right =
          ore_monomial(ctx.OR, sg.left(Element::basis(R, j)), 0);
      for (std::size_t n = 0; n <= D && r.ok; ++n) {
        r = poly_expect("recursion = sigma~ (left)", {j + 1, n}, rec_left,
                        sigma_tilde_left(ctx, u));
        if (r.ok)
          r = poly_expect("recursion = sigma~ (right)", {j + 1, n}, rec_right,
                          sigma_tilde_right(ctx, u));
        if (!r.ok || n == D) break;
        rec_right = ore_add(x_right(ore_add(ore_mul(u, w0), rec_right)),
                            ore_mul(u, e0));
        rec_left = x_right(rec_left);
        u = x_right(u);
      }
    }
    add("uniqueness: recursion", r);
  }
  // uniqueness: commutation of @sigma past x^n via gamma_bar
  {
    CheckResult r = CheckResult::pass();
    std::size_t N = std::min<std::size_t>(D, 5);
    for (std::size_t n = 1; n <= N && r.ok; ++n) {
      std::vector<Element> gb;
      for (std::size_t i = 0; i <= n; ++i) gb.push_back(gamma_bar(ctx, n, i));
      for (std::size_t j = 0; j < d && r.ok; ++j) {
        Element a = Element::basis(R, j);
        OrePoly rhs = ore_monomial(ctx.OR, sg.left(a), n);
        for (std::size_t i = 0; i <= n; ++i)
          rhs = ore_add(rhs, ore_monomial(ctx.OR, a * gb[i], i));
        r = poly_expect("(a x^n)sigma~ = (a sigma)x^n + sum a gbar^n_i x^i",
                        {j + 1, n}, sigma_tilde_right(ctx, mono(j, n)), rhs);
      }
      for (std::size_t j = 0; j < ctx.S->dim && r.ok; ++j) {
        Element u = Element::basis(ctx.S, j);
        OrePoly lhs =
            ore_mul(ore_monomial(ctx.OS, u, n), sigma0(ctx));
        OrePoly rhs = ore_monomial(ctx.OS, u * ctx.sigma_el, n);
        for (std::size_t i = 0; i <= n; ++i)
          rhs = ore_add(rhs,
                        ore_monomial(ctx.OS, u * ctx.iota_map(gb[i]), i));
        r = poly_expect("(u x^n)sigma = (u sigma)x^n + sum u gbar^n_i x^i",
                        {j + 1, n}, lhs, rhs);
      }
    }
    add("uniqueness: commutation rule", r);
  }
  return rep;
}

DiagramReport probe_type0(const BridgeContext& ctx) {
  const ScalarRing& ring = ctx.R()->ring;
  if (!ring.is_zero(ctx.q.varsigma))
    fail(ErrorKind::BadVarsigma, "probe_type0 requires varsigma = 0");
  DiagramReport rep;
  Scalar mu = ring.canon(ctx.q.mu);
  std::size_t d = ctx.R()->dim;

  // pi'0(sum (a_n + z_n sigma)x^n) = sum z_n mu^n, a constant
  auto pi0 = [&](const OrePoly& P) {
    Scalar acc(0);
    Scalar mupow(1);
    for (std::size_t n = 0; n < P.coeff.size(); ++n) {
      acc = ring.add(acc, ring.mul(P.coeff[n].c[d], mupow));
      mupow = ring.mul(mupow, mu);
    }
    return scalar_poly_canon(ring, {acc});
  };
  auto add = [&](std::string name, CheckResult r) {
    rep.rows.emplace_back(std::move(name), std::move(r));
  };

  // pi'0(sigma x^n) = mu^n: everything lands in scalars, so x is unattained
  {
    CheckResult r = CheckResult::pass();
    Scalar mupow(1);
    for (std::size_t n = 0; n <= ctx.D && r.ok; ++n) {
      ScalarPoly f = pi0(ore_monomial(ctx.OS, ctx.sigma_el, n));
      ScalarPoly want = scalar_poly_canon(ring, {mupow});
      if (!scalar_poly_eq(ring, f, want))
        r = CheckResult::fail({"pi'0(sigma x^n) = mu^n", {n},
                               scalar_poly_str(ring, f),
                               scalar_poly_str(ring, want)});
      mupow = ring.mul(mupow, mu);
    }
    add("pi'0 not surjective: image in scalars, x unattained", r);
  }
  // still an algebra map
  {
    CheckResult r = CheckResult::pass();
    std::mt19937_64 rng(0x747970653070ULL);
    for (int t = 0; t < 100 && r.ok; ++t) {
      OrePoly P = sample_poly(ctx.OS, ctx.D / 2, rng);
      OrePoly Q = sample_poly(ctx.OS, ctx.D / 2, rng);
      ScalarPoly lhs = pi0(ore_mul(P, Q));
      ScalarPoly rhs = scalar_poly_mul(ring, pi0(P), pi0(Q));
      if (!scalar_poly_eq(ring, lhs, rhs))
        r = CheckResult::fail({"pi'0(PQ) = pi'0(P)pi'0(Q)", {std::size_t(t)},
                               scalar_poly_str(ring, lhs),
                               scalar_poly_str(ring, rhs)});
    }
    add("pi'0 multiplicative", r);
  }
  // kernel element outside the image of iota'
  {
    OrePoly witness =
        ore_sub(ore_monomial(ctx.OS, ctx.sigma_el, 1),
                ore_scale(mu, ore_monomial(ctx.OS, ctx.sigma_el, 0)));
    bool in_kernel = pi0(witness).empty();
    bool sigma_free = true;
    for (const Element& c : witness.coeff)
      if (!ring.is_zero(c.c[d])) sigma_free = false;
    add("kernel witness outside im iota'",
        (in_kernel && !sigma_free)
            ? CheckResult::pass()
            : CheckResult::fail({"sigma x - mu sigma in ker pi'0 \\ im iota'",
                                 {}, ore_str(witness), "kernel witness"}));
  }
  return rep;
}

}  // namespace orehom
