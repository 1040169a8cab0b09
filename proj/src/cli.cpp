#include "orehom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orehom/bridge.hpp"
#include "orehom/catalog.hpp"
#include "orehom/dsl.hpp"
#include "orehom/report.hpp"

namespace orehom {
namespace {

// Mathematical failures exit 1; everything else (syntax, lookup, caps,
// budgets, ring misuse) is an input error and exits 2.
int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::AssociativityViolation:
    case ErrorKind::NotHomothetism:
    case ErrorKind::CommutationFails:
    case ErrorKind::QuadraticFails:
    case ErrorKind::MuConstraintViolated:
    case ErrorKind::EndoPreconditionFailed:
    case ErrorKind::ConditionsFail:
    case ErrorKind::NotRestrictable:
    case ErrorKind::NonIdempotentVarsigma:
    case ErrorKind::ContextNotType1:
      return 1;
    default:
      return 2;
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += args[i];
  }
  return s;
}

std::string yn(bool v) { return v ? "yes" : "no"; }

Document load_doc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

ScalarRing field_ring(const std::string& t) {
  if (t == "Q") return ScalarRing::Q();
  if (t == "Z") return ScalarRing::Z();
  if (t.size() >= 2 && t[0] == 'F' &&
      t.find_first_not_of("0123456789", 1) == std::string::npos &&
      t.size() <= 19) {
    return ScalarRing::Fp(std::stoll(t.substr(1)));
  }
  fail(ErrorKind::BadScalar, "unknown scalar ring '" + t + "' (use Q, Z or F<p>)");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> items;
  if (text.empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    items.push_back(text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return items;
}

std::vector<Scalar> parse_csv(const ScalarRing& ring, const std::string& text) {
  std::vector<Scalar> out;
  for (const std::string& item : split_csv(text)) out.push_back(ring.parse(item));
  return out;
}

std::string render_csv(const ScalarRing& ring, const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += ring.to_string(v[i]);
  }
  return s;
}

std::array<std::size_t, 4> parse_dims(const std::string& text) {
  std::vector<std::string> items = split_csv(text);
  if (items.size() != 4)
    fail(ErrorKind::ParseError,
         "--dims expects four comma-separated block sizes, got '" + text + "'");
  std::array<std::size_t, 4> dims{};
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string& item = items[i];
    if (item.empty() || item.size() > 2 ||
        item.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::ParseError, "bad block size '" + item + "' in --dims");
    dims[i] = static_cast<std::size_t>(std::stoul(item));
    if (dims[i] == 0)
      fail(ErrorKind::ParseError, "block sizes in --dims must be positive");
  }
  return dims;
}

std::string linmap_rows(const LinMap& f) {
  const ScalarRing& ring = f.dom->ring;
  std::string s = "[";
  for (std::size_t r = 0; r < f.m.rows; ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < f.m.cols; ++c) {
      if (c) s += ' ';
      s += ring.to_string(f.m.at(r, c));
    }
  }
  return s + "]";
}

// Map references accept the builtins zero and id alongside document entries.
LinMap named_map(const Document& doc, const AlgebraPtr& A,
                 const std::string& name) {
  if (name == "zero") return LinMap::zero(A, A);
  if (name == "id") return LinMap::identity(A);
  const DslMap& m = doc.map(name);
  if (m.value.dom != A)
    fail(ErrorKind::AlgebraMismatch,
         "map '" + name + "' is defined on '" + m.on + "', not on the required algebra");
  return m.value;
}

struct Opts {
  bool json = false;
  std::size_t degree_cap = 6;
  std::uint64_t enum_cap = kEnumerationCap;

  std::string doc;
  std::string what;
  std::string name;
  std::string datum;
  std::string algebra;
  std::string alpha = "zero";
  std::string delta = "zero";
  std::string lhs, rhs;
  int varsigma = 1;
  bool with_mu = false;
  bool formal = false;

  std::size_t n = 3;
  std::size_t k = 2;
  std::string field = "F2";
  std::string dims = "1,1,1,1";
  int family = 1;
  bool naive4 = false;
  std::string lower, upper, gammas;
  std::string p = "1", q = "1";
  int samples = 25;
};

void need_flag(const std::string& value, const std::string& flag,
               const std::string& context) {
  if (value.empty())
    fail(ErrorKind::ParseError, context + " requires " + flag);
}

void do_check(const Opts& o, Report& rep) {
  Document doc = load_doc(o.doc);
  if (o.what == "datum") {
    need_flag(o.name, "--name", "check datum");
    const DslDatum& d = doc.datum(o.name);
    rep.value("datum", o.name);
    rep.check("datum axioms", check_datum(d.sigma, d.s));
    return;
  }
  if (o.what == "skew") {
    need_flag(o.algebra, "--algebra", "check skew");
    AlgebraPtr A = doc.algebra(o.algebra);
    LinMap alpha = named_map(doc, A, o.alpha);
    LinMap delta = named_map(doc, A, o.delta);
    rep.value("algebra", o.algebra);
    rep.value("alpha", o.alpha);
    rep.value("delta", o.delta);
    rep.check("alpha is an endomorphism", is_endomorphism(alpha));
    rep.check("delta is an alpha-skew derivation", is_skew_derivation(delta, alpha));
    return;
  }
  need_flag(o.name, "--name", "check " + o.what);
  Quintuple q = doc.quintuple(o.name).resolve();
  rep.value("quintuple", o.name);
  rep.check("alpha is an endomorphism", is_endomorphism(q.alpha));
  if (o.what == "endo") {
    rep.check("endo extension conditions (i)-(iii)",
              check_endo_ext(q.datum, q.alpha, q.w, q.varsigma, false));
    return;
  }
  rep.check("delta is an alpha-skew derivation",
            is_skew_derivation(q.delta, q.alpha));
  rep.check("endo extension conditions (i)-(iii)",
            check_endo_ext(q.datum, q.alpha, q.w, q.varsigma, false));
  rep.check("deriv extension conditions (a)-(c)",
            check_deriv_ext(q.datum, q.alpha, q.delta, q.w, q.e, q.varsigma,
                            q.mu, false));
}

void do_solve_w(const Opts& o, Report& rep) {
  Document doc = load_doc(o.doc);
  const DslDatum& d = doc.datum(o.datum);
  HomotheticDatum datum = make_datum(d.sigma, d.s);
  AlgebraPtr A = datum.algebra();
  LinMap alpha = named_map(doc, A, o.alpha);
  Scalar vs = A->ring.from_int(o.varsigma);
  WSolveResult res = solve_endo_ext(datum, alpha, vs, o.enum_cap);
  rep.value("datum", o.datum);
  rep.value("alpha", o.alpha);
  rep.value("varsigma", std::to_string(o.varsigma));
  if (res.kind == WSolveResult::Kind::Indeterminate) {
    rep.value("solutions", "indeterminate");
    rep.value("linear part consistent", yn(res.linear_part.consistent));
    rep.value("linear kernel dim",
              std::to_string(res.linear_part.kernel_dim()));
    return;
  }
  std::vector<std::string> points;
  points.reserve(res.points.size());
  for (const Element& w : res.points) points.push_back(w.str());
  std::sort(points.begin(), points.end());
  rep.value("solutions", std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    rep.value("w[" + std::to_string(i) + "]", points[i]);
}

void do_solve_e(const Opts& o, Report& rep) {
  Document doc = load_doc(o.doc);
  Quintuple q = doc.quintuple(o.name).resolve();
  const ScalarRing& ring = q.datum.algebra()->ring;
  rep.value("quintuple", o.name);
  if (o.with_mu) {
    AffineSolutionSet sol = solve_deriv_ext_mu(q.datum, q.alpha, q.delta, q.w,
                                               q.varsigma, !o.formal);
    rep.value("solvable", yn(sol.consistent));
    if (!sol.consistent) return;
    AlgebraPtr A = q.datum.algebra();
    std::vector<Scalar> ec(sol.particular.begin(),
                           sol.particular.begin() + A->dim);
    rep.value("e", Element::from(A, ec).str());
    rep.value("mu", ring.to_string(sol.particular[A->dim]));
    rep.value("kernel dim", std::to_string(sol.kernel.size()));
    for (std::size_t i = 0; i < sol.kernel.size(); ++i) {
      std::vector<Scalar> kc(sol.kernel[i].begin(),
                             sol.kernel[i].begin() + A->dim);
      rep.value("kernel[" + std::to_string(i) + "]",
                "e = " + Element::from(A, kc).str() +
                    ", mu = " + ring.to_string(sol.kernel[i][A->dim]));
    }
    return;
  }
  ESolveResult sol = solve_deriv_ext(q.datum, q.alpha, q.delta, q.w,
                                     q.varsigma, q.mu, !o.formal);
  rep.value("mu", ring.to_string(q.mu));
  rep.value("solvable", yn(sol.solvable));
  if (!sol.solvable) return;
  rep.value("e", sol.particular.str());
  rep.value("kernel dim", std::to_string(sol.kernel.size()));
  for (std::size_t i = 0; i < sol.kernel.size(); ++i)
    rep.value("kernel[" + std::to_string(i) + "]", sol.kernel[i].str());
}

void do_extend(const Opts& o, Report& rep) {
  Document doc = load_doc(o.doc);
  Quintuple q = doc.quintuple(o.name).resolve();
  HomotheticExtension E = make_extension(q.datum);
  AlgebraPtr S = as_algebra(E);
  LinMap aS = extend_endo(E, S, q.alpha, q.w, q.varsigma);
  LinMap dS = extend_deriv(E, S, q);
  rep.value("quintuple", o.name);
  rep.value("extension dim", std::to_string(S->dim));
  for (std::size_t i = 0; i < S->dim; ++i)
    rep.value("alpha_S(" + S->basis[i] + ")",
              aS(Element::basis(S, i)).str());
  for (std::size_t i = 0; i < S->dim; ++i)
    rep.value("delta_S(" + S->basis[i] + ")",
              dS(Element::basis(S, i)).str());
}

void do_ore_mul(const Opts& o, Report& rep) {
  Document doc = load_doc(o.doc);
  const DslOrePoly& P = doc.orepoly(o.lhs);
  const DslOrePoly& Q = doc.orepoly(o.rhs);
  OrePoly prod = ore_mul(P.value, Q.value);
  rep.value("lhs", ore_str(P.value));
  rep.value("rhs", ore_str(Q.value));
  rep.value("product", ore_str(prod));
  rep.value("degree", std::to_string(prod.deg()));
}

void do_bridge(const Opts& o, Report& rep, bool probe) {
  Document doc = load_doc(o.doc);
  Quintuple q = doc.quintuple(o.name).resolve();
  BridgeContext ctx = make_bridge_context(q, o.degree_cap);
  rep.value("quintuple", o.name);
  rep.value("degree cap", std::to_string(o.degree_cap));
  DiagramReport dr = probe ? probe_type0(ctx) : verify_diagram(ctx);
  for (const auto& [name, res] : dr.rows) rep.check(name, res);
}

int do_example(const Opts& o, std::ostream& out) {
  ScalarRing ring = field_ring(o.field);
  Document doc;
  if (o.what == "daleth") {
    AlgebraPtr A = daleth(o.n, ring);
    DoubleOperator eps = epsilon(A, o.k);
    std::string stem = "eps" + std::to_string(o.k);
    doc.entries.push_back({A->label, A});
    doc.entries.push_back({stem + "_left", DslMap{A->label, eps.left}});
    doc.entries.push_back({stem + "_right", DslMap{A->label, eps.right}});
    doc.entries.push_back(
        {stem, DslDop{A->label, stem + "_left", stem + "_right", eps}});
    doc.entries.push_back(
        {stem + "_datum", DslDatum{stem, eps, Element::zero(A)}});
  } else {
    ZeroMultSpec spec{ring, parse_dims(o.dims)};
    AlgebraPtr A = zero_mult_algebra(spec);
    DoubleOperator sigma = zero_mult_sigma(spec, A);
    doc.entries.push_back({A->label, A});
    doc.entries.push_back({"sigma_left", DslMap{A->label, sigma.left}});
    doc.entries.push_back({"sigma_right", DslMap{A->label, sigma.right}});
    doc.entries.push_back(
        {"sigma", DslDop{A->label, "sigma_left", "sigma_right", sigma}});
    doc.entries.push_back(
        {"sigma_datum", DslDatum{"sigma", sigma, Element::zero(A)}});
  }
  out << serialize_document(doc);
  return 0;
}

// All-ones defaults of the right arity for each family's free parameters.
std::pair<std::vector<Scalar>, std::vector<Scalar>> default_family_params(
    const ScalarRing& ring, int family, std::size_t n, std::size_t k) {
  std::size_t lo = 0, up = 0;
  switch (family) {
    case 1: lo = 1; break;
    case 2: lo = n - 1; break;
    case 3: lo = 1; up = n - 2; break;
    case 4: lo = n >= 3 ? n - 3 : 0; up = lo; break;
    default: fail(ErrorKind::BadFamilyParams, "family must be 1..4");
  }
  (void)k;
  return {std::vector<Scalar>(lo, ring.one()),
          std::vector<Scalar>(up, ring.one())};
}

void audit_family_cmd(const Opts& o, Report& rep) {
  ScalarRing ring = field_ring(o.field);
  AlgebraPtr A = daleth(o.n, ring);
  auto lower = parse_csv(ring, o.lower);
  auto upper = parse_csv(ring, o.upper);
  if (o.lower.empty() && o.upper.empty()) {
    auto defaults = default_family_params(ring, o.family, o.n, o.k);
    lower = defaults.first;
    upper = defaults.second;
  }
  std::vector<Scalar> gammas = parse_csv(ring, o.gammas);
  if (gammas.empty()) gammas.assign(o.n, ring.one());
  ObstructionAudit a = audit_theta_obstruction(A, o.k, o.family, lower, upper,
                                               gammas, o.naive4);
  rep.value("family", std::to_string(o.family));
  if (o.family == 4)
    rep.value("shape", o.naive4 ? "naive (cross terms dropped)" : "displayed");
  rep.value("gammas", render_csv(ring, gammas));
  rep.value("w", a.w.str());
  rep.value("alpha = 0 admissible (solver)", yn(a.endo_admissible));
  rep.value("expected (reference formula) solvable", yn(a.predicted_solvable));
  rep.value("computed (solver) solvable", yn(a.solver_solvable));
  rep.value("expected (reference formula) e",
            a.predicted_e ? a.predicted_e->str() : "n/a");
  rep.value("computed (solver) e",
            a.solver_e ? a.solver_e->str() : "none");
  rep.value("kernel dim", std::to_string(a.kernel_dim));
  if (a.match()) {
    rep.check("computed (solver) agrees with expected (reference formula)",
              CheckResult::pass());
  } else {
    Witness w;
    w.identity = "solver outcome vs reference formula";
    w.lhs = "solver: solvable = " + yn(a.solver_solvable) +
            (a.solver_e ? ", e = " + a.solver_e->str() : "") +
            ", kernel dim = " + std::to_string(a.kernel_dim);
    w.rhs = "reference: solvable = " + yn(a.predicted_solvable) +
            (a.predicted_e ? ", e = " + a.predicted_e->str() : "");
    rep.check("computed (solver) agrees with expected (reference formula)",
              CheckResult::fail(std::move(w)));
  }
}

void audit_theta0_cmd(const Opts& o, Report& rep) {
  ScalarRing ring = field_ring(o.field);
  AlgebraPtr A = daleth(o.n, ring);
  Scalar p = ring.parse(o.p);
  Scalar q = ring.parse(o.q);
  std::vector<Scalar> gammas = parse_csv(ring, o.gammas);
  if (gammas.empty()) gammas.assign(o.n, ring.one());
  Theta0Audit a = audit_theta0(A, o.k, p, q, gammas);
  rep.value("p", ring.to_string(p));
  rep.value("q", ring.to_string(q));
  rep.value("gammas", render_csv(ring, gammas));
  rep.value("w", a.w.str());
  rep.value("computed (solver) solvable", yn(a.solvable));
  rep.value("kernel dim", std::to_string(a.kernel_dim));
  rep.value("computed (solver) mu",
            a.mu ? ring.to_string(*a.mu) : "n/a");
  rep.value("computed (solver) e", a.e ? a.e->str() : "n/a");
  rep.value("expected (reference formula) mu", ring.to_string(a.displayed_mu));
  rep.value("expected (reference formula) e", a.displayed_e.str());

  HomotheticDatum datum = epsilon_datum(A, o.k);
  LinMap zero = LinMap::zero(A, A);
  LinMap rl = rlin_derivation(A, gammas);
  rep.check("expected (reference formula) branch extends",
            check_deriv_ext(datum, zero, rl, a.w, a.displayed_e, ring.zero(),
                            a.displayed_mu, false));
  if (a.claim_mu_zero_on_pq0) {
    rep.check("mu = 0 whenever pq = 0 (reference claim)", CheckResult::pass());
  } else {
    Witness w;
    w.identity = "mu = 0 whenever pq = 0";
    w.lhs = "solver mu = " + (a.mu ? ring.to_string(*a.mu) : std::string("n/a"));
    w.rhs = "0";
    rep.check("mu = 0 whenever pq = 0 (reference claim)",
              CheckResult::fail(std::move(w)));
  }
  if (a.pattern_match) {
    rep.check("computed (solver) matches mu = g_k, e = -p g_1 e11 - q g_n enn",
              CheckResult::pass());
  } else {
    Witness w;
    w.identity = "solver outcome vs closed-form pattern";
    w.lhs = "solver: mu = " + (a.mu ? ring.to_string(*a.mu) : std::string("n/a")) +
            ", e = " + (a.e ? a.e->str() : std::string("n/a")) +
            ", kernel dim = " + std::to_string(a.kernel_dim);
    w.rhs = "pattern: mu = " + ring.to_string(a.pattern_mu) +
            ", e = " + a.pattern_e.str();
    rep.check("computed (solver) matches mu = g_k, e = -p g_1 e11 - q g_n enn",
              CheckResult::fail(std::move(w)));
  }
}

void audit_rlin_cmd(const Opts& o, Report& rep) {
  ScalarRing ring = field_ring(o.field);
  AlgebraPtr A = daleth(o.n, ring);
  RlinAudit a = audit_rlin(A);
  rep.value("computed (solver) right-module endomorphism dim",
            std::to_string(a.endo_dim));
  rep.value("expected (reference formula) family dim",
            std::to_string(a.rlin_dim));
  if (a.complete) {
    rep.check("reference family spans all right-module endomorphisms",
              CheckResult::pass());
  } else {
    Witness w;
    w.identity = "right-module endomorphism inside the reference family";
    w.lhs = a.witness ? linmap_rows(*a.witness) : std::string("n/a");
    w.rhs = "no combination of the reference family";
    rep.check("reference family spans all right-module endomorphisms",
              CheckResult::fail(std::move(w)));
  }
}

void audit_zeromult_cmd(const Opts& o, Report& rep) {
  ScalarRing ring = field_ring(o.field);
  ZeroMultSpec spec{ring, parse_dims(o.dims)};
  ZeroMultAudit a = audit_zero_mult(spec, ring.from_int(o.varsigma), o.samples);
  rep.value("dims", o.dims);
  rep.value("varsigma", std::to_string(o.varsigma));
  rep.value("samples", std::to_string(o.samples));
  for (const auto& [name, res] : a.rows) rep.check(name, res);
}

void audit_idempotents_cmd(const Opts& o, Report& rep) {
  ScalarRing ring = field_ring(o.field);
  if (ring.kind != RingKind::PrimeField)
    fail(ErrorKind::NotAField,
         "audit idempotents enumerates solutions over a prime field; got " +
             ring.name());
  AlgebraPtr A = daleth(o.n, ring);
  HomotheticDatum datum = epsilon_datum(A, o.k);
  WSolveResult res =
      solve_endo_ext(datum, LinMap::zero(A, A), ring.zero(), o.enum_cap);
  Element e11 = Element::basis(A, daleth_idx1(o.n, 1));
  Element enn = Element::basis(A, daleth_idxn(o.n, o.n));
  std::vector<Element> family;
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q)
      family.push_back(ring.from_int(p) * e11 + ring.from_int(q) * enn);
  rep.value("computed (solver) count", std::to_string(res.points.size()));
  rep.value("expected (reference formula) count",
            std::to_string(family.size()));
  std::vector<std::string> points;
  for (const Element& w : res.points) points.push_back(w.str());
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    rep.value("w[" + std::to_string(i) + "]", points[i]);

  CheckResult contained = CheckResult::pass();
  for (const Element& f : family) {
    if (std::find(res.points.begin(), res.points.end(), f) ==
        res.points.end()) {
      contained = CheckResult::fail(
          {"reference point produced by the solver", {}, f.str(),
           "absent from the solver set"});
      break;
    }
  }
  rep.check("reference family is contained in the solver set", contained);

  CheckResult exhausts = CheckResult::pass();
  for (const Element& w : res.points) {
    if (std::find(family.begin(), family.end(), w) == family.end()) {
      exhausts = CheckResult::fail(
          {"solver point lies in the reference family", {}, w.str(),
           "p e11 + q enn with p, q in {0, 1}"});
      break;
    }
  }
  rep.check("reference family exhausts the solver set", exhausts);
}

void do_audit(const Opts& o, Report& rep) {
  if (o.what == "family") return audit_family_cmd(o, rep);
  if (o.what == "theta0") return audit_theta0_cmd(o, rep);
  if (o.what == "rlin") return audit_rlin_cmd(o, rep);
  if (o.what == "zeromult") return audit_zeromult_cmd(o, rep);
  audit_idempotents_cmd(o, rep);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  Opts o;
  CLI::App app{"exact computer algebra for homothetic extensions, extended "
               "skew derivations and Ore polynomials",
               "orehom"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit the report as JSON (schema 1)");
    sub->add_option("--degree-cap", o.degree_cap,
                    "degree bound for diagram verification (default 6)");
    sub->add_option("--enum-cap", o.enum_cap,
                    "enumeration budget for affine solution sets");
  };

  CLI::App* c_check =
      app.add_subcommand("check", "run axiom and extension-condition checkers");
  c_check->add_option("what", o.what, "datum|endo|deriv|skew")
      ->required()
      ->check(CLI::IsMember({"datum", "endo", "deriv", "skew"}));
  c_check->add_option("--doc", o.doc, "document file")->required();
  c_check->add_option("--name", o.name, "datum/quintuple entry to check");
  c_check->add_option("--algebra", o.algebra, "algebra entry (skew only)");
  c_check->add_option("--alpha", o.alpha, "map entry or zero|id (skew only)");
  c_check->add_option("--delta", o.delta, "map entry or zero|id (skew only)");
  add_common(c_check);

  CLI::App* c_solve_w = app.add_subcommand(
      "solve-w", "solve the endomorphism extension conditions for w");
  c_solve_w->add_option("--doc", o.doc, "document file")->required();
  c_solve_w->add_option("--datum", o.datum, "datum entry")->required();
  c_solve_w->add_option("--alpha", o.alpha, "map entry or zero|id");
  c_solve_w->add_option("--varsigma", o.varsigma, "0 or 1")
      ->required()
      ->check(CLI::Range(0, 1));
  add_common(c_solve_w);

  CLI::App* c_solve_e = app.add_subcommand(
      "solve-e", "solve the derivation extension conditions for e");
  c_solve_e->add_option("--doc", o.doc, "document file")->required();
  c_solve_e->add_option("--name", o.name, "quintuple entry")->required();
  c_solve_e->add_flag("--with-mu", o.with_mu, "treat mu as a joint unknown");
  c_solve_e->add_flag("--formal", o.formal,
                      "skip the endomorphism/skew preconditions");
  add_common(c_solve_e);

  CLI::App* c_extend = app.add_subcommand(
      "extend", "materialize alpha_S and delta_S on the extension");
  c_extend->add_option("--doc", o.doc, "document file")->required();
  c_extend->add_option("--name", o.name, "quintuple entry")->required();
  add_common(c_extend);

  CLI::App* c_ore_mul =
      app.add_subcommand("ore-mul", "multiply two Ore polynomials");
  c_ore_mul->add_option("--doc", o.doc, "document file")->required();
  c_ore_mul->add_option("--lhs", o.lhs, "orepoly entry")->required();
  c_ore_mul->add_option("--rhs", o.rhs, "orepoly entry")->required();
  add_common(c_ore_mul);

  CLI::App* c_bridge = app.add_subcommand(
      "bridge-verify", "verify the embedding diagram up to the degree cap");
  c_bridge->add_option("--doc", o.doc, "document file")->required();
  c_bridge->add_option("--name", o.name, "quintuple entry")->required();
  add_common(c_bridge);

  CLI::App* c_probe = app.add_subcommand(
      "probe-type0", "inspect the varsigma = 0 substitution map");
  c_probe->add_option("--doc", o.doc, "document file")->required();
  c_probe->add_option("--name", o.name, "quintuple entry")->required();
  add_common(c_probe);

  CLI::App* c_example =
      app.add_subcommand("example", "emit a catalog example as a document");
  c_example->add_option("what", o.what, "daleth|zeromult")
      ->required()
      ->check(CLI::IsMember({"daleth", "zeromult"}));
  c_example->add_option("--n", o.n, "daleth size (default 3)");
  c_example->add_option("--k", o.k, "epsilon index, 2..n-1 (default 2)");
  c_example->add_option("--field", o.field, "Q, Z or F<p> (default F2)");
  c_example->add_option("--dims", o.dims,
                        "zeromult block sizes (default 1,1,1,1)");
  add_common(c_example);

  CLI::App* c_audit = app.add_subcommand(
      "audit", "compare reference formulas against the solvers");
  c_audit->add_option("what", o.what,
                      "family|theta0|rlin|zeromult|idempotents")
      ->required()
      ->check(CLI::IsMember(
          {"family", "theta0", "rlin", "zeromult", "idempotents"}));
  c_audit->add_option("--n", o.n, "daleth size (default 3)");
  c_audit->add_option("--k", o.k, "epsilon index (default 2)");
  c_audit->add_option("--field", o.field, "Q, Z or F<p> (default F2)");
  c_audit->add_option("--family", o.family, "theta family 1..4")
      ->check(CLI::Range(1, 4));
  c_audit->add_flag("--naive4", o.naive4,
                    "drop the family-4 e_{1n} cross terms");
  c_audit->add_option("--lower", o.lower, "free e_{1i} parameters (csv)");
  c_audit->add_option("--upper", o.upper, "free e_{jn} parameters (csv)");
  c_audit->add_option("--gammas", o.gammas,
                      "right-linear derivation coefficients (csv, default all 1)");
  c_audit->add_option("--p", o.p, "theta0 coefficient of e11 (default 1)");
  c_audit->add_option("--q", o.q, "theta0 coefficient of enn (default 1)");
  c_audit->add_option("--dims", o.dims,
                      "zeromult block sizes (default 1,1,1,1)");
  c_audit->add_option("--varsigma", o.varsigma, "0 or 1 (default 1)")
      ->check(CLI::Range(0, 1));
  c_audit->add_option("--samples", o.samples,
                      "random samples per zeromult row (default 25)")
      ->check(CLI::Range(1, 10000));
  add_common(c_audit);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "usage error: " << e.what() << "\n";
    return 2;
  }

  Report rep;
  rep.command = join_args(args);
  auto emit = [&]() { out << (o.json ? rep.json() : rep.text()); };

  try {
    if (app.got_subcommand(c_example)) return do_example(o, out);
    if (app.got_subcommand(c_check)) do_check(o, rep);
    else if (app.got_subcommand(c_solve_w)) do_solve_w(o, rep);
    else if (app.got_subcommand(c_solve_e)) do_solve_e(o, rep);
    else if (app.got_subcommand(c_extend)) do_extend(o, rep);
    else if (app.got_subcommand(c_ore_mul)) do_ore_mul(o, rep);
    else if (app.got_subcommand(c_bridge)) do_bridge(o, rep, false);
    else if (app.got_subcommand(c_probe)) do_bridge(o, rep, true);
    else if (app.got_subcommand(c_audit)) do_audit(o, rep);
  } catch (const Error& e) {
    rep.error = e.what();
    rep.exit_code = exit_for(e.kind());
    emit();
    return rep.exit_code;
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.exit_code = 2;
    emit();
    return 2;
  }

  rep.exit_code = rep.all_pass() ? 0 : 1;
  emit();
  return rep.exit_code;
}

}  // namespace orehom
