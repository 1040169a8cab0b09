#include "orehom/dsl.hpp"

#include <map>
#include <sstream>
#include <tuple>
#include <utility>

namespace orehom {

namespace {

struct Token {
  std::string text;
  std::size_t col;  // 1-based
};

struct Line {
  std::size_t no = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::size_t line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string raw = text.substr(
        pos, eol == std::string::npos ? std::string::npos : eol - pos);
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    Line line;
    line.no = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r')
        ++i;
      line.tokens.push_back(Token{raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

[[noreturn]] void perr(std::size_t line, std::size_t col,
                       const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", col " +
                                  std::to_string(col) + ": " + msg);
}

struct Cursor {
  const Line& line;
  std::size_t idx = 0;

  explicit Cursor(const Line& l) : line(l) {}

  bool done() const { return idx >= line.tokens.size(); }
  std::size_t end_col() const {
    if (line.tokens.empty()) return 1;
    const Token& t = line.tokens.back();
    return t.col + t.text.size();
  }
  const Token& take(const std::string& expected) {
    if (done()) perr(line.no, end_col(), "expected " + expected +
                                             ", got end of line");
    return line.tokens[idx++];
  }
  void expect(const std::string& literal) {
    const Token& t = take("'" + literal + "'");
    if (t.text != literal)
      perr(line.no, t.col, "expected '" + literal + "', got '" + t.text + "'");
  }
  std::size_t take_uint(const std::string& expected) {
    const Token& t = take(expected);
    if (t.text.empty() || t.text.size() > 9 ||
        t.text.find_first_not_of("0123456789") != std::string::npos)
      perr(line.no, t.col, "expected " + expected + ", got '" + t.text + "'");
    return static_cast<std::size_t>(std::stoull(t.text));
  }
  Scalar take_value(const ScalarRing& ring) {
    const Token& t = take("a value");
    try {
      return ring.parse(t.text);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line.no) + ", col " +
                                std::to_string(t.col) + ": bad value '" +
                                t.text + "' for " + ring.name());
    }
  }
  void finish() {
    if (!done())
      perr(line.no, line.tokens[idx].col,
           "expected end of line, got '" + line.tokens[idx].text + "'");
  }
};

ScalarRing parse_ring(const Line& line, const Token& t) {
  if (t.text == "Q") return ScalarRing::Q();
  if (t.text == "Z") return ScalarRing::Z();
  if (t.text.size() > 1 && t.text[0] == 'F' &&
      t.text.find_first_not_of("0123456789", 1) == std::string::npos) {
    try {
      return ScalarRing::Fp(std::stoll(t.text.substr(1)));
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line.no) + ", col " +
                                std::to_string(t.col) + ": " + t.text +
                                " is not a valid field token");
    }
  }
  perr(line.no, t.col, "expected Q, F<p> or Z, got '" + t.text + "'");
}

std::string ring_token(const ScalarRing& ring) {
  switch (ring.kind) {
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(ring.p);
    case RingKind::Integers:
      return "Z";
  }
  return "Q";
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  Document run() {
    while (li_ < lines_.size()) {
      Cursor cur(lines_[li_]);
      const Token& kw = cur.take("a definition keyword");
      if (kw.text == "algebra")
        parse_algebra(cur);
      else if (kw.text == "map")
        parse_map(cur);
      else if (kw.text == "dop")
        parse_dop(cur);
      else if (kw.text == "datum")
        parse_datum(cur);
      else if (kw.text == "quintuple")
        parse_quintuple(cur);
      else if (kw.text == "orepoly")
        parse_orepoly(cur);
      else
        perr(lines_[li_].no, kw.col,
             "expected algebra/map/dop/datum/quintuple/orepoly, got '" +
                 kw.text + "'");
    }
    return std::move(doc_);
  }

 private:
  std::vector<Line> lines_;
  std::size_t li_ = 0;
  Document doc_;
  std::map<std::tuple<std::string, std::string, std::string>, OreRingPtr>
      ore_rings_;

  std::string take_fresh_name(Cursor& cur) {
    const Token& t = cur.take("a name");
    if (doc_.find(t.text))
      perr(cur.line.no, t.col, "duplicate name '" + t.text + "'");
    return t.text;
  }

  struct Ref {
    const DocEntry* entry;
    std::size_t col;
  };

  Ref resolve(Cursor& cur, const std::string& what) {
    const Token& t = cur.take(what + " name");
    const DocEntry* e = doc_.find(t.text);
    if (!e)
      fail(ErrorKind::UnresolvedName,
           "line " + std::to_string(cur.line.no) + ", col " +
               std::to_string(t.col) + ": no definition named '" + t.text +
               "'");
    return Ref{e, t.col};
  }

  template <typename T>
  Ref resolve_kind(Cursor& cur, const std::string& what) {
    Ref r = resolve(cur, what);
    if (!std::holds_alternative<T>(r.entry->body))
      perr(cur.line.no, r.col, "'" + r.entry->name + "' is not " + what);
    return r;
  }

  AlgebraPtr resolve_algebra(Cursor& cur) {
    Ref r = resolve_kind<AlgebraPtr>(cur, "an algebra");
    return std::get<AlgebraPtr>(r.entry->body);
  }

  Ref resolve_map_ref(Cursor& cur, const std::string& on) {
    Ref r = resolve_kind<DslMap>(cur, "a map");
    const DslMap& m = std::get<DslMap>(r.entry->body);
    if (m.on != on)
      perr(cur.line.no, r.col,
           "map '" + r.entry->name + "' is on '" + m.on + "', not '" + on +
               "'");
    return r;
  }

  const Line& next_body_line(const std::string& expected) {
    ++li_;
    if (li_ >= lines_.size()) {
      const Line& last = lines_.back();
      perr(last.no + 1, 1, "expected " + expected + ", got end of input");
    }
    return lines_[li_];
  }

  void parse_algebra(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("field");
    const Token& rt = cur.take("a field token");
    ScalarRing ring = parse_ring(cur.line, rt);
    cur.expect("dim");
    std::size_t dim = cur.take_uint("a dimension");
    if (dim == 0) perr(cur.line.no, cur.end_col(), "dim must be positive");
    std::vector<std::string> basis;
    if (!cur.done()) {
      cur.expect("basis");
      for (std::size_t i = 0; i < dim; ++i)
        basis.push_back(cur.take("a basis label").text);
      cur.finish();
    }

    std::vector<Scalar> sc(dim * dim * dim, Scalar(0));
    std::vector<bool> seen(dim * dim * dim, false);
    for (;;) {
      const Line& line = next_body_line("'sc' or 'end'");
      Cursor body(line);
      const Token& kw = body.take("'sc' or 'end'");
      if (kw.text == "end") {
        body.finish();
        ++li_;
        break;
      }
      if (kw.text != "sc")
        perr(line.no, kw.col, "expected 'sc' or 'end', got '" + kw.text + "'");
      std::size_t i = body.take_uint("a row index");
      std::size_t j = body.take_uint("a column index");
      std::size_t k = body.take_uint("a target index");
      if (i < 1 || i > dim || j < 1 || j > dim || k < 1 || k > dim)
        perr(line.no, kw.col,
             "sc indices must lie in 1.." + std::to_string(dim));
      Scalar v = body.take_value(ring);
      body.finish();
      std::size_t at = ((i - 1) * dim + (j - 1)) * dim + (k - 1);
      if (seen[at])
        perr(line.no, kw.col, "duplicate sc entry " + std::to_string(i) + " " +
                                  std::to_string(j) + " " + std::to_string(k));
      seen[at] = true;
      sc[at] = std::move(v);
    }
    doc_.entries.push_back(DocEntry{
        name, make_algebra(ring, dim, std::move(sc), std::move(basis), name)});
  }

  void parse_map(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("on");
    AlgebraPtr alg = resolve_algebra(cur);
    cur.finish();
    std::size_t d = alg->dim;
    Mat m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const Line& line = next_body_line("a matrix row");
      Cursor body(line);
      if (!body.done() && body.line.tokens[0].text == "end")
        perr(line.no, body.line.tokens[0].col,
             "expected " + std::to_string(d) + " matrix rows, got 'end' after " +
                 std::to_string(r));
      for (std::size_t c = 0; c < d; ++c)
        m.at(r, c) = body.take_value(alg->ring);
      body.finish();
    }
    const Line& endl = next_body_line("'end'");
    Cursor body(endl);
    body.expect("end");
    body.finish();
    ++li_;
    doc_.entries.push_back(
        DocEntry{name, DslMap{alg->label, LinMap::from_matrix(alg, alg, m)}});
  }

  void parse_dop(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("on");
    AlgebraPtr alg = resolve_algebra(cur);
    std::string on = alg->label;
    cur.expect("left");
    Ref lr = resolve_map_ref(cur, on);
    cur.expect("right");
    Ref rr = resolve_map_ref(cur, on);
    cur.finish();
    ++li_;
    LinMap left = std::get<DslMap>(lr.entry->body).value;
    LinMap right = std::get<DslMap>(rr.entry->body).value;
    doc_.entries.push_back(
        DocEntry{name, DslDop{on, lr.entry->name, rr.entry->name,
                              make_double_operator(left, right)}});
  }

  void parse_datum(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("dop");
    Ref dr = resolve_kind<DslDop>(cur, "a dop");
    const DslDop& dop = std::get<DslDop>(dr.entry->body);
    AlgebraPtr alg = dop.value.algebra();
    cur.expect("s");
    Element s = take_element(cur, alg);
    cur.finish();
    ++li_;
    doc_.entries.push_back(
        DocEntry{name, DslDatum{dr.entry->name, dop.value, std::move(s)}});
  }

  void parse_quintuple(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("datum");
    Ref dr = resolve_kind<DslDatum>(cur, "a datum");
    const DslDatum& datum = std::get<DslDatum>(dr.entry->body);
    AlgebraPtr alg = datum.sigma.algebra();
    std::string on = alg->label;
    cur.expect("alpha");
    Ref ar = resolve_map_ref(cur, on);
    cur.expect("delta");
    Ref er = resolve_map_ref(cur, on);
    cur.expect("w");
    Element w = take_element(cur, alg);
    cur.expect("e");
    Element e = take_element(cur, alg);
    cur.expect("varsigma");
    const Token& vt = cur.take("0 or 1");
    if (vt.text != "0" && vt.text != "1")
      perr(cur.line.no, vt.col, "expected 0 or 1, got '" + vt.text + "'");
    Scalar varsigma = alg->ring.from_int(vt.text == "1" ? 1 : 0);
    cur.expect("mu");
    Scalar mu = cur.take_value(alg->ring);
    cur.finish();
    ++li_;
    doc_.entries.push_back(DocEntry{
        name,
        DslQuintuple{dr.entry->name, ar.entry->name, er.entry->name,
                     datum.sigma, datum.s,
                     std::get<DslMap>(ar.entry->body).value,
                     std::get<DslMap>(er.entry->body).value, std::move(w),
                     std::move(e), std::move(varsigma), std::move(mu)}});
  }

  void parse_orepoly(Cursor& cur) {
    std::string name = take_fresh_name(cur);
    cur.expect("on");
    AlgebraPtr alg = resolve_algebra(cur);
    std::string on = alg->label;
    cur.expect("alpha");
    Ref ar = resolve_map_ref(cur, on);
    cur.expect("delta");
    Ref er = resolve_map_ref(cur, on);
    cur.expect("coeffs");
    cur.expect("[");
    std::vector<Element> coeff;
    if (!cur.done() && cur.line.tokens[cur.idx].text != "]") {
      for (;;) {
        coeff.push_back(take_element(cur, alg));
        const Token& sep = cur.take("';' or ']'");
        if (sep.text == "]") break;
        if (sep.text != ";")
          perr(cur.line.no, sep.col,
               "expected ';' or ']', got '" + sep.text + "'");
      }
    } else {
      cur.expect("]");
    }
    cur.finish();
    ++li_;
    auto key = std::make_tuple(on, ar.entry->name, er.entry->name);
    auto it = ore_rings_.find(key);
    OreRingPtr ring;
    if (it != ore_rings_.end()) {
      ring = it->second;
    } else {
      ring = make_ore_ring(alg, std::get<DslMap>(ar.entry->body).value,
                           std::get<DslMap>(er.entry->body).value);
      ore_rings_.emplace(key, ring);
    }
    doc_.entries.push_back(
        DocEntry{name, DslOrePoly{on, ar.entry->name, er.entry->name, ring,
                                  ore_from_coeffs(ring, std::move(coeff))}});
  }

  Element take_element(Cursor& cur, const AlgebraPtr& alg) {
    std::vector<Scalar> c(alg->dim);
    for (std::size_t i = 0; i < alg->dim; ++i)
      c[i] = cur.take_value(alg->ring);
    return Element::from(alg, std::move(c));
  }
};

void put_element(std::ostringstream& out, const ScalarRing& ring,
                 const std::vector<Scalar>& c) {
  for (const auto& v : c) out << " " << ring.to_string(v);
}

}  // namespace

Quintuple DslQuintuple::resolve() const {
  return Quintuple{make_datum(sigma, s), alpha_map, delta_map, w, e, varsigma,
                   mu};
}

const DocEntry* Document::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const DocEntry& Document::need(const std::string& name) const {
  const DocEntry* e = find(name);
  if (!e) fail(ErrorKind::UnresolvedName, "no definition named '" + name + "'");
  return *e;
}

AlgebraPtr Document::algebra(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<AlgebraPtr>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not an algebra");
}

const DslMap& Document::map(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<DslMap>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not a map");
}

const DslDop& Document::dop(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<DslDop>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not a dop");
}

const DslDatum& Document::datum(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<DslDatum>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not a datum");
}

const DslQuintuple& Document::quintuple(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<DslQuintuple>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not a quintuple");
}

const DslOrePoly& Document::orepoly(const std::string& name) const {
  const DocEntry& e = need(name);
  if (const auto* p = std::get_if<DslOrePoly>(&e.body)) return *p;
  fail(ErrorKind::UnresolvedName, "'" + name + "' is not an orepoly");
}

Document parse_document(const std::string& text) {
  return Parser(text).run();
}

std::string serialize_document(const Document& doc) {
  std::ostringstream out;
  for (const auto& entry : doc.entries) {
    if (const auto* alg = std::get_if<AlgebraPtr>(&entry.body)) {
      const Algebra& a = **alg;
      out << "algebra " << entry.name << " field " << ring_token(a.ring)
          << " dim " << a.dim << " basis";
      for (const auto& b : a.basis) out << " " << b;
      out << "\n";
      for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
          for (std::size_t k = 0; k < a.dim; ++k)
            if (!a.ring.is_zero(a.c(i, j, k)))
              out << "sc " << i + 1 << " " << j + 1 << " " << k + 1 << " "
                  << a.ring.to_string(a.c(i, j, k)) << "\n";
      out << "end\n";
    } else if (const auto* m = std::get_if<DslMap>(&entry.body)) {
      out << "map " << entry.name << " on " << m->on << "\n";
      const ScalarRing& ring = m->value.dom->ring;
      for (std::size_t r = 0; r < m->value.m.rows; ++r) {
        for (std::size_t c = 0; c < m->value.m.cols; ++c)
          out << (c ? " " : "") << ring.to_string(m->value.m.at(r, c));
        out << "\n";
      }
      out << "end\n";
    } else if (const auto* d = std::get_if<DslDop>(&entry.body)) {
      out << "dop " << entry.name << " on " << d->on << " left " << d->left
          << " right " << d->right << "\n";
    } else if (const auto* dat = std::get_if<DslDatum>(&entry.body)) {
      out << "datum " << entry.name << " dop " << dat->dop << " s";
      put_element(out, dat->s.alg->ring, dat->s.c);
      out << "\n";
    } else if (const auto* q = std::get_if<DslQuintuple>(&entry.body)) {
      const ScalarRing& ring = q->s.alg->ring;
      out << "quintuple " << entry.name << " datum " << q->datum << " alpha "
          << q->alpha << " delta " << q->delta << " w";
      put_element(out, ring, q->w.c);
      out << " e";
      put_element(out, ring, q->e.c);
      out << " varsigma " << ring.to_string(q->varsigma) << " mu "
          << ring.to_string(q->mu) << "\n";
    } else if (const auto* p = std::get_if<DslOrePoly>(&entry.body)) {
      const ScalarRing& ring = p->ring->alg->ring;
      out << "orepoly " << entry.name << " on " << p->on << " alpha "
          << p->alpha << " delta " << p->delta << " coeffs [";
      for (std::size_t i = 0; i < p->value.coeff.size(); ++i) {
        if (i) out << " ;";
        put_element(out, ring, p->value.coeff[i].c);
      }
      out << " ]\n";
    }
  }
  return out.str();
}

namespace {

bool alg_eq(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || a->same_content(*b);
}

bool linmap_eq_struct(const LinMap& f, const LinMap& g) {
  return alg_eq(f.dom, g.dom) && alg_eq(f.cod, g.cod) && f.m == g.m;
}

bool elem_eq_struct(const Element& x, const Element& y) {
  return alg_eq(x.alg, y.alg) && x.c == y.c;
}

}  // namespace

bool doc_eq(const Document& a, const Document& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const DocEntry& x = a.entries[i];
    const DocEntry& y = b.entries[i];
    if (x.name != y.name || x.body.index() != y.body.index()) return false;
    if (const auto* xa = std::get_if<AlgebraPtr>(&x.body)) {
      if (!alg_eq(*xa, std::get<AlgebraPtr>(y.body))) return false;
    } else if (const auto* xm = std::get_if<DslMap>(&x.body)) {
      const auto& ym = std::get<DslMap>(y.body);
      if (xm->on != ym.on || !linmap_eq_struct(xm->value, ym.value))
        return false;
    } else if (const auto* xd = std::get_if<DslDop>(&x.body)) {
      const auto& yd = std::get<DslDop>(y.body);
      if (xd->on != yd.on || xd->left != yd.left || xd->right != yd.right ||
          !linmap_eq_struct(xd->value.left, yd.value.left) ||
          !linmap_eq_struct(xd->value.right, yd.value.right))
        return false;
    } else if (const auto* xt = std::get_if<DslDatum>(&x.body)) {
      const auto& yt = std::get<DslDatum>(y.body);
      if (xt->dop != yt.dop ||
          !linmap_eq_struct(xt->sigma.left, yt.sigma.left) ||
          !linmap_eq_struct(xt->sigma.right, yt.sigma.right) ||
          !elem_eq_struct(xt->s, yt.s))
        return false;
    } else if (const auto* xq = std::get_if<DslQuintuple>(&x.body)) {
      const auto& yq = std::get<DslQuintuple>(y.body);
      if (xq->datum != yq.datum || xq->alpha != yq.alpha ||
          xq->delta != yq.delta ||
          !linmap_eq_struct(xq->alpha_map, yq.alpha_map) ||
          !linmap_eq_struct(xq->delta_map, yq.delta_map) ||
          !elem_eq_struct(xq->w, yq.w) || !elem_eq_struct(xq->e, yq.e) ||
          xq->varsigma != yq.varsigma || xq->mu != yq.mu)
        return false;
    } else if (const auto* xp = std::get_if<DslOrePoly>(&x.body)) {
      const auto& yp = std::get<DslOrePoly>(y.body);
      if (xp->on != yp.on || xp->alpha != yp.alpha || xp->delta != yp.delta ||
          xp->value.coeff.size() != yp.value.coeff.size())
        return false;
      for (std::size_t t = 0; t < xp->value.coeff.size(); ++t)
        if (!elem_eq_struct(xp->value.coeff[t], yp.value.coeff[t]))
          return false;
    }
  }
  return true;
}

}  // namespace orehom
