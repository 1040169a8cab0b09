#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orehom/multiplier.hpp"
#include "orehom/ore.hpp"
#include "orehom/skewderiv.hpp"

namespace orehom {

struct DslMap {
  std::string on;
  LinMap value;
};

struct DslDop {
  std::string on, left, right;
  DoubleOperator value;
};

// Kept unvalidated so that `check datum` can report a witness instead of
// failing at parse time.
struct DslDatum {
  std::string dop;
  DoubleOperator sigma;
  Element s;
};

struct DslQuintuple {
  std::string datum, alpha, delta;
  DoubleOperator sigma;
  Element s;
  LinMap alpha_map, delta_map;
  Element w, e;
  Scalar varsigma, mu;

  Quintuple resolve() const;  // runs make_datum on (sigma, s)
};

struct DslOrePoly {
  std::string on, alpha, delta;
  OreRingPtr ring;  // shared between orepolys with identical references
  OrePoly value;
};

struct DocEntry {
  std::string name;
  std::variant<AlgebraPtr, DslMap, DslDop, DslDatum, DslQuintuple, DslOrePoly>
      body;
};

// Ordered named definitions; names are unique and every reference points to
// an earlier entry.
struct Document {
  std::vector<DocEntry> entries;

  const DocEntry* find(const std::string& name) const;
  const DocEntry& need(const std::string& name) const;
  AlgebraPtr algebra(const std::string& name) const;
  const DslMap& map(const std::string& name) const;
  const DslDop& dop(const std::string& name) const;
  const DslDatum& datum(const std::string& name) const;
  const DslQuintuple& quintuple(const std::string& name) const;
  const DslOrePoly& orepoly(const std::string& name) const;
};

Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);
bool doc_eq(const Document& a, const Document& b);

}  // namespace orehom
