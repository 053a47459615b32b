#ifndef GAMMALAB_IO_HPP_
#define GAMMALAB_IO_HPP_

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gammalab/claims.hpp"
#include "gammalab/congruence.hpp"
#include "gammalab/core.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/filters.hpp"

namespace gammalab {

using Json = nlohmann::ordered_json;

struct ParseError : Error {
  ParseError(int line_, int column_, const std::string& message)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

struct ValidationError : Error {
  explicit ValidationError(ValidationReport report_)
      : Error("structure violates axioms: " +
              report_.violations.front().describe()),
        report(std::move(report_)) {}
  ValidationReport report;
};

namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Strips # comments, splits on whitespace, drops blank lines.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::istringstream is{std::string(raw)};
    std::string token;
    while (is >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

inline int parse_int(const Line& line, std::size_t index,
                     const std::string& what) {
  if (index >= line.tokens.size()) {
    throw ParseError(line.number, static_cast<int>(line.tokens.size()) + 1,
                     "missing " + what);
  }
  const std::string& token = line.tokens[index];
  try {
    std::size_t used = 0;
    int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line.number, static_cast<int>(index) + 1,
                     "expected integer for " + what + ", got '" + token + "'");
  }
}

}  // namespace detail

//! Parses the line-oriented .pgs structure document:
//!
//!   n 2
//!   g 1
//!   op 0
//!   0 0
//!   0 1
//!   leq
//!   1 1
//!   0 1
//!
//! `op k` introduces table k (rows indexed by the left factor); `leq` rows
//! hold 0/1 with row a, column b = 1 meaning a <= b. `#` starts a comment.
//! The parsed structure is validated for the given kind before it is
//! returned; axiom violations raise ValidationError.
inline PoGammaStructure parse_structure(std::string_view text,
                                        StructureKind kind = StructureKind::semigroup) {
  std::vector<detail::Line> lines = detail::tokenize_lines(text);
  std::size_t at = 0;
  auto need = [&](const std::string& what) -> const detail::Line& {
    if (at >= lines.size()) {
      int last = lines.empty() ? 1 : lines.back().number;
      throw ParseError(last, 1, "unexpected end of document, expected " + what);
    }
    return lines[at];
  };

  const detail::Line& n_line = need("'n <count>'");
  if (n_line.tokens[0] != "n" || n_line.tokens.size() != 2) {
    throw ParseError(n_line.number, 1, "expected 'n <count>'");
  }
  int n = detail::parse_int(n_line, 1, "element count");
  if (n < 1 || n > kMaxElements) {
    throw ParseError(n_line.number, 2, "element count out of range");
  }
  ++at;

  const detail::Line& g_line = need("'g <count>'");
  if (g_line.tokens[0] != "g" || g_line.tokens.size() != 2) {
    throw ParseError(g_line.number, 1, "expected 'g <count>'");
  }
  int g = detail::parse_int(g_line, 1, "label count");
  if (g < 1) throw ParseError(g_line.number, 2, "label count out of range");
  ++at;

  PoGammaStructure s = make_structure(n, g, kind);
  for (int gamma = 0; gamma < g; ++gamma) {
    const detail::Line& header = need("'op " + std::to_string(gamma) + "'");
    if (header.tokens[0] != "op" || header.tokens.size() != 2 ||
        detail::parse_int(header, 1, "table label") != gamma) {
      throw ParseError(header.number, 1,
                       "expected 'op " + std::to_string(gamma) + "'");
    }
    ++at;
    for (int a = 0; a < n; ++a) {
      const detail::Line& row = need("table row");
      if (row.tokens.size() != static_cast<std::size_t>(n)) {
        throw ParseError(row.number, 1,
                         "expected " + std::to_string(n) + " entries, got " +
                             std::to_string(row.tokens.size()));
      }
      for (int b = 0; b < n; ++b) {
        int v = detail::parse_int(row, static_cast<std::size_t>(b), "table entry");
        if (v < 0 || v >= n) {
          throw ParseError(row.number, b + 1, "table entry out of range");
        }
        s.set_product(gamma, a, b, v);
      }
      ++at;
    }
  }

  const detail::Line& leq_header = need("'leq'");
  if (leq_header.tokens[0] != "leq" || leq_header.tokens.size() != 1) {
    throw ParseError(leq_header.number, 1, "expected 'leq'");
  }
  ++at;
  s.leq = BoolRelation(n);
  for (int a = 0; a < n; ++a) {
    const detail::Line& row = need("order row");
    if (row.tokens.size() != static_cast<std::size_t>(n)) {
      throw ParseError(row.number, 1,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(row.tokens.size()));
    }
    for (int b = 0; b < n; ++b) {
      int v = detail::parse_int(row, static_cast<std::size_t>(b), "order entry");
      if (v != 0 && v != 1) {
        throw ParseError(row.number, b + 1, "order entries must be 0 or 1");
      }
      s.leq.set(a, b, v == 1);
    }
    ++at;
  }
  if (at != lines.size()) {
    throw ParseError(lines[at].number, 1, "trailing content after document");
  }

  ValidationReport report = validate(s);
  if (!report.ok()) throw ValidationError(std::move(report));
  return s;
}

//! Canonical text form; parse_structure(serialize_structure(s)) == s.
inline std::string serialize_structure(const PoGammaStructure& s) {
  std::ostringstream os;
  os << "n " << s.n << "\n";
  os << "g " << s.g << "\n";
  for (int gamma = 0; gamma < s.g; ++gamma) {
    os << "op " << gamma << "\n";
    for (int a = 0; a < s.n; ++a) {
      for (int b = 0; b < s.n; ++b) {
        if (b > 0) os << ' ';
        os << s.product(gamma, a, b);
      }
      os << "\n";
    }
  }
  os << "leq\n";
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (b > 0) os << ' ';
      os << (s.less_equal(a, b) ? 1 : 0);
    }
    os << "\n";
  }
  return os.str();
}

//! DOT digraph of the order's Hasse diagram (cover relation only).
inline std::string hasse_dot(const PoGammaStructure& s) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int a = 0; a < s.n; ++a) {
    os << "  " << a << ";\n";
  }
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (a == b || !s.less_equal(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < s.n; ++c) {
        if (c != a && c != b && s.less_equal(a, c) && s.less_equal(c, b)) {
          cover = false;
          break;
        }
      }
      if (cover) os << "  " << a << " -> " << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

// ---- JSON report builders (ordered keys; reports are byte-stable) ----

inline Json to_json(const ElementSet& set) {
  Json arr = Json::array();
  for (int x : set) arr.push_back(x);
  return arr;
}

inline Json to_json(const Violation& v) {
  Json j;
  j["axiom"] = to_string(v.axiom);
  j["structural"] = v.structural();
  Json where = Json::object();
  if (v.a >= 0) where["a"] = v.a;
  if (v.b >= 0) where["b"] = v.b;
  if (v.c >= 0) where["c"] = v.c;
  if (v.gamma >= 0) where["gamma"] = v.gamma;
  if (v.mu >= 0) where["mu"] = v.mu;
  j["where"] = where;
  j["message"] = v.describe();
  return j;
}

inline Json to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.ok();
  Json arr = Json::array();
  for (const Violation& v : report.violations) arr.push_back(to_json(v));
  j["violations"] = arr;
  return j;
}

inline Json to_json(const StructuralProfile& p) {
  Json j;
  j["is_band"] = p.is_band;
  j["is_commutative"] = p.is_commutative;
  j["is_semilattice"] = p.is_semilattice;
  j["order_forward"] = p.order_forward;
  j["order_iff"] = p.order_iff;
  return j;
}

inline Json to_json(const FilterCheck& check) {
  Json j;
  j["is_nonempty"] = check.is_nonempty;
  j["is_subsemigroup"] = check.is_subsemigroup;
  j["is_factor_closed"] = check.is_factor_closed;
  j["is_up_closed"] = check.is_up_closed;
  j["verdict"] = check.verdict;
  if (check.witness) {
    Json w;
    w["law"] = to_string(check.witness->law);
    if (check.witness->x >= 0) w["x"] = check.witness->x;
    if (check.witness->y >= 0) w["y"] = check.witness->y;
    if (check.witness->gamma >= 0) w["gamma"] = check.witness->gamma;
    j["witness"] = w;
  }
  return j;
}

inline Json to_json(const Partition& p) {
  Json j;
  j["k"] = p.k;
  j["class_of"] = p.class_of;
  Json classes = Json::array();
  for (int cls = 0; cls < p.k; ++cls) classes.push_back(to_json(p.members_of(cls)));
  j["classes"] = classes;
  return j;
}

inline Json to_json(const BoolRelation& r) {
  Json rows = Json::array();
  for (int i = 0; i < r.size; ++i) {
    Json row = Json::array();
    for (int j = 0; j < r.size; ++j) row.push_back(r.at(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const CongruenceCheck& check) {
  Json j;
  j["is_equivalence"] = check.is_equivalence;
  j["is_congruence"] = check.is_congruence;
  j["is_semilattice"] = check.is_semilattice;
  j["is_complete"] = check.is_complete;
  if (check.witness) {
    Json w;
    w["law"] = to_string(check.witness->law);
    if (check.witness->a >= 0) w["a"] = check.witness->a;
    if (check.witness->b >= 0) w["b"] = check.witness->b;
    if (check.witness->c >= 0) w["c"] = check.witness->c;
    if (check.witness->gamma >= 0) w["gamma"] = check.witness->gamma;
    j["witness"] = w;
  }
  return j;
}

inline Json to_json(const ClassUpperSets& sets) {
  Json j;
  j["base"] = sets.base;
  j["strictly_above"] = to_json(sets.strictly_above);
  j["above_in_filter"] = to_json(sets.above_in_filter);
  j["above_class_union"] = to_json(sets.above_class_union);
  j["filter_minus_class"] = to_json(sets.filter_minus_class);
  j["all_equal"] = sets.all_equal();
  return j;
}

inline Json to_json(const ClaimWitness& w) {
  Json j;
  j["elements"] = w.elements;
  if (w.partition) j["partition"] = to_json(*w.partition);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline Json to_json(const ClaimVerdict& v) {
  Json j;
  j["claim"] = v.claim_id;
  j["kind"] = to_string(claim_info(v.claim_id).kind);
  j["status"] = v.holds ? "holds" : "fails";
  j["vacuous"] = v.vacuous;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

inline Json to_json(const EnumConfig& cfg) {
  Json j;
  j["n"] = cfg.n;
  j["g"] = cfg.g;
  j["order_mode"] = cfg.order_mode == OrderMode::all_compatible
                        ? "all_compatible"
                        : "discrete_only";
  j["iso_dedup"] = cfg.iso_dedup;
  j["kind"] = to_string(cfg.kind);
  return j;
}

// Elapsed time is deliberately omitted: JSON reports must be byte-stable
// across identical runs.
inline Json to_json(const SearchReport& report) {
  Json j;
  j["claim"] = report.claim_id;
  j["kind"] = to_string(claim_info(report.claim_id).kind);
  j["config"] = to_json(report.cfg);
  j["structures_checked"] = report.structures_checked;
  j["counterexamples_found"] = report.counterexamples_found;
  j["limit"] = report.limit;
  j["truncated"] = report.truncated;
  Json hits = Json::array();
  for (const SearchHit& hit : report.counterexamples) {
    Json h;
    h["structure"] = serialize_structure(hit.structure);
    h["verdict"] = to_json(hit.verdict);
    hits.push_back(h);
  }
  j["counterexamples"] = hits;
  return j;
}

}  // namespace gammalab

#endif  // GAMMALAB_IO_HPP_
