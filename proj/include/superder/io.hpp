#pragma once

// JSON file formats: algebras, isoclinism pairs and shared helpers.
//
// Algebra:
//   {"name": str, "even": [labels], "odd": [labels],
//    "brackets": [{"x": label, "y": label,
//                  "value": [{"coeff": "p/q", "basis": label}]}]}
// Omitted brackets are zero; one orientation of each pair suffices.
//
// Pair:
//   {"source": file, "target": file, "phi": [[str]], "theta": [[str]]}
// with phi in the bases of quotient(G, Z(G)) and theta in the rref bases of
// the derived subalgebras.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "superder/builder.hpp"
#include "superder/isoclinism.hpp"

namespace superder {

using Json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                : what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("failed writing '" + path + "'");
}

namespace detail {

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(msg, line, column);
  }
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

inline std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

inline std::vector<std::string> labels_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key, "algebra");
  if (!v.is_array()) throw ParseError(std::string("algebra.") + key + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw ParseError(std::string("algebra.") + key + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline Rational rational_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ParseError(where + ": coefficient must be a rational string like \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const RationalFormatError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace detail

struct AlgebraDraft {
  std::string name;
  BracketTable table;
};

/// Parses the file format without validating the algebra axioms.
inline AlgebraDraft parse_algebra_draft(const std::string& text) {
  const Json doc = detail::parse_json(text);
  const std::string name = detail::string_field(doc, "name", "algebra");
  GradedBasis basis;
  try {
    basis = GradedBasis(detail::labels_field(doc, "even"), detail::labels_field(doc, "odd"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra: ") + e.what());
  }
  BracketTable table(std::move(basis));

  const Json& brackets = detail::field(doc, "brackets", "algebra");
  if (!brackets.is_array()) throw ParseError("algebra.brackets: expected an array");
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const Json& entry = brackets[e];
    try {
      const std::size_t x = table.index(detail::string_field(entry, "x", where));
      const std::size_t y = table.index(detail::string_field(entry, "y", where));
      const Json& value = detail::field(entry, "value", where);
      if (!value.is_array()) throw ParseError(where + ".value: expected an array of terms");
      Vector v(table.basis().size());
      for (std::size_t t = 0; t < value.size(); ++t) {
        const std::string term_where = where + ".value[" + std::to_string(t) + "]";
        const Rational coeff = detail::rational_value(detail::field(value[t], "coeff", term_where), term_where + ".coeff");
        v[table.index(detail::string_field(value[t], "basis", term_where))] += coeff;
      }
      table.set(x, y, v);
    } catch (const std::out_of_range& err) {
      throw ParseError(where + ": " + err.what());
    } catch (const DuplicateBracketError& err) {
      throw ParseError(where + ": " + err.what());
    }
  }
  return {name, std::move(table)};
}

/// Parses and validates; throws ParseError or InvalidAlgebraError.
inline LieSuperalgebra parse_algebra(const std::string& text) {
  const AlgebraDraft draft = parse_algebra_draft(text);
  auto report = draft.table.validate();
  if (!report.ok()) {
    std::string what =
        "'" + draft.name + "' is not a Lie superalgebra: " + describe(report.violations.front(), draft.table.basis());
    throw InvalidAlgebraError(std::move(what), std::move(report));
  }
  return draft.table.build(draft.name);
}

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row_vector(r)));
  return out;
}

inline Json to_json(const GradedDims& d) { return Json{{"even", d.even}, {"odd", d.odd}}; }

/// Sparse form of a vector: [{"coeff": "p/q", "basis": label}].
inline Json terms_json(const GradedBasis& basis, const Vector& v) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!is_zero(v[k])) terms.push_back(Json{{"coeff", to_string(v[k])}, {"basis", basis.label(k)}});
  }
  return terms;
}

inline Json algebra_json(const LieSuperalgebra& g) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const Vector v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      brackets.push_back(
          Json{{"x", g.basis().label(i)}, {"y", g.basis().label(j)}, {"value", terms_json(g.basis(), v)}});
    }
  }
  return Json{{"name", g.name()},
              {"even", g.basis().even_labels()},
              {"odd", g.basis().odd_labels()},
              {"brackets", std::move(brackets)}};
}

/// Canonical text: brackets with x ≤ y in basis order, nonzero terms only.
inline std::string serialize_algebra(const LieSuperalgebra& g) { return algebra_json(g).dump(2) + "\n"; }

inline LieSuperalgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

namespace detail {

inline Matrix matrix_field(const Json& doc, const char* key, std::size_t rows, std::size_t cols) {
  const Json& m = field(doc, key, "pair");
  const std::string where = std::string("pair.") + key;
  if (!m.is_array()) throw ParseError(where + ": expected an array of rows");
  if (m.size() != rows) {
    throw DimensionError(where + ": expected " + std::to_string(rows) + " rows, found " + std::to_string(m.size()));
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!m[r].is_array()) throw ParseError(where + ": row " + std::to_string(r) + " is not an array");
    if (m[r].size() != cols) {
      throw DimensionError(where + ": row " + std::to_string(r) + " has " + std::to_string(m[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = rational_value(m[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return out;
}

}  // namespace detail

inline std::string serialize_pair(const IsoclinismPair& pair, const std::string& source_file,
                                  const std::string& target_file) {
  const Json doc{{"source", source_file},
                 {"target", target_file},
                 {"phi", to_json(pair.phi.matrix())},
                 {"theta", to_json(pair.theta.matrix())}};
  return doc.dump(2) + "\n";
}

/// Reads a pair file against already-loaded algebras; matrix shapes are
/// checked against the quotient and derived dimensions of both sides.
inline IsoclinismPair parse_pair(const std::string& text, const LieSuperalgebra& source,
                                 const LieSuperalgebra& target) {
  const Json doc = detail::parse_json(text);
  const PairSide g(source), h(target);
  const GradedDims gq = g.central_quotient.algebra.dims(), hq = h.central_quotient.algebra.dims();
  const GradedDims gd = g.derived.dims(), hd = h.derived.dims();
  Matrix phi = detail::matrix_field(doc, "phi", hq.total(), gq.total());
  Matrix theta = detail::matrix_field(doc, "theta", hd.total(), gd.total());
  try {
    return {source, target, GradedLinearMap(gq, hq, Parity::Even, std::move(phi)),
            GradedLinearMap(gd, hd, Parity::Even, std::move(theta))};
  } catch (const DimensionError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("pair: ") + e.what());
  }
}

}  // namespace superder
