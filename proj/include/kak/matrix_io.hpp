#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "kak/errors.hpp"
#include "kak/matrix.hpp"
#include "kak/structure.hpp"

// Matrix file I/O.  The format is a JSON object with fields `field` ("R",
// "C", or "H"), `rows`, `cols`, and `entries` as a row-major array: real
// entries are numbers, complex entries are [re, im], quaternion entries are
// [w, x, y, z].  Doubles are written with 17 significant digits, so binary64
// values round-trip exactly.

namespace kak {

using MatrixVariant = std::variant<Matrix<double>, Matrix<cd>, Matrix<Quaternion>>;

template <class T>
constexpr const char* field_tag() {
  if constexpr (field_of<T> == Field::R) return "R";
  else if constexpr (field_of<T> == Field::C) return "C";
  else return "H";
}

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void append_entry(std::ostringstream& os, double v) { os << fmt17(v); }

inline void append_entry(std::ostringstream& os, const cd& v) {
  os << '[' << fmt17(v.real()) << ", " << fmt17(v.imag()) << ']';
}

inline void append_entry(std::ostringstream& os, const Quaternion& v) {
  os << '[' << fmt17(v.R_component_1()) << ", " << fmt17(v.R_component_2()) << ", "
     << fmt17(v.R_component_3()) << ", " << fmt17(v.R_component_4()) << ']';
}

inline double number_at(const nlohmann::json& j, size_t index) {
  if (!j.is_number())
    throw ParseError("entry " + std::to_string(index) + ": expected a number, got " +
                     std::string(j.type_name()));
  return j.get<double>();
}

inline double part_at(const nlohmann::json& j, size_t index, size_t part) {
  if (!j[part].is_number())
    throw ParseError("entry " + std::to_string(index) + " component " + std::to_string(part) +
                     ": expected a number");
  return j[part].get<double>();
}

}  // namespace detail

template <class T>
std::string matrix_to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << "{\n  \"field\": \"" << field_tag<T>() << "\",\n  \"rows\": " << m.rows()
     << ",\n  \"cols\": " << m.cols() << ",\n  \"entries\": [";
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i != 0 || j != 0) os << ',';
      os << "\n    ";
      detail::append_entry(os, m(i, j));
    }
  os << "\n  ]\n}\n";
  return os.str();
}

template <class T>
void write_matrix(const Matrix<T>& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << matrix_to_string(m);
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline MatrixVariant parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix file must hold a JSON object");
  for (const char* key : {"field", "rows", "cols", "entries"})
    if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  if (!j["field"].is_string()) throw ParseError("\"field\" must be \"R\", \"C\", or \"H\"");
  const std::string tag = j["field"].get<std::string>();
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("\"rows\" and \"cols\" must be integers");
  const int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  if (rows < 0 || cols < 0) throw ParseError("\"rows\" and \"cols\" must be nonnegative");
  const nlohmann::json& e = j["entries"];
  if (!e.is_array()) throw ParseError("\"entries\" must be an array");
  if (e.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ParseError("\"entries\" holds " + std::to_string(e.size()) + " values, expected " +
                     std::to_string(rows) + " x " + std::to_string(cols));
  const auto arity_check = [&](size_t i, size_t want) {
    if (!e[i].is_array() || e[i].size() != want)
      throw ParseError("entry " + std::to_string(i) + ": expected a " + std::to_string(want) +
                       "-array for field \"" + tag + "\"");
  };
  if (tag == "R") {
    Matrix<double> m(rows, cols);
    for (size_t i = 0; i < e.size(); ++i)
      m(static_cast<int>(i) / cols, static_cast<int>(i) % cols) = detail::number_at(e[i], i);
    return m;
  }
  if (tag == "C") {
    Matrix<cd> m(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) {
      arity_check(i, 2);
      m(static_cast<int>(i) / cols, static_cast<int>(i) % cols) =
          cd(detail::part_at(e[i], i, 0), detail::part_at(e[i], i, 1));
    }
    return m;
  }
  if (tag == "H") {
    Matrix<Quaternion> m(rows, cols);
    for (size_t i = 0; i < e.size(); ++i) {
      arity_check(i, 4);
      m(static_cast<int>(i) / cols, static_cast<int>(i) % cols) =
          Quaternion(detail::part_at(e[i], i, 0), detail::part_at(e[i], i, 1),
                     detail::part_at(e[i], i, 2), detail::part_at(e[i], i, 3));
    }
    return m;
  }
  throw ParseError("unknown field tag \"" + tag + "\" (expected \"R\", \"C\", or \"H\")");
}

inline MatrixVariant read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

// Typed read; ParseError when the stored field tag differs from T.
template <class T>
Matrix<T> read_matrix_as(const std::string& path) {
  MatrixVariant v = read_matrix(path);
  if (auto* m = std::get_if<Matrix<T>>(&v)) return std::move(*m);
  const char* stored = std::holds_alternative<Matrix<double>>(v)  ? "R"
                       : std::holds_alternative<Matrix<cd>>(v)    ? "C"
                                                                  : "H";
  throw ParseError(std::string("matrix file holds field \"") + stored + "\", expected \"" +
                   field_tag<T>() + "\"");
}

}  // namespace kak
