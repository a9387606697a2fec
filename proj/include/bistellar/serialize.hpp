#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bistellar/complex.hpp"
#include "bistellar/moves.hpp"
#include "bistellar/rational.hpp"

namespace bistellar {

namespace detail {

inline void append_list(std::string& out, std::span<const VertexId> xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  out += ']';
}

inline void append_list(std::string& out, const std::vector<std::int64_t>& xs) {
  out += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  out += ']';
}

}  // namespace detail

/// `{"dimension": n, "facets": [[0, 1, 2], ...]}` followed by a newline; facets in canonical order.
inline std::string complex_to_json(const Complex& c) {
  std::string out = "{\"dimension\": " + std::to_string(c.dimension()) + ", \"facets\": [";
  for (std::size_t i = 0; i < c.facets().size(); ++i) {
    if (i) out += ", ";
    detail::append_list(out, c.facets()[i].vertices());
  }
  out += "]}\n";
  return out;
}

/**
 * Parses the complex file format. Facets may be listed in any order and with
 * unsorted vertices; the result is canonicalized. Each facet must have exactly
 * dimension + 1 distinct nonnegative vertex ids.
 */
inline Complex complex_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("at /: expected an object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw ParseError("at /dimension: expected an integer");
  }
  if (!doc.contains("facets") || !doc["facets"].is_array()) throw ParseError("at /facets: expected an array");
  for (const auto& [key, unused] : doc.items()) {
    if (key != "dimension" && key != "facets") throw ParseError("at /" + key + ": unexpected key");
  }
  const auto dimension = doc["dimension"].get<std::int64_t>();
  if (dimension < -1 || dimension > 64) throw ParseError("at /dimension: out of range");
  std::vector<Simplex> facets;
  const auto& list = doc["facets"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "at /facets/" + std::to_string(i);
    if (!list[i].is_array()) throw ParseError(where + ": expected an array");
    if (static_cast<std::int64_t>(list[i].size()) != dimension + 1) {
      throw ParseError(where + ": expected " + std::to_string(dimension + 1) + " vertices");
    }
    std::vector<VertexId> verts;
    for (std::size_t j = 0; j < list[i].size(); ++j) {
      const auto& v = list[i][j];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
        throw ParseError(where + "/" + std::to_string(j) + ": expected a nonnegative vertex id");
      }
      verts.push_back(static_cast<VertexId>(v.get<std::uint64_t>()));
    }
    try {
      facets.emplace_back(std::move(verts));
    } catch (const PreconditionError&) {
      throw ParseError(where + ": repeated vertex");
    }
  }
  return Complex::from_facets(static_cast<int>(dimension), std::move(facets));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("cannot write " + path);
}

inline Complex load_complex(const std::string& path) {
  try {
    return complex_from_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void save_complex(const std::string& path, const Complex& c) { write_file(path, complex_to_json(c)); }

/// One JSON object per step: `{"step": k, "type": i, "sigma": [...], "tau": [...], "f": [...]}`, k from 1.
inline std::string trace_to_jsonl(const WalkTrace& trace) {
  std::string out;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const WalkStep& s = trace.steps[k];
    out += "{\"step\": " + std::to_string(k + 1) + ", \"type\": " + std::to_string(s.site.type) + ", \"sigma\": ";
    detail::append_list(out, s.site.sigma.vertices());
    out += ", \"tau\": ";
    detail::append_list(out, s.site.tau.vertices());
    out += ", \"f\": ";
    detail::append_list(out, s.f.counts);
    out += "}\n";
  }
  return out;
}

/// Rationals serialize as `{"num": "p", "den": "q"}` with decimal strings.
inline nlohmann::ordered_json rational_to_json(const Rational& x) {
  return {{"num", boost::multiprecision::numerator(x).str()}, {"den", boost::multiprecision::denominator(x).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string()) {
    throw ParseError("expected {\"num\": \"...\", \"den\": \"...\"}");
  }
  try {
    const BigInt den(j["den"].get<std::string>());
    if (den == 0) throw ParseError("zero denominator");
    return Rational(BigInt(j["num"].get<std::string>()), den);
  } catch (const std::runtime_error& e) {
    throw ParseError(std::string("bad rational: ") + e.what());
  }
}

}  // namespace bistellar
