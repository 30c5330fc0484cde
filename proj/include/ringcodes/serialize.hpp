#pragma once

// JSON encodings. Every document carries the ring header fields "m" and "s";
// residues are plain integers, SubsetPoly values are arrays in bitmask order,
// TowerElement values are arrays of m SubsetPoly arrays (degree 0 first).
// Parsers report malformed input as SchemaError with a JSON-pointer path.

#include "ringcodes/code_builder.hpp"
#include "ringcodes/cyclic_qc.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/gray_map.hpp"
#include "ringcodes/residue.hpp"
#include "ringcodes/subset_algebra.hpp"
#include "ringcodes/tower_ring.hpp"
#include "ringcodes/zmodule.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <limits>
#include <string>

namespace ringcodes {

using Json = nlohmann::json;

inline constexpr const char* kCodeFormat = "ringcodes.code/v1";
inline constexpr const char* kSpecFormat = "ringcodes.component-spec/v1";

inline Json ring_header(RingParams p) { return {{"m", p.m}, {"s", p.s}}; }

inline Json to_json(const SubsetPoly& a) { return a.coeffs(); }

inline Json to_json(const TowerElement& x) {
  Json arr = Json::array();
  for (std::size_t d = 0; d < static_cast<std::size_t>(x.params().m); ++d) arr.push_back(x.coefficient(d).coeffs());
  return arr;
}

inline Json to_json(const ZModMatrix& M) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) rows.push_back(Digits(M.row(i).begin(), M.row(i).end()));
  return rows;
}

inline Json matrix_document(RingParams p, const ZModMatrix& M) {
  Json j = ring_header(p);
  j["cols"] = M.cols();
  j["rows"] = to_json(M);
  return j;
}

inline Json to_json(const GrayVector& g, int m) {
  return {{"n", g.n}, {"m", m}, {"s", g.s}, {"order", GrayVector::order}, {"coords", g.coords}};
}

inline Json to_json(const RPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  Json j = ring_header(f[0].params());
  j["n"] = f.n();
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline Json to_json(const ComponentSpec& spec) {
  Json j = ring_header(spec.params());
  j["format"] = kSpecFormat;
  j["n"] = spec.n();
  Json blocks = Json::array();
  for (std::size_t b = 0; b < spec.block_count(); ++b) {
    if (spec.block_at(b).empty()) continue;
    blocks.push_back({{"l", spec.block_l(b)}, {"subset", spec.block_subset(b)}, {"rows", to_json(spec.block_at(b))}});
  }
  j["blocks"] = std::move(blocks);
  return j;
}

/// Code document: the component spec plus derived cardinalities and generators.
inline Json to_json(const RCode& code) {
  Json j = to_json(code.spec());
  j["format"] = kCodeFormat;
  j["cardinality"] = code_cardinality(code).to_json();
  Json rows = Json::array();
  for (const auto& r : code.stacked_rows()) {
    Json word = Json::array();
    for (const auto& x : r.word) word.push_back(to_json(x));
    rows.push_back({{"l", r.l}, {"subset", r.subset}, {"row", r.row}, {"degenerate", r.degenerate}, {"word", word}});
  }
  j["stacked_generator"] = std::move(rows);
  return j;
}

namespace json_detail {

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(child(path, key), "missing required field");
  return *it;
}

inline std::int64_t integer(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw SchemaError(path, "integer out of range");
    return static_cast<std::int64_t>(v);
  }
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<std::int64_t>();
}

inline std::int64_t integer_in(const Json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = integer(j, path);
  if (v < lo || v > hi)
    throw SchemaError(path, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

inline const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

inline Digits residues(const Json& j, const std::string& path, const Zmod& zm, std::optional<std::size_t> len) {
  array(j, path);
  if (len && j.size() != *len)
    throw SchemaError(path, "expected " + std::to_string(*len) + " entries, got " + std::to_string(j.size()));
  Digits out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(zm.from_signed(integer(j[i], child(path, i))));
  return out;
}

}  // namespace json_detail

inline RingParams parse_ring_header(const Json& j, const std::string& path = "") {
  using namespace json_detail;
  RingParams p;
  p.m = static_cast<int>(integer(field(j, "m", path), child(path, "m")));
  p.s = static_cast<int>(integer(field(j, "s", path), child(path, "s")));
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw SchemaError(child(path, p.s < 1 || p.s > static_cast<int>(kMaxS) ? "s" : "m"), e.what());
  }
  return p;
}

inline SubsetPoly parse_subset_poly(const Json& j, unsigned vars, unsigned s, const std::string& path) {
  return SubsetPoly(vars, s, json_detail::residues(j, path, Zmod::for_s(s), std::size_t{1} << vars));
}

inline TowerElement parse_tower_element(const Json& j, RingParams p, const std::string& path) {
  using namespace json_detail;
  array(j, path);
  if (j.size() != static_cast<std::size_t>(p.m))
    throw SchemaError(path, "expected " + std::to_string(p.m) + " coefficients in A_{m-1}, got " + std::to_string(j.size()));
  TowerElement x(p);
  for (std::size_t d = 0; d < j.size(); ++d)
    x.set_coefficient(d, parse_subset_poly(j[d], static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s), child(path, d)));
  return x;
}

inline ZModMatrix parse_matrix(const Json& j, const Zmod& zm, std::size_t cols, const std::string& path) {
  using namespace json_detail;
  array(j, path);
  ZModMatrix M(zm, cols);
  for (std::size_t i = 0; i < j.size(); ++i) M.append_row(residues(j[i], child(path, i), zm, cols));
  return M;
}

/// {"m", "s", "n", "blocks": [{"l", "subset", "rows"}]}; rows of repeated blocks are appended.
inline ComponentSpec parse_component_spec(const Json& j) {
  using namespace json_detail;
  const RingParams p = parse_ring_header(j);
  const auto n = static_cast<std::size_t>(integer_in(field(j, "n", ""), "/n", 1, 1 << 20));
  ComponentSpec spec(p, n);
  const Json& blocks = array(field(j, "blocks", ""), "/blocks");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string bp = child("/blocks", b);
    const int l = static_cast<int>(integer_in(field(blocks[b], "l", bp), child(bp, "l"), 1, 3));
    const auto S = static_cast<std::size_t>(
        integer_in(field(blocks[b], "subset", bp), child(bp, "subset"), 0, static_cast<std::int64_t>(p.subset_dim()) - 1));
    const ZModMatrix rows = parse_matrix(field(blocks[b], "rows", bp), spec.ring(), n, child(bp, "rows"));
    for (std::size_t r = 0; r < rows.rows(); ++r) spec.add_row(l, S, rows.row(r));
  }
  return spec;
}

/// Polynomial over A_{m-1}: {"m", "s", "n", "coeffs": [n SubsetPoly arrays]}.
inline APoly parse_apoly(const Json& j, RingParams p, std::size_t n, const std::string& path) {
  using namespace json_detail;
  array(j, path);
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " coefficients");
  std::vector<SubsetPoly> c;
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(parse_subset_poly(j[i], static_cast<unsigned>(p.m - 1), static_cast<unsigned>(p.s), child(path, i)));
  return APoly(std::move(c));
}

inline RPoly parse_rpoly(const Json& j, RingParams p, std::size_t n, const std::string& path) {
  using namespace json_detail;
  array(j, path);
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " coefficients");
  std::vector<TowerElement> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(parse_tower_element(j[i], p, child(path, i)));
  return RPoly(std::move(c));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

/// Stable textual form: sorted keys (nlohmann's default object ordering), two-space indent.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ringcodes
