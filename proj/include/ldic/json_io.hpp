#pragma once

// JSON forms of fields, matrices, graphs and codes. Indices in files are
// 1-based; matrices are row-major.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "ldic/error.hpp"
#include "ldic/fmatrix.hpp"
#include "ldic/gfield.hpp"
#include "ldic/indexcode.hpp"
#include "ldic/sigraph.hpp"

namespace ldic {

using json = nlohmann::json;

namespace detail {

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/false);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("key '") + key + "': " + e.what());
  }
}

}  // namespace detail

inline json field_to_json(const Field& f) { return {{"q", f.q()}, {"poly", f.poly()}}; }

inline Field field_from_json(const json& j) {
  auto q = detail::get_field<std::uint32_t>(j, "q");
  std::uint32_t poly = j.contains("poly") ? detail::get_field<std::uint32_t>(j, "poly") : 0;
  return Field::make(q, poly);
}

inline json matrix_to_json(const FMatrix& a) {
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"q", a.field().q()}, {"poly", a.field().poly()},
          {"entries", a.entries()}};
}

inline FMatrix matrix_from_json(const json& j) {
  auto f = field_from_json(j);
  auto rows = detail::get_field<std::size_t>(j, "rows");
  auto cols = detail::get_field<std::size_t>(j, "cols");
  auto entries = detail::get_field<std::vector<Felt>>(j, "entries");
  return FMatrix(f, rows, cols, std::move(entries));
}

inline FMatrix parse_matrix(std::string_view text) { return matrix_from_json(detail::parse_json(text)); }

inline json graph_to_json(const SideInfoGraph& g) { return {{"n", g.n()}, {"side_info", g.side_info_sets()}}; }

inline SideInfoGraph graph_from_json(const json& j) {
  auto n = detail::get_field<int>(j, "n");
  auto k = detail::get_field<std::vector<std::vector<int>>>(j, "side_info");
  return SideInfoGraph(n, std::move(k));
}

inline SideInfoGraph parse_graph(std::string_view text) { return graph_from_json(detail::parse_json(text)); }

/// {"n": N, "edges": [[a,b], ...]}
inline UndirectedGraph undirected_from_json(const json& j) {
  auto n = detail::get_field<int>(j, "n");
  auto edges = detail::get_field<std::vector<std::pair<int, int>>>(j, "edges");
  return UndirectedGraph(n, edges);
}

inline json undirected_to_json(const UndirectedGraph& h) { return {{"n", h.n()}, {"edges", h.edges()}}; }

inline json code_to_json(const IndexCode& c) {
  json j = {{"q", c.field.q()}, {"poly", c.field.poly()}, {"n", c.n},       {"M", c.M},
            {"len", c.len},     {"L", c.L.entries()},     {"queries", c.queries}};
  if (c.decode) {
    json d = json::array();
    for (const auto& per_rx : *c.decode) {
      json rx = json::array();
      for (const auto& v : per_rx) rx.push_back(v.entries());
      d.push_back(std::move(rx));
    }
    j["decode"] = std::move(d);
  }
  return j;
}

inline IndexCode code_from_json(const json& j) {
  IndexCode c;
  c.field = field_from_json(j);
  c.n = detail::get_field<int>(j, "n");
  c.M = detail::get_field<int>(j, "M");
  c.len = detail::get_field<int>(j, "len");
  if (c.n < 0 || c.M < 1 || c.len < 0) throw Error(Errc::ParseError, "bad code dimensions");
  c.L = FMatrix(c.field, static_cast<std::size_t>(c.M) * c.n, static_cast<std::size_t>(c.len),
                detail::get_field<std::vector<Felt>>(j, "L"));
  c.queries = detail::get_field<std::vector<std::vector<int>>>(j, "queries");
  for (auto& r : c.queries) {
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  check_shape(c);
  if (j.contains("decode") && !j.at("decode").is_null()) {
    auto raw = detail::get_field<std::vector<std::vector<std::vector<Felt>>>>(j, "decode");
    if (static_cast<int>(raw.size()) != c.n) throw Error(Errc::ParseError, "decode: one entry per receiver");
    DecodeCoeffs d;
    for (auto& per_rx : raw) {
      if (static_cast<int>(per_rx.size()) != c.M) throw Error(Errc::ParseError, "decode: M vectors per receiver");
      std::vector<FVector> vs;
      for (auto& v : per_rx) {
        if (static_cast<int>(v.size()) != c.len) throw Error(Errc::ParseError, "decode: vector length != len");
        vs.emplace_back(c.field, std::move(v));
      }
      d.push_back(std::move(vs));
    }
    c.decode = std::move(d);
  }
  return c;
}

inline IndexCode parse_code(std::string_view text) { return code_from_json(detail::parse_json(text)); }

}  // namespace ldic
