#pragma once

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "tihecke/coxeter.hpp"
#include "tihecke/errors.hpp"
#include "tihecke/invmod.hpp"
#include "tihecke/laurent.hpp"
#include "tihecke/localized.hpp"
#include "tihecke/twist.hpp"
#include "tihecke/verify.hpp"

namespace tihecke {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

// Coefficients travel as decimal strings so big integers survive any JSON
// reader.
inline json laurent_to_json(const Laurent& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(json::array({e, c.str()}));
  return arr;
}

inline Laurent laurent_from_json(const json& j) {
  if (!j.is_array()) fail(errc::bad_io, "Laurent polynomial must be a list of [exponent, coefficient]");
  Laurent p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      fail(errc::bad_io, "Laurent term must be [integer exponent, decimal string]");
    Int c;
    try {
      c = Int(term[1].get<std::string>());
    } catch (...) {
      fail(errc::bad_io, "bad coefficient string '" + term[1].get<std::string>() + "'");
    }
    if (c == 0) fail(errc::bad_io, "stored zero coefficient");
    if (!p.coeff(term[0].get<int>()).is_zero()) fail(errc::bad_io, "duplicate exponent");
    p.set(term[0].get<int>(), c);
  }
  return p;
}

inline json localized_to_json(const Localized& x) {
  return json{{"num", laurent_to_json(x.num())}, {"a", x.a()}, {"b", x.b()}};
}

inline Localized localized_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("a") || !j.contains("b"))
    fail(errc::bad_io, "Localized must be {num, a, b}");
  return Localized(laurent_from_json(j["num"]), j["a"].get<unsigned>(), j["b"].get<unsigned>());
}

inline json spec_to_json(const CoxeterSpec& spec) {
  json j;
  if (!spec.label.empty()) j["preset"] = spec.label;
  j["matrix"] = spec.matrix;
  json star = json::array();
  for (int v : spec.star) star.push_back(v + 1);
  j["star"] = star;
  return j;
}

// Accepts {"preset": "A3"} or {"matrix": [[1,3],[3,1]]}, optionally with a
// 1-based {"star": [2,1]}.
inline CoxeterSpec spec_from_json(const json& j) {
  if (!j.is_object()) fail(errc::bad_io, "group spec must be a JSON object");
  if (j.contains("preset") && j.contains("matrix"))
    fail(errc::invalid_spec, "preset and matrix are mutually exclusive");
  CoxeterSpec spec;
  if (j.contains("preset")) {
    spec = CoxeterSpec::preset(j["preset"].get<std::string>());
  } else if (j.contains("matrix")) {
    std::vector<std::vector<int>> m;
    try {
      m = j["matrix"].get<std::vector<std::vector<int>>>();
    } catch (...) {
      fail(errc::bad_io, "matrix must be a square integer matrix");
    }
    spec = CoxeterSpec::from_matrix(std::move(m));
  } else {
    fail(errc::invalid_spec, "group spec needs a preset or a matrix");
  }
  if (j.contains("star")) {
    std::vector<int> star;
    try {
      star = j["star"].get<std::vector<int>>();
    } catch (...) {
      fail(errc::bad_io, "star must be a 1-based permutation list");
    }
    spec = spec.with_star_one_based(star);
  }
  return spec;
}

inline json hecke_to_json(const GroupTable& W, const HeckeElt<Laurent>& h) {
  json terms = json::array();
  for (const auto& [x, c] : h.terms())
    terms.push_back(json{{"w", W.word_name(x)}, {"coeff", localized_to_json(Localized(c))}});
  return json{{"terms", std::move(terms)}};
}

inline json module_to_json(const GroupTable& W, const TwistTable& T, const ModuleElt<Laurent>& m) {
  json terms = json::array();
  for (const auto& [z, c] : m.terms())
    terms.push_back(json{{"z", W.word_name(T.group_index(z))}, {"coeff", localized_to_json(Localized(c))}});
  return json{{"terms", std::move(terms)}};
}

inline json report_to_json(const CheckReport& rep, bool with_timing = false) {
  json j{{"check", rep.check}, {"group", rep.group}, {"pass", rep.pass}};
  if (!rep.pass) j["witness"] = rep.witness;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  if (with_timing) j["wall_ms"] = rep.wall_ms;
  return j;
}

// 64-bit FNV-1a; stable content hash for cache keys.
inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string cache_key(const CoxeterSpec& spec) {
  const std::uint64_t h = fnv1a64(spec.canonical_string() + "|" + kVersion);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json ltable_to_json(const GroupTable& W, const TwistTable& T, const LTable& L) {
  json rows = json::array();
  for (std::int32_t x = 0; x < W.size(); ++x) {
    json terms = json::array();
    for (const auto& [z, poly] : L.row(x).terms())
      terms.push_back(json{{"z", W.word_name(T.group_index(z))}, {"L", laurent_to_json(poly)}});
    rows.push_back(json{{"x", W.word_name(x)}, {"terms", std::move(terms)}});
  }
  return json{{"format", "tihecke-ltable"},
              {"version", kVersion},
              {"key", cache_key(W.spec())},
              {"spec", spec_to_json(W.spec())},
              {"rows", std::move(rows)}};
}

// Strict decode; the caller revalidates the triangular leading coefficients
// before trusting a cached table.
inline LTable ltable_from_json(const GroupTable& W, const TwistTable& T, const json& j) {
  if (!j.is_object() || j.value("format", "") != std::string("tihecke-ltable"))
    fail(errc::bad_io, "not a tihecke-ltable document");
  if (j.value("version", "") != std::string(kVersion)) fail(errc::bad_io, "version mismatch");
  if (j.value("key", "") != cache_key(W.spec())) fail(errc::bad_io, "cache key mismatch");
  if (!j.contains("rows") || !j["rows"].is_array()) fail(errc::bad_io, "missing rows");
  std::vector<LTable::Row> rows(W.size());
  if (static_cast<std::int32_t>(j["rows"].size()) != W.size()) fail(errc::bad_io, "row count mismatch");
  std::vector<bool> seen(W.size(), false);
  for (const auto& row : j["rows"]) {
    const std::int32_t x = W.element_of_word(W.parse_word(row.value("x", "")));
    if (seen[x]) fail(errc::bad_io, "duplicate row for x=" + W.word_name(x));
    seen[x] = true;
    for (const auto& term : row["terms"]) {
      const std::int32_t g = W.element_of_word(W.parse_word(term.value("z", "")));
      const std::int32_t z = T.index_of_group(g);
      if (z == npos) fail(errc::bad_io, W.word_name(g) + " is not a twisted involution");
      if (!rows[x].coeff(z).is_zero()) fail(errc::bad_io, "duplicate term");
      rows[x].set(z, laurent_from_json(term["L"]));
    }
  }
  return LTable::from_rows(W, T, std::move(rows));
}

}  // namespace tihecke
