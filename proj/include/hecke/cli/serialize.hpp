#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hecke/hilbquot/hilbquot.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "hecke/1";

/// Malformed document; the message names the byte offset or the JSON path.
class io_error : public parse_error {
 public:
  explicit io_error(const std::string& what) : parse_error(what) {}
};

// ---------------------------------------------------------------------------
// Field descriptors: "Q", "Fp:<p>" (also accepted: "F<p>")

struct FieldDescriptor {
  bool rational = true;
  uint64_t p = 0;
  std::string name() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

inline FieldDescriptor parse_field_descriptor(const std::string& s) {
  if (s == "Q" || s == "QQ") return {true, 0};
  std::string digits;
  if (s.rfind("Fp:", 0) == 0) digits = s.substr(3);
  else if (s.size() > 1 && s[0] == 'F') digits = s.substr(1);
  else throw io_error("unknown field '" + s + "'");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
    throw io_error("malformed field size in '" + s + "'");
  const uint64_t p = std::stoull(digits);
  if (!is_prime(p) || p >= (uint64_t{1} << 32)) throw io_error("field size is not a prime below 2^32 in '" + s + "'");
  return {false, p};
}

/// Calls fn(PrimeField) or fn(RationalField).
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& d, Fn&& fn) {
  if (d.rational) return fn(RationalField{});
  return fn(PrimeField(d.p));
}

// ---------------------------------------------------------------------------
// Writers

template <class F>
Json to_json(const Poly<F>& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

template <class F>
Json to_json(const RatFunc<F>& f) {
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

template <class F>
Json to_json(const RatMatrix<F>& m) {
  Json rows = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Json to_json(const CurvePoint<F>& x) {
  return x.at_infinity ? Json("inf") : Json(x.a.to_string());
}

template <class F>
Json to_json(const Bundle<F>& V) {
  return Json{{"field", V.field.name()}, {"rank", V.rank()}, {"lattice0", to_json(V.A0)}, {"latticeInf", to_json(V.Ainf)}};
}

template <class F>
Json to_json(const std::vector<Poly<F>>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(to_json(p));
  return a;
}

template <class F>
Json to_json(const Cluster<F>& c) {
  return Json{{"x", to_json(c.x)}, {"k", c.k}, {"jet", to_json(c.jet)}};
}

template <class F>
Json to_json(const ZScheme<F>& Z) {
  Json a = Json::array();
  for (const auto& c : Z.clusters) a.push_back(to_json(c));
  return Json{{"clusters", a}};
}

template <class F>
Json to_json(const TorsionModule<F>& t) {
  Json parts = Json::array();
  for (const auto& [x, gens] : t.parts) {
    Json g = Json::array();
    for (const auto& p : gens) g.push_back(Json{{"order", p.order}, {"numer", to_json(p.numer)}});
    parts.push_back(Json{{"point", to_json(x)}, {"generators", g}});
  }
  return Json{{"base", to_json(t.V)}, {"parts", parts}};
}

template <class F>
Json to_json(const QuotPoint<F>& q) {
  return Json{{"base", to_json(q.base)}, {"finite", to_json(q.finite)}, {"infinity", to_json(q.infinity)},
              {"colength", q.colength}};
}

template <class F>
Json to_json(const std::vector<typename F::Element>& v, const F&) {
  Json a = Json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

/// Top-level document with schema version and kind.
inline Json make_document(const std::string& kind, Json data) {
  return Json{{"schema", kSchemaVersion}, {"kind", kind}, {"data", std::move(data)}};
}

// ---------------------------------------------------------------------------
// Readers. Every reader takes the JSON path of its argument for error messages.

namespace detail {

inline const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw io_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw io_error(path + ": missing '" + key + "'");
  return *it;
}

inline const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw io_error(path + ": expected an array");
  return j;
}

inline int integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw io_error(path + ": expected an integer");
  return j.get<int>();
}

}  // namespace detail

template <class F>
typename F::Element scalar_from_json(const F& f, const Json& j, const std::string& path) {
  if (!j.is_string()) throw io_error(path + ": scalars are strings");
  try {
    return f.parse(j.get<std::string>());
  } catch (const parse_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

template <class F>
Poly<F> poly_from_json(const F& f, const Json& j, const std::string& path) {
  std::vector<typename F::Element> c;
  const Json& a = detail::array_at(j, path);
  for (size_t i = 0; i < a.size(); ++i) c.push_back(scalar_from_json(f, a[i], path + "/" + std::to_string(i)));
  return Poly<F>(f, std::move(c));
}

template <class F>
RatFunc<F> ratfunc_from_json(const F& f, const Json& j, const std::string& path) {
  Poly<F> num = poly_from_json(f, detail::member(j, "num", path), path + "/num");
  Poly<F> den = poly_from_json(f, detail::member(j, "den", path), path + "/den");
  if (den.is_zero()) throw io_error(path + "/den: zero denominator");
  return RatFunc<F>(num, den);
}

template <class F>
RatMatrix<F> matrix_from_json(const F& f, const Json& j, size_t r, const std::string& path) {
  const Json& rows = detail::array_at(j, path);
  if (rows.size() != r) throw io_error(path + ": expected " + std::to_string(r) + " rows");
  RatMatrix<F> m(r, r, RatFunc<F>(f));
  for (size_t i = 0; i < r; ++i) {
    const std::string rp = path + "/" + std::to_string(i);
    const Json& row = detail::array_at(rows[i], rp);
    if (row.size() != r) throw io_error(rp + ": expected " + std::to_string(r) + " entries");
    for (size_t k = 0; k < r; ++k) m(i, k) = ratfunc_from_json(f, row[k], rp + "/" + std::to_string(k));
  }
  return m;
}

template <class F>
CurvePoint<F> point_from_json(const F& f, const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "inf") return CurvePoint<F>::infinity(f);
  return CurvePoint<F>::finite(scalar_from_json(f, j, path));
}

template <class F>
Bundle<F> bundle_from_json(const F& f, const Json& j, const std::string& path = "") {
  const Json& fld = detail::member(j, "field", path);
  if (!fld.is_string() || fld.get<std::string>() != f.name())
    throw io_error(path + "/field: expected '" + f.name() + "'");
  const Json& rk = detail::member(j, "rank", path);
  if (!rk.is_number_unsigned() || rk.get<size_t>() == 0) throw io_error(path + "/rank: expected a positive integer");
  const size_t r = rk.get<size_t>();
  RatMatrix<F> A0 = matrix_from_json(f, detail::member(j, "lattice0", path), r, path + "/lattice0");
  RatMatrix<F> Ainf = matrix_from_json(f, detail::member(j, "latticeInf", path), r, path + "/latticeInf");
  try {
    return make_bundle(A0, Ainf);
  } catch (const std::exception& e) {
    throw io_error(path + ": " + e.what());
  }
}

template <class F>
std::vector<Poly<F>> polys_from_json(const F& f, const Json& j, const std::string& path) {
  std::vector<Poly<F>> out;
  const Json& a = detail::array_at(j, path);
  for (size_t i = 0; i < a.size(); ++i) out.push_back(poly_from_json(f, a[i], path + "/" + std::to_string(i)));
  return out;
}

/// Reads and normalizes a cluster; `normalized` reports whether the input was changed.
template <class F>
Cluster<F> cluster_from_json(const F& f, const Json& j, size_t r, const std::string& path, bool* normalized = nullptr) {
  Cluster<F> c{point_from_json(f, detail::member(j, "x", path), path + "/x"),
               detail::integer(detail::member(j, "k", path), path + "/k"),
               polys_from_json(f, detail::member(j, "jet", path), path + "/jet")};
  if (c.jet.size() != r) throw io_error(path + "/jet: expected " + std::to_string(r) + " coordinates");
  NormalizedCluster info;
  try {
    c = normalize_cluster(std::move(c), &info);
  } catch (const std::invalid_argument& e) {
    throw io_error(path + ": " + e.what());
  }
  if (normalized) *normalized = info.changed;
  return c;
}

template <class F>
ZScheme<F> zscheme_from_json(const F& f, const Json& j, size_t r, const std::string& path = "") {
  const std::string cp = path + "/clusters";
  const Json& a = detail::array_at(detail::member(j, "clusters", path), cp);
  std::vector<Cluster<F>> cs;
  for (size_t i = 0; i < a.size(); ++i) cs.push_back(cluster_from_json(f, a[i], r, cp + "/" + std::to_string(i)));
  try {
    return make_zscheme(std::move(cs));
  } catch (const std::invalid_argument& e) {
    throw io_error(path + ": " + e.what());
  }
}

template <class F>
TorsionModule<F> torsion_from_json(const F& f, const Json& j, const std::string& path = "") {
  Bundle<F> V = bundle_from_json(f, detail::member(j, "base", path), path + "/base");
  TorsionModule<F> t{V, {}};
  const std::string pp = path + "/parts";
  const Json& parts = detail::array_at(detail::member(j, "parts", path), pp);
  for (size_t i = 0; i < parts.size(); ++i) {
    const std::string ip = pp + "/" + std::to_string(i);
    const CurvePoint<F> x = point_from_json(f, detail::member(parts[i], "point", ip), ip + "/point");
    const Json& gens = detail::array_at(detail::member(parts[i], "generators", ip), ip + "/generators");
    for (size_t g = 0; g < gens.size(); ++g) {
      const std::string gp = ip + "/generators/" + std::to_string(g);
      const int k = detail::integer(detail::member(gens[g], "order", gp), gp + "/order");
      if (k < 0) throw io_error(gp + "/order: negative order");
      auto numer = polys_from_json(f, detail::member(gens[g], "numer", gp), gp + "/numer");
      if (numer.size() != V.rank()) throw io_error(gp + "/numer: expected " + std::to_string(V.rank()) + " coordinates");
      t.add(make_part(x, k, std::move(numer)));
    }
  }
  return t;
}

template <class F>
QuotPoint<F> quot_from_json(const F& f, const Json& j, const std::string& path = "") {
  Bundle<F> V = bundle_from_json(f, detail::member(j, "base", path), path + "/base");
  const size_t r = V.rank();
  RatMatrix<F> fin = matrix_from_json(f, detail::member(j, "finite", path), r, path + "/finite");
  RatMatrix<F> inf = matrix_from_json(f, detail::member(j, "infinity", path), r, path + "/infinity");
  const int d = detail::integer(detail::member(j, "colength", path), path + "/colength");
  return QuotPoint<F>{std::move(V), std::move(fin), std::move(inf), d};
}

/// Parses text as JSON, reporting syntax errors by byte offset.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw io_error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// Checks the schema version and kind of a document and returns its payload.
inline const Json& document_data(const Json& doc, const std::string& kind) {
  const Json& schema = detail::member(doc, "schema", "");
  if (schema != kSchemaVersion) throw io_error("/schema: unsupported schema version");
  const Json& k = detail::member(doc, "kind", "");
  if (k != kind) throw io_error("/kind: expected '" + kind + "'");
  return detail::member(doc, "data", "");
}

}  // namespace hecke
