#pragma once

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crinv/catalog.hpp"
#include "crinv/errors.hpp"
#include "crinv/exact_scalar.hpp"
#include "crinv/rational.hpp"
#include "crinv/sphere_oracle.hpp"
#include "crinv/spectral.hpp"
#include "crinv/variation.hpp"

namespace crinv {

/// Insertion-ordered JSON so emitted payloads are deterministic and keep
/// schema_version first. Exact rationals travel as "num/den" strings ("num"
/// when the denominator is 1); n, k, pi-exponents and the discriminant are
/// plain JSON numbers; unbounded integers (degrees) are strings.
using Json = nlohmann::ordered_json;

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string())
    throw ParseError("expected a rational string, got: " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (denominator(r) != 1)
      throw ParseError("expected an integer, got: " + j.dump());
    return numerator(r);
  }
  throw ParseError("expected an integer, got: " + j.dump());
}

inline unsigned unsigned_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string("expected a non-negative integer for ") +
                     what + ", got: " + j.dump());
  return static_cast<unsigned>(j.get<long long>());
}

inline const Json& field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace detail

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const ExactScalar& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back({{"pi", e}, {"a", to_string(c.a())}, {"b", to_string(c.b())}});
  long long d = 0;
  if (x.d() != 0) {
    if (x.d() > Integer(std::numeric_limits<long long>::max()))
      throw Error("discriminant too large for JSON serialization");
    d = x.d().convert_to<long long>();
  }
  return Json{{"d", d}, {"terms", std::move(terms)}};
}

inline ExactScalar exact_scalar_from_json(const Json& j) {
  const Integer d = detail::integer_from_json(detail::field(j, "d"));
  ExactScalar x;
  for (const Json& t : detail::field(j, "terms")) {
    const unsigned e = detail::unsigned_from_json(detail::field(t, "pi"), "pi");
    const Rational a = detail::rational_from_json(detail::field(t, "a"));
    const Rational b = detail::rational_from_json(detail::field(t, "b"));
    x = x + ExactScalar::term(QuadRational(a, b, b == 0 ? Integer(0) : d), e);
  }
  return x;
}

inline Json to_json(const Geometry& g) {
  return Json{{"n", g.n}, {"lambda", to_string(g.lambda)}};
}

inline Geometry geometry_from_json(const Json& j) {
  return Geometry(detail::unsigned_from_json(detail::field(j, "n"), "n"),
                  detail::rational_from_json(detail::field(j, "lambda")));
}

inline Json to_json(const Mode& m) {
  return Json{{"p", to_string(m.p)}, {"q", to_string(m.q)}};
}

inline Mode mode_from_json(const Json& j) {
  return Mode(detail::rational_from_json(detail::field(j, "p")),
              detail::rational_from_json(detail::field(j, "q")));
}

inline SvSign sv_sign_from_string(const std::string& s) {
  if (s == "Negative") return SvSign::Negative;
  if (s == "Zero") return SvSign::Zero;
  if (s == "Positive") return SvSign::Positive;
  throw ParseError("unknown sv_sign: '" + s + "'");
}

inline Json to_json(const ModeClassification& c) {
  return Json{{"mode", to_json(c.mode)},
              {"p11", to_string(c.p11)},
              {"edge_product", to_string(c.edge_product)},
              {"middle_product", to_string(c.middle_product)},
              {"in_ker_d", c.in_ker_d},
              {"in_ker_dbar", c.in_ker_dbar},
              {"sv_sign", to_string(c.sv_sign)}};
}

inline ModeClassification classification_from_json(const Json& j) {
  return ModeClassification{
      mode_from_json(detail::field(j, "mode")),
      detail::rational_from_json(detail::field(j, "p11")),
      detail::rational_from_json(detail::field(j, "edge_product")),
      detail::rational_from_json(detail::field(j, "middle_product")),
      detail::field(j, "in_ker_d").get<bool>(),
      detail::field(j, "in_ker_dbar").get<bool>(),
      sv_sign_from_string(detail::field(j, "sv_sign").get<std::string>())};
}

inline Json to_json(const InvariantReport& r) {
  Json j{{"geometry", to_json(r.geometry)},
         {"total_qprime", to_json(r.total_qprime)},
         {"qprime_density", to_json(r.qprime_density)},
         {"volume", to_json(r.volume)}};
  j["degree"] = r.degree ? Json(r.degree->str()) : Json(nullptr);
  return j;
}

inline InvariantReport report_from_json(const Json& j) {
  std::optional<Integer> degree;
  const Json& d = detail::field(j, "degree");
  if (!d.is_null()) degree = detail::integer_from_json(d);
  return InvariantReport{
      geometry_from_json(detail::field(j, "geometry")),
      exact_scalar_from_json(detail::field(j, "total_qprime")),
      exact_scalar_from_json(detail::field(j, "qprime_density")),
      exact_scalar_from_json(detail::field(j, "volume")),
      std::move(degree)};
}

inline const char* kind_of(const ManifoldSpec& spec) {
  if (std::holds_alternative<Sphere>(spec)) return "sphere";
  if (std::holds_alternative<Ypq>(spec)) return "ypq";
  if (std::holds_alternative<ProjectiveLink>(spec)) return "projective_link";
  if (std::holds_alternative<FermatQuadricLink>(spec)) return "fermat_quadric";
  if (std::holds_alternative<GrassmannianLink>(spec)) return "grassmannian";
  return "surface_tube";
}

inline Json to_json(const ManifoldSpec& spec) {
  Json j{{"kind", kind_of(spec)}};
  if (const auto* s = std::get_if<Sphere>(&spec)) {
    j["n"] = s->n;
  } else if (const auto* y = std::get_if<Ypq>(&spec)) {
    j["p"] = y->p;
    j["q"] = y->q;
  } else if (const auto* l = std::get_if<ProjectiveLink>(&spec)) {
    j["n"] = l->n;
    j["lambda"] = to_string(l->lambda);
    j["degree"] = l->degree.str();
  } else if (const auto* f = std::get_if<FermatQuadricLink>(&spec)) {
    j["n"] = f->n;
  } else if (const auto* g = std::get_if<GrassmannianLink>(&spec)) {
    j["k"] = g->k;
    j["n_amb"] = g->n_amb;
  } else {
    const auto& t = std::get<SurfaceProductTube>(spec);
    j["n"] = t.n;
    j["p_eig"] = to_string(t.p_eig);
  }
  return j;
}

inline ManifoldSpec manifold_spec_from_json(const Json& j) {
  using detail::field;
  using detail::rational_from_json;
  using detail::unsigned_from_json;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "sphere")
    return Sphere{unsigned_from_json(field(j, "n"), "n")};
  if (kind == "ypq")
    return Ypq{unsigned_from_json(field(j, "p"), "p"),
               unsigned_from_json(field(j, "q"), "q")};
  if (kind == "projective_link")
    return ProjectiveLink{unsigned_from_json(field(j, "n"), "n"),
                          rational_from_json(field(j, "lambda")),
                          detail::integer_from_json(field(j, "degree"))};
  if (kind == "fermat_quadric")
    return FermatQuadricLink{unsigned_from_json(field(j, "n"), "n")};
  if (kind == "grassmannian")
    return GrassmannianLink{unsigned_from_json(field(j, "k"), "k"),
                            unsigned_from_json(field(j, "n_amb"), "n_amb")};
  if (kind == "surface_tube")
    return SurfaceProductTube{unsigned_from_json(field(j, "n"), "n"),
                              rational_from_json(field(j, "p_eig"))};
  throw ParseError("unknown manifold kind: '" + kind + "'");
}

inline Json to_json(const Bidegree& bd) {
  return Json{{"a", bd.a}, {"b", bd.b}};
}

}  // namespace crinv
