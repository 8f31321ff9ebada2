#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crinv/catalog.hpp"
#include "crinv/serialize.hpp"
#include "crinv/sphere_oracle.hpp"
#include "crinv/variation.hpp"

namespace crinv {

inline constexpr int kSchemaVersion = 1;
inline constexpr unsigned kMaxDecimalDigits = 50;

/// Output format for the CLI: JSON or aligned table, plus an optional
/// decimal-rendering digit count (<= 50) for the exact values.
struct OutputFormat {
  enum class Kind { Json, Table } kind = Kind::Table;
  std::optional<unsigned> decimal_digits;
};

namespace detail {

inline void check_digits(const OutputFormat& fmt) {
  if (fmt.decimal_digits &&
      (*fmt.decimal_digits < 1 || *fmt.decimal_digits > kMaxDecimalDigits))
    throw ParseError("decimal digits must be in 1..50");
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

/// "key:             value" rows with a shared key column.
class KeyValueTable {
 public:
  void row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
  }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size() + 1);
    std::ostringstream out;
    for (const auto& [k, v] : rows_) out << pad(k + ":", width + 2) << v << "\n";
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

/// Fixed-width columnar listing with a header row.
class ColumnTable {
 public:
  explicit ColumnTable(std::vector<std::string> header)
      : header_(std::move(header)) {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  std::string str() const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    const auto emit = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << (c + 1 < r.size() ? pad(r[c], width[c] + 2) : r[c]);
      }
      out << "\n";
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out.str();
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline std::string scalar_cell(const ExactScalar& x, const OutputFormat& fmt) {
  std::string s = x.str();
  if (fmt.decimal_digits) s += "  ~ " + to_decimal(x, *fmt.decimal_digits);
  return s;
}

inline std::string spec_label(const ManifoldSpec& spec) {
  std::ostringstream out;
  out << kind_of(spec);
  if (const auto* s = std::get_if<Sphere>(&spec)) {
    out << "(n=" << s->n << ")";
  } else if (const auto* y = std::get_if<Ypq>(&spec)) {
    out << "(p=" << y->p << ", q=" << y->q << ")";
  } else if (const auto* l = std::get_if<ProjectiveLink>(&spec)) {
    out << "(n=" << l->n << ", lambda=" << to_string(l->lambda)
        << ", degree=" << l->degree.str() << ")";
  } else if (const auto* f = std::get_if<FermatQuadricLink>(&spec)) {
    out << "(n=" << f->n << ")";
  } else if (const auto* g = std::get_if<GrassmannianLink>(&spec)) {
    out << "(k=" << g->k << ", n_amb=" << g->n_amb << ")";
  } else {
    const auto& t = std::get<SurfaceProductTube>(spec);
    out << "(n=" << t.n << ", p_eig=" << to_string(t.p_eig) << ")";
  }
  return out.str();
}

inline Json payload(const char* command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

}  // namespace detail

/// The `qprime` payload: spec echo plus the full invariant report.
inline std::string render_report(const ManifoldSpec& spec,
                                 const InvariantReport& report,
                                 const OutputFormat& fmt) {
  detail::check_digits(fmt);
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("qprime");
    j["spec"] = to_json(spec);
    Json r = to_json(report);
    for (auto& [key, value] : r.items()) j[key] = value;
    if (fmt.decimal_digits) {
      j["decimal"] = Json{
          {"digits", *fmt.decimal_digits},
          {"total_qprime", to_decimal(report.total_qprime, *fmt.decimal_digits)},
          {"qprime_density",
           to_decimal(report.qprime_density, *fmt.decimal_digits)},
          {"volume", to_decimal(report.volume, *fmt.decimal_digits)}};
    }
    return j.dump(2) + "\n";
  }
  detail::KeyValueTable t;
  t.row("kind", detail::spec_label(spec));
  t.row("n", std::to_string(report.geometry.n));
  t.row("lambda", to_string(report.geometry.lambda));
  if (report.degree) t.row("degree", report.degree->str());
  t.row("total_qprime", detail::scalar_cell(report.total_qprime, fmt));
  t.row("qprime_density", detail::scalar_cell(report.qprime_density, fmt));
  t.row("volume", detail::scalar_cell(report.volume, fmt));
  return t.str();
}

namespace detail {

inline void classification_rows(KeyValueTable& t, const ModeClassification& c,
                                const OutputFormat& fmt) {
  t.row("mode", "p=" + to_string(c.mode.p) + ", q=" + to_string(c.mode.q));
  t.row("p11", scalar_cell(ExactScalar(c.p11), fmt));
  t.row("edge_product", to_string(c.edge_product));
  t.row("middle_product", to_string(c.middle_product));
  t.row("in_ker_d", c.in_ker_d ? "true" : "false");
  t.row("in_ker_dbar", c.in_ker_dbar ? "true" : "false");
  t.row("sv_sign", to_string(c.sv_sign));
}

}  // namespace detail

/// The `classify` payload.
inline std::string render_classification(const Geometry& g,
                                         const ModeClassification& c,
                                         const OutputFormat& fmt) {
  detail::check_digits(fmt);
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("classify");
    j["geometry"] = to_json(g);
    Json r = to_json(c);
    for (auto& [key, value] : r.items()) j[key] = value;
    return j.dump(2) + "\n";
  }
  detail::KeyValueTable t;
  t.row("n", std::to_string(g.n));
  t.row("lambda", to_string(g.lambda));
  detail::classification_rows(t, c, fmt);
  return t.str();
}

/// The `scan` payload: the filtered classifications plus per-sign counts.
inline std::string render_scan(const Geometry& g,
                               const std::vector<ModeClassification>& modes,
                               const OutputFormat& fmt) {
  detail::check_digits(fmt);
  unsigned negative = 0, zero = 0, positive = 0;
  for (const auto& c : modes) {
    if (c.sv_sign == SvSign::Negative) ++negative;
    if (c.sv_sign == SvSign::Zero) ++zero;
    if (c.sv_sign == SvSign::Positive) ++positive;
  }
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("scan");
    j["geometry"] = to_json(g);
    Json rows = Json::array();
    for (const auto& c : modes) rows.push_back(to_json(c));
    j["modes"] = std::move(rows);
    j["summary"] =
        Json{{"negative", negative}, {"zero", zero}, {"positive", positive}};
    return j.dump(2) + "\n";
  }
  detail::ColumnTable t({"p", "q", "p11", "edge", "middle", "ker_d",
                         "ker_dbar", "sv_sign"});
  for (const auto& c : modes)
    t.row({to_string(c.mode.p), to_string(c.mode.q), to_string(c.p11),
           to_string(c.edge_product), to_string(c.middle_product),
           c.in_ker_d ? "true" : "false", c.in_ker_dbar ? "true" : "false",
           to_string(c.sv_sign)});
  std::ostringstream out;
  out << t.str();
  out << "summary: negative: " << negative << ", zero: " << zero
      << ", positive: " << positive << "\n";
  return out.str();
}

/// The `degree` payload.
inline std::string render_degree(unsigned k, unsigned n_amb,
                                 const Integer& degree,
                                 const OutputFormat& fmt) {
  detail::check_digits(fmt);
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("degree");
    j["k"] = k;
    j["n_amb"] = n_amb;
    j["degree"] = degree.str();
    return j.dump(2) + "\n";
  }
  return degree.str() + "\n";
}

/// The `counterexample` payload.
inline std::string render_counterexample(const std::string& kind,
                                         const Counterexample& ce,
                                         const OutputFormat& fmt) {
  detail::check_digits(fmt);
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("counterexample");
    j["kind"] = kind;
    j["geometry"] = to_json(ce.geometry);
    j["mode"] = to_json(ce.mode);
    j["classification"] = to_json(ce.classification);
    return j.dump(2) + "\n";
  }
  detail::KeyValueTable t;
  t.row("kind", kind);
  t.row("n", std::to_string(ce.geometry.n));
  t.row("lambda", to_string(ce.geometry.lambda));
  detail::classification_rows(t, ce.classification, fmt);
  return t.str();
}

/// The `sphere-modes` payload.
inline std::string render_sphere_modes(
    unsigned n, unsigned max_degree,
    const std::vector<std::pair<Bidegree, Mode>>& modes,
    const OutputFormat& fmt) {
  detail::check_digits(fmt);
  if (fmt.kind == OutputFormat::Kind::Json) {
    Json j = detail::payload("sphere-modes");
    j["n"] = n;
    j["max_degree"] = max_degree;
    Json rows = Json::array();
    for (const auto& [bd, m] : modes)
      rows.push_back(Json{{"a", bd.a},
                          {"b", bd.b},
                          {"p", to_string(m.p)},
                          {"q", to_string(m.q)}});
    j["modes"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  detail::ColumnTable t({"a", "b", "p", "q"});
  for (const auto& [bd, m] : modes)
    t.row({std::to_string(bd.a), std::to_string(bd.b), to_string(m.p),
           to_string(m.q)});
  return t.str();
}

}  // namespace crinv
