// crinv — exact CR invariants of Sasakian eta-Einstein structures.
//
// Exit codes: 0 success; 2 usage or parse errors (bad flags, malformed
// rationals or JSON); 3 domain violations (invariant breaches such as
// non-coprime Y^{p,q} indices or lambda = 0 volume back-outs).

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crinv/crinv.hpp"

namespace {

crinv::OutputFormat make_format(const std::string& name,
                                const std::optional<unsigned>& digits) {
  crinv::OutputFormat fmt;
  if (name == "json")
    fmt.kind = crinv::OutputFormat::Kind::Json;
  else if (name == "table")
    fmt.kind = crinv::OutputFormat::Kind::Table;
  else
    throw crinv::ParseError("unknown format '" + name +
                            "' (expected 'table' or 'json')");
  fmt.decimal_digits = digits;
  return fmt;
}

/// Per-subcommand output controls. --format defaults to $CRINV_FORMAT when
/// set, else "table"; --digits (only on subcommands that render exact
/// values) adds decimal renderings next to them.
struct OutputOptions {
  std::string format;
  unsigned digits = 0;
  CLI::Option* digits_opt = nullptr;

  void attach(CLI::App* cmd, bool with_digits = true) {
    const char* env = std::getenv("CRINV_FORMAT");
    format = (env && *env) ? env : "table";
    cmd->add_option("--format", format, "Output format: table or json")
        ->capture_default_str();
    if (with_digits)
      digits_opt = cmd->add_option(
          "--digits", digits,
          "Also render values as decimals (1..50 digits)");
  }

  crinv::OutputFormat value() const {
    std::optional<unsigned> d;
    if (digits_opt && digits_opt->count() > 0) d = digits;
    return make_format(format, d);
  }
};

crinv::Rational parse_cli_rational(const std::string& text, const char* what) {
  try {
    return crinv::parse_rational(text);
  } catch (const crinv::ParseError& e) {
    throw crinv::ParseError(std::string("invalid ") + what + ": " + e.what());
  }
}

unsigned parse_cli_unsigned(const std::string& text, const char* what) {
  const crinv::Rational r = parse_cli_rational(text, what);
  if (denominator(r) != 1 || r < 0 || r > 1000000)
    throw crinv::ParseError(std::string("invalid ") + what +
                            ": expected an integer in 0..1000000");
  return numerator(r).convert_to<unsigned>();
}

std::string read_spec_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw crinv::ParseError("cannot open spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Option storage for `qprime`: exactly one spec source may be given.
struct QprimeArgs {
  unsigned sphere_n = 0;
  std::vector<unsigned> ypq;
  std::vector<std::string> projective;
  unsigned fermat_n = 0;
  std::vector<unsigned> grassmannian;
  std::vector<std::string> tube;
  std::string spec_path;

  CLI::Option* sphere_opt = nullptr;
  CLI::Option* ypq_opt = nullptr;
  CLI::Option* projective_opt = nullptr;
  CLI::Option* fermat_opt = nullptr;
  CLI::Option* grassmannian_opt = nullptr;
  CLI::Option* tube_opt = nullptr;
  CLI::Option* spec_opt = nullptr;

  void attach(CLI::App* cmd) {
    auto* source = cmd->add_option_group("spec", "Manifold selection");
    sphere_opt = source->add_option("--sphere", sphere_n,
                                    "Round sphere S^{2n+1}: N");
    ypq_opt = source->add_option("--ypq", ypq, "Y^{p,q} indices: P Q")
                  ->expected(2);
    projective_opt =
        source
            ->add_option("--projective-link", projective,
                         "Projective link: N LAMBDA DEGREE")
            ->expected(3);
    fermat_opt = source->add_option("--fermat", fermat_n,
                                    "Fermat quadric link: N");
    grassmannian_opt = source
                           ->add_option("--grassmannian", grassmannian,
                                        "Grassmannian link: K N_AMB")
                           ->expected(2);
    tube_opt = source
                   ->add_option("--surface-tube", tube,
                                "Surface-product tube: N P_EIG")
                   ->expected(2);
    spec_opt = source->add_option("--spec", spec_path,
                                  "ManifoldSpec JSON file ('-' for stdin)");
    source->require_option(1);
  }

  crinv::ManifoldSpec value() const {
    if (sphere_opt->count()) return crinv::Sphere{sphere_n};
    if (ypq_opt->count()) return crinv::Ypq{ypq[0], ypq[1]};
    if (projective_opt->count()) {
      unsigned n = 0;
      try {
        n = static_cast<unsigned>(std::stoul(projective[0]));
      } catch (const std::exception&) {
        throw crinv::ParseError("invalid projective-link dimension '" +
                                projective[0] + "'");
      }
      const crinv::Rational lambda =
          parse_cli_rational(projective[1], "lambda");
      const crinv::Rational deg = parse_cli_rational(projective[2], "degree");
      if (denominator(deg) != 1)
        throw crinv::ParseError("projective-link degree must be an integer");
      return crinv::ProjectiveLink{n, lambda, numerator(deg)};
    }
    if (fermat_opt->count()) return crinv::FermatQuadricLink{fermat_n};
    if (grassmannian_opt->count())
      return crinv::GrassmannianLink{grassmannian[0], grassmannian[1]};
    if (tube_opt->count()) {
      unsigned n = 0;
      try {
        n = static_cast<unsigned>(std::stoul(tube[0]));
      } catch (const std::exception&) {
        throw crinv::ParseError("invalid surface-tube dimension '" + tube[0] +
                                "'");
      }
      return crinv::SurfaceProductTube{
          n, parse_cli_rational(tube[1], "p_eig")};
    }
    const crinv::Json j = crinv::Json::parse(read_spec_text(spec_path));
    return crinv::manifold_spec_from_json(j);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact CR invariants of Sasakian eta-Einstein structures"};
  app.require_subcommand(1);

  // qprime
  auto* qprime = app.add_subcommand(
      "qprime", "Total Q'-curvature report for a catalog manifold");
  QprimeArgs qprime_args;
  qprime_args.attach(qprime);
  OutputOptions qprime_out;
  qprime_out.attach(qprime);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Second-variation sign of one (p, q) mode");
  std::string cl_n, cl_lambda, cl_p, cl_q;
  classify->add_option("--n", cl_n, "CR dimension n")->required();
  classify->add_option("--lambda", cl_lambda, "eta-Einstein constant lambda")
      ->required();
  classify->add_option("--p", cl_p, "Delta_b eigenvalue p (rational)")
      ->required();
  classify->add_option("--q", cl_q, "sqrt(-1) xi eigenvalue q (rational)")
      ->required();
  OutputOptions classify_out;
  classify_out.attach(classify);

  // scan
  auto* scan = app.add_subcommand(
      "scan", "Classify every admissible mode on a rational grid");
  std::string sc_n, sc_lambda, sc_pmax, sc_qmax, sc_denom;
  scan->add_option("--n", sc_n, "CR dimension n")->required();
  scan->add_option("--lambda", sc_lambda, "eta-Einstein constant lambda")
      ->required();
  scan->add_option("--p-max", sc_pmax, "largest p to scan (rational)")
      ->required();
  scan->add_option("--q-max", sc_qmax, "largest |q| to scan (rational)")
      ->required();
  scan->add_option("--denom", sc_denom, "denominator bound of the grid")
      ->required();
  OutputOptions scan_out;
  scan_out.attach(scan, false);

  // degree
  auto* degree = app.add_subcommand(
      "degree", "Pluecker degree of the Grassmannian G(k, n)");
  unsigned dg_k = 0, dg_n = 0;
  degree->add_option("--k", dg_k, "subspace dimension k")->required();
  degree->add_option("--n", dg_n, "ambient dimension n")->required();
  OutputOptions degree_out;
  degree_out.attach(degree, false);

  // counterexample
  auto* counter = app.add_subcommand(
      "counterexample", "Canonical Thm 1.6 counterexample modes");
  unsigned ce_n = 0;
  std::string ce_kind;
  counter->add_option("--n", ce_n, "CR dimension n")->required();
  counter->add_option("--kind", ce_kind, "vanishing or positive")
      ->required()
      ->check(CLI::IsMember({"vanishing", "positive"}));
  OutputOptions counter_out;
  counter_out.attach(counter);

  // sphere-modes
  auto* sphere_modes = app.add_subcommand(
      "sphere-modes", "Bigraded spherical-harmonic modes on S^{2n+1}");
  unsigned sm_n = 0, sm_max = 0;
  sphere_modes->add_option("--n", sm_n, "CR dimension n")->required();
  sphere_modes->add_option("--max-degree", sm_max, "largest a+b to list")
      ->required();
  OutputOptions sphere_out;
  sphere_out.attach(sphere_modes, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (qprime->parsed()) {
      const crinv::ManifoldSpec spec = qprime_args.value();
      const crinv::InvariantReport report = crinv::total_qprime(spec);
      std::cout << crinv::render_report(spec, report, qprime_out.value());
    } else if (classify->parsed()) {
      const crinv::Geometry g(parse_cli_unsigned(cl_n, "n"),
                              parse_cli_rational(cl_lambda, "lambda"));
      const crinv::Mode m(parse_cli_rational(cl_p, "p"),
                          parse_cli_rational(cl_q, "q"));
      std::cout << crinv::render_classification(
          g, crinv::classify_mode(g, m), classify_out.value());
    } else if (scan->parsed()) {
      const crinv::Geometry g(parse_cli_unsigned(sc_n, "n"),
                              parse_cli_rational(sc_lambda, "lambda"));
      const auto modes = crinv::scan_modes(
          g, parse_cli_rational(sc_pmax, "p-max"),
          parse_cli_rational(sc_qmax, "q-max"),
          parse_cli_unsigned(sc_denom, "denom"));
      std::cout << crinv::render_scan(g, modes, scan_out.value());
    } else if (degree->parsed()) {
      std::cout << crinv::render_degree(
          dg_k, dg_n, crinv::grassmannian_degree(dg_k, dg_n),
          degree_out.value());
    } else if (counter->parsed()) {
      const crinv::Counterexample ce =
          ce_kind == "vanishing" ? crinv::counterexample_vanishing(ce_n)
                                 : crinv::counterexample_positive(ce_n);
      std::cout << crinv::render_counterexample(ce_kind, ce,
                                                counter_out.value());
    } else if (sphere_modes->parsed()) {
      std::cout << crinv::render_sphere_modes(
          sm_n, sm_max, crinv::enumerate_modes(sm_n, sm_max),
          sphere_out.value());
    }
    return 0;
  } catch (const crinv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const crinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
