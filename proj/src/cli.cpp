#include "trilap/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trilap/corpus.hpp"
#include "trilap/expansion.hpp"
#include "trilap/io.hpp"
#include "trilap/verify.hpp"

namespace trilap {
namespace {

Eigen::Matrix<double, Eigen::Dynamic, 2> grid_points(const TriangleDomain& tri, int divisions) {
  const Eigen::Index count =
      static_cast<Eigen::Index>(divisions + 1) * (divisions + 2) / 2;
  Eigen::Matrix<double, Eigen::Dynamic, 2> pts(count, 2);
  Eigen::Index row = 0;
  for (int i = 0; i <= divisions; ++i)
    for (int j = 0; j <= divisions - i; ++j, ++row) {
      const double l1 = static_cast<double>(i) / divisions;
      const double l2 = static_cast<double>(j) / divisions;
      const Point2 p = (1.0 - l1 - l2) * tri.vertices[0] + l1 * tri.vertices[1] +
                       l2 * tri.vertices[2];
      pts(row, 0) = p.x();
      pts(row, 1) = p.y();
    }
  return pts;
}

std::vector<Family> table_families(const CoefficientTable& table) {
  std::vector<Family> families;
  for (const auto& [idx, value] : table.entries) {
    (void)value;
    if (families.empty() || families.back() != idx.family) families.push_back(idx.family);
  }
  return families;
}

int with_output(const std::string& path, std::ostream& out, std::ostream& err,
                const std::function<void(std::ostream&)>& writer) {
  if (path == "-") {
    writer(out);
    return kExitOk;
  }
  std::ofstream file(path);
  if (!file) {
    err << "trilap: cannot open '" << path << "' for writing\n";
    return kExitUsage;
  }
  writer(file);
  return kExitOk;
}

const CorpusFunction& find_corpus_or_throw(const std::string& id) {
  if (const CorpusFunction* cf = find_corpus(id)) return *cf;
  std::ostringstream os;
  os << "unknown function '" << id << "'; available:";
  for (const CorpusFunction& cf : corpus()) os << ' ' << cf.id;
  throw std::invalid_argument(os.str());
}

struct BasisArgs {
  std::string family;
  int m = 0;
  int n = 0;
  std::string domain;
  int grid = 64;
  std::string out = "-";
};

int run_basis(const BasisArgs& args, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(args.family);
  TriangleKind domain = family_triangle(family);
  if (!args.domain.empty()) {
    domain = parse_domain(args.domain);
    const bool ok = domain == family_triangle(family) ||
                    (domain == TriangleKind::Equilateral && family != Family::SquareAntisym);
    if (!ok) throw std::invalid_argument("family '" + args.family +
                                         "' has no basis on domain '" + args.domain + "'");
  }
  if (!is_canonical(family, args.m, args.n)) {
    const IndexClass cls = classify_lattice_point(family, args.m, args.n);
    std::ostringstream os;
    os << "(" << args.m << ", " << args.n << ") is not a canonical label of family "
       << args.family << ": ";
    if (cls.kind == IndexClass::Kind::Zero)
      os << "that lattice point is identically zero";
    else
      os << "it duplicates " << (cls.sign < 0 ? "-" : "") << "(" << cls.target.m << ", "
         << cls.target.n << "); use the canonical label";
    throw std::invalid_argument(os.str());
  }
  if (args.grid < 1) throw std::invalid_argument("--grid must be >= 1");
  const EigenIndex idx = make_index(family, args.m, args.n);
  const TriangleDomain tri = reference_triangle(domain);
  const Eigen::Matrix<double, Eigen::Dynamic, 2> pts = grid_points(tri, args.grid);
  Eigen::VectorXd values(pts.rows());
  for (Eigen::Index i = 0; i < pts.rows(); ++i)
    values[i] = eval_closed(idx, Point2(pts(i, 0), pts(i, 1)));
  const double norm_sq =
      basis_norm_sq(idx) * (domain == TriangleKind::Equilateral ? 2.0 : 1.0);
  std::ostringstream meta;
  meta << "family=" << args.family << " m=" << args.m << " n=" << args.n
       << " domain=" << domain_name(domain) << " lambda=" << format_double(eigenvalue(idx))
       << " norm_sq=" << format_double(norm_sq);
  return with_output(args.out, out, err,
                     [&](std::ostream& os) { write_field_csv(os, pts, values, meta.str()); });
}

struct ExpandArgs {
  std::string function;
  int band = 8;
  std::string family;
  std::string backend = "quadrature";
  int order = 0;
  double tol = 1e-6;
  std::string out = "-";
  std::string format = "json";
};

void write_coefficients_csv(std::ostream& os, const CoefficientTable& table) {
  os << "# domain=" << domain_name(table.domain) << " N=" << table.band
     << " backend=" << backend_name(table.backend) << '\n';
  os << "family,m,n,value\n";
  for (const auto& [idx, value] : table.entries)
    os << family_name(idx.family) << ',' << idx.m << ',' << idx.n << ','
       << format_double(value) << '\n';
}

int run_expand(const ExpandArgs& args, std::ostream& out, std::ostream& err) {
  const CorpusFunction& cf = find_corpus_or_throw(args.function);
  const std::vector<Family> families =
      args.family.empty() ? cf.families : parse_family_set(args.family);
  const Backend backend = parse_backend(args.backend);
  const CoefficientTable table =
      backend == Backend::Quadrature
          ? analyze_quadrature(cf.f, cf.domain, families, args.band, args.order)
          : analyze_folded_transform(cf.f, cf.domain, families, args.band, args.order,
                                     args.tol);
  return with_output(args.out, out, err, [&](std::ostream& os) {
    if (args.format == "json")
      write_coefficients_json(os, table);
    else
      write_coefficients_csv(os, table);
  });
}

struct SynthArgs {
  std::string file;
  int grid = 64;
  std::string out = "-";
};

int run_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
  if (args.grid < 1) throw std::invalid_argument("--grid must be >= 1");
  std::ifstream file(args.file);
  if (!file) throw std::invalid_argument("cannot open coefficient file '" + args.file + "'");
  const CoefficientTable table = read_coefficients_json(file);
  const TriangleDomain tri = reference_triangle(table.domain);
  const Eigen::Matrix<double, Eigen::Dynamic, 2> pts = grid_points(tri, args.grid);
  const Eigen::VectorXd values = synthesize(table, pts);
  std::ostringstream meta;
  meta << "domain=" << domain_name(table.domain) << " family="
       << family_set_name(table_families(table)) << " N=" << table.band
       << " backend=" << backend_name(table.backend);
  return with_output(args.out, out, err,
                     [&](std::ostream& os) { write_field_csv(os, pts, values, meta.str()); });
}

struct ConvergeArgs {
  std::string function;
  std::vector<double> ps = {2.0};
  std::vector<int> bands = {4, 8, 16, 32};
  std::string family;
  std::string backend = "quadrature";
  int order = 0;
  std::string out = "-";
  std::string format = "csv";
};

int run_converge(const ConvergeArgs& args, std::ostream& out, std::ostream& err) {
  const CorpusFunction& cf = find_corpus_or_throw(args.function);
  const std::vector<Family> families =
      args.family.empty() ? cf.families : parse_family_set(args.family);
  const ConvergenceReport report =
      convergence_study(cf.f, cf.id, cf.domain, families, args.ps, args.bands,
                        parse_backend(args.backend), args.order);
  return with_output(args.out, out, err, [&](std::ostream& os) {
    if (args.format == "csv") {
      write_convergence_csv(os, report);
      return;
    }
    nlohmann::ordered_json doc;
    doc["backend"] = backend_name(report.backend);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const ConvergenceRow& row : report.rows) {
      nlohmann::ordered_json j;
      j["function"] = row.function;
      j["p"] = row.p;
      j["N"] = row.band;
      j["error"] = row.error;
      j["seconds"] = row.seconds;
      doc["rows"].push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
  });
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string format = "text";
  SuiteOptions options;
};

int run_verify(const VerifyArgs& args, std::ostream& out) {
  const std::vector<std::string> suites =
      args.suites.empty() ? suite_names() : args.suites;
  int failures = 0;
  int total = 0;
  nlohmann::ordered_json doc;
  doc["suites"] = nlohmann::ordered_json::array();
  for (const std::string& name : suites) {
    const SuiteResult suite = run_suite(name, args.options);
    nlohmann::ordered_json js;
    js["name"] = name;
    js["pass"] = suite.pass;
    js["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& check : suite.checks) {
      ++total;
      if (!check.pass) ++failures;
      if (args.format == "json") {
        nlohmann::ordered_json jc;
        jc["name"] = check.name;
        jc["pass"] = check.pass;
        jc["max_dev"] = check.max_dev;
        jc["tol"] = check.tol;
        if (!check.counterexample.empty()) jc["counterexample"] = check.counterexample;
        js["checks"].push_back(std::move(jc));
        continue;
      }
      out << (check.pass ? "[PASS] " : "[FAIL] ") << name << '/' << check.name
          << ": max deviation " << std::scientific << std::setprecision(3) << check.max_dev
          << " (tolerance " << check.tol << ")" << std::defaultfloat;
      if (!check.pass && !check.counterexample.empty())
        out << " — " << check.counterexample;
      out << '\n';
    }
    doc["suites"].push_back(std::move(js));
  }
  if (args.format == "json") {
    doc["passed"] = total - failures;
    doc["total"] = total;
    out << doc.dump(2) << '\n';
  } else {
    out << (total - failures) << " of " << total << " checks passed\n";
  }
  return failures == 0 ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenbases of three reflection-tiled triangles: evaluation, expansion, "
               "and empirical verification",
               "trilap"};
  app.require_subcommand(1);
  app.set_config("--config");

  BasisArgs basis_args;
  CLI::App* basis = app.add_subcommand("basis", "Evaluate one basis function on a grid");
  basis->add_option("--family", basis_args.family, "square | antisym | sym")->required();
  basis->add_option("-m", basis_args.m, "first label component")->required();
  basis->add_option("-n", basis_args.n, "second label component")->required();
  basis->add_option("--domain", basis_args.domain,
                    "evaluation domain (defaults to the family's triangle)");
  basis->add_option("--grid", basis_args.grid, "barycentric grid divisions");
  basis->add_option("--out", basis_args.out, "output path, '-' for stdout");

  ExpandArgs expand_args;
  CLI::App* expand = app.add_subcommand("expand", "Expand a built-in function");
  expand->add_option("function", expand_args.function, "corpus function id")->required();
  expand->add_option("--N", expand_args.band, "truncation band (labels with n <= N)");
  expand->add_option("--family", expand_args.family, "family set, e.g. antisym+sym");
  expand->add_option("--backend", expand_args.backend, "quadrature | transform");
  expand->add_option("--order", expand_args.order, "quadrature order (0 = automatic)");
  expand->add_option("--tol", expand_args.tol, "transform checksum tolerance");
  expand->add_option("--out", expand_args.out, "output path, '-' for stdout");
  expand->add_option("--format", expand_args.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand("synth", "Evaluate a stored expansion on a grid");
  synth->add_option("file", synth_args.file, "coefficient JSON file")->required();
  synth->add_option("--grid", synth_args.grid, "barycentric grid divisions");
  synth->add_option("--out", synth_args.out, "output path, '-' for stdout");

  ConvergeArgs converge_args;
  CLI::App* converge =
      app.add_subcommand("converge", "Truncation-error study over several bands");
  converge->add_option("function", converge_args.function, "corpus function id")->required();
  converge->add_option("--p", converge_args.ps, "L^p exponents (repeatable)");
  converge->add_option("--N", converge_args.bands, "bands (repeatable)");
  converge->add_option("--family", converge_args.family, "family set override");
  converge->add_option("--backend", converge_args.backend, "quadrature | transform");
  converge->add_option("--order", converge_args.order, "quadrature order (0 = automatic)");
  converge->add_option("--out", converge_args.out, "output path, '-' for stdout");
  converge->add_option("--format", converge_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suites", verify_args.suites, "suite names (default: all)");
  verify->add_option("--format", verify_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--N", verify_args.options.band, "index band for basis-level checks");
  verify->add_option("--order", verify_args.options.order, "quadrature order");
  verify->add_option("--seed", verify_args.options.seed, "seed for randomized checks");
  verify->add_option("--fold-range", verify_args.options.fold_range,
                     "lattice range for the folding sweep");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("trilap");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(basis)) return run_basis(basis_args, out, err);
    if (app.got_subcommand(expand)) return run_expand(expand_args, out, err);
    if (app.got_subcommand(synth)) return run_synth(synth_args, out, err);
    if (app.got_subcommand(converge)) return run_converge(converge_args, out, err);
    if (app.got_subcommand(verify)) return run_verify(verify_args, out);
  } catch (const ChecksumError& e) {
    err << "trilap: " << e.what() << '\n';
    return kExitChecksum;
  } catch (const std::exception& e) {
    err << "trilap: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trilap
