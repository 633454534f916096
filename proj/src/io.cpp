#include "trilap/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace trilap {
namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::SquareAntisym: return "square";
    case Family::EquiAntisym: return "antisym";
    case Family::EquiSym: return "sym";
  }
  throw std::invalid_argument("family_name: bad family");
}

std::string domain_name(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::Isosceles45: return "isosceles45";
    case TriangleKind::Hemiequilateral: return "hemiequilateral";
    case TriangleKind::Equilateral: return "equilateral";
  }
  throw std::invalid_argument("domain_name: bad domain");
}

std::string backend_name(Backend backend) {
  return backend == Backend::Quadrature ? "quadrature" : "transform";
}

Family parse_family(const std::string& s) {
  if (s == "square") return Family::SquareAntisym;
  if (s == "antisym") return Family::EquiAntisym;
  if (s == "sym") return Family::EquiSym;
  throw std::invalid_argument("unknown family '" + s + "' (square | antisym | sym)");
}

TriangleKind parse_domain(const std::string& s) {
  if (s == "isosceles45") return TriangleKind::Isosceles45;
  if (s == "hemiequilateral") return TriangleKind::Hemiequilateral;
  if (s == "equilateral") return TriangleKind::Equilateral;
  throw std::invalid_argument("unknown domain '" + s +
                              "' (isosceles45 | hemiequilateral | equilateral)");
}

Backend parse_backend(const std::string& s) {
  if (s == "quadrature") return Backend::Quadrature;
  if (s == "transform") return Backend::Transform;
  throw std::invalid_argument("unknown backend '" + s + "' (quadrature | transform)");
}

std::string family_set_name(const std::vector<Family>& families) {
  std::string out;
  for (const Family family : families) {
    if (!out.empty()) out += '+';
    out += family_name(family);
  }
  return out;
}

std::vector<Family> parse_family_set(const std::string& s) {
  std::vector<Family> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t plus = s.find('+', start);
    const std::size_t end = plus == std::string::npos ? s.size() : plus;
    out.push_back(parse_family(s.substr(start, end - start)));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty family set");
  return out;
}

void write_coefficients_json(std::ostream& os, const CoefficientTable& table) {
  std::vector<Family> families;
  for (const auto& [idx, value] : table.entries) {
    (void)value;
    if (families.empty() || families.back() != idx.family) families.push_back(idx.family);
  }
  ordered_json doc;
  doc["domain"] = domain_name(table.domain);
  doc["family"] = family_set_name(families);
  doc["N"] = table.band;
  doc["backend"] = backend_name(table.backend);
  doc["entries"] = ordered_json::array();
  for (const auto& [idx, value] : table.entries) {
    ordered_json entry;
    entry["family"] = family_name(idx.family);
    entry["m"] = idx.m;
    entry["n"] = idx.n;
    entry["value"] = value;
    doc["entries"].push_back(std::move(entry));
  }
  os << doc.dump(2) << '\n';
}

CoefficientTable read_coefficients_json(std::istream& is) {
  const ordered_json doc = ordered_json::parse(is);
  CoefficientTable table;
  table.domain = parse_domain(doc.at("domain").get<std::string>());
  table.band = doc.at("N").get<int>();
  table.backend = parse_backend(doc.at("backend").get<std::string>());
  const std::vector<Family> families =
      parse_family_set(doc.at("family").get<std::string>());
  if (table.band < 1) throw std::invalid_argument("coefficient file: N must be >= 1");
  for (const auto& entry : doc.at("entries")) {
    const Family family = parse_family(entry.at("family").get<std::string>());
    const int m = entry.at("m").get<int>();
    const int n = entry.at("n").get<int>();
    if (std::find(families.begin(), families.end(), family) == families.end())
      throw std::invalid_argument("coefficient file: entry family not in declared set");
    if (n > table.band)
      throw std::invalid_argument("coefficient file: entry exceeds the declared band");
    const EigenIndex idx = make_index(family, m, n);
    if (!table.entries.emplace(idx, entry.at("value").get<double>()).second)
      throw std::invalid_argument("coefficient file: duplicate entry");
  }
  return table;
}

void write_field_csv(std::ostream& os, const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                     const Eigen::VectorXd& values, const std::string& metadata) {
  if (points.rows() != values.size())
    throw std::invalid_argument("write_field_csv: points/values size mismatch");
  if (!metadata.empty()) os << "# " << metadata << '\n';
  os << "x,y,value\n";
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    os << format_double(points(i, 0)) << ',' << format_double(points(i, 1)) << ','
       << format_double(values[i]) << '\n';
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
  os << "function,p,N,error,seconds\n";
  for (const ConvergenceRow& row : report.rows)
    os << row.function << ',' << format_double(row.p) << ',' << row.band << ','
       << format_double(row.error) << ',' << format_double(row.seconds) << '\n';
}

}  // namespace trilap
