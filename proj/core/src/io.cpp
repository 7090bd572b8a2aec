#include "symtoep/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace symtoep {
namespace {

using nlohmann::json;

void append_array(std::string& out, const RealVector& v) {
  out += '[';
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_full(v[i]);
  }
  out += ']';
}

void append_array(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_full(v[i]);
  }
  out += ']';
}

double snap_endpoint(double value) {
  const double pi = std::numbers::pi;
  if (std::abs(value - pi) < 1e-6) return pi;
  if (std::abs(value + pi) < 1e-6) return -pi;
  return value;
}

ScalarSymbol parse_scalar(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "trigpoly") {
    std::map<int, double> coeffs;
    for (const auto& [key, value] : j.at("coeffs").items())
      coeffs[std::stoi(key)] = value.get<double>();
    return ScalarSymbol::trig_polynomial(coeffs);
  }
  if (kind == "theta2") return ScalarSymbol::theta_squared();
  if (kind == "piecewise") {
    std::vector<double> breaks = j.at("breaks").get<std::vector<double>>();
    std::vector<double> values = j.at("values").get<std::vector<double>>();
    if (!breaks.empty()) {
      breaks.front() = snap_endpoint(breaks.front());
      breaks.back() = snap_endpoint(breaks.back());
    }
    return ScalarSymbol::piecewise_constant(std::move(breaks),
                                            std::move(values));
  }
  throw std::invalid_argument("symbol file: unknown scalar kind '" + kind +
                              "'");
}

}  // namespace

std::string format_full(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.16e", value);
  return buffer;
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_full(m(i, j));
    }
    out << '\n';
  }
}

void write_pairs_csv(std::ostream& out, const RealVector& a,
                     const RealVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("write_pairs_csv: length mismatch");
  for (Index i = 0; i < a.size(); ++i)
    out << format_full(a[i]) << ',' << format_full(b[i]) << '\n';
}

void write_profile_csv(std::ostream& out,
                       const SparselyVanishingProfile& profile) {
  for (std::size_t i = 0; i < profile.thresholds.size(); ++i)
    out << format_full(profile.thresholds[i]) << ','
        << format_full(profile.fractions[i]) << '\n';
}

std::string to_json(const SpectrumReport& report) {
  std::string out = "{\"type\":\"spectrum_report\",\"n\":";
  out += std::to_string(report.n);
  out += ",\"eigenvalues\":";
  append_array(out, report.eigenvalues);
  out += ",\"samples\":";
  append_array(out, report.samples);
  out += ",\"deviations\":";
  append_array(out, report.deviations);
  out += ",\"outlier_threshold\":";
  out += format_full(report.outlier_threshold);
  out += ",\"outlier_count\":";
  out += std::to_string(report.outlier_count);
  out += ",\"quantiles\":{\"q50\":";
  out += format_full(report.q50);
  out += ",\"q90\":";
  out += format_full(report.q90);
  out += ",\"q99\":";
  out += format_full(report.q99);
  out += ",\"max\":";
  out += format_full(report.max_deviation);
  out += "},\"inertia\":{\"positive\":";
  out += std::to_string(report.inertia.positive);
  out += ",\"negative\":";
  out += std::to_string(report.inertia.negative);
  out += ",\"zero\":";
  out += std::to_string(report.inertia.zero);
  out += "}}";
  return out;
}

std::string to_json(const ClusterReport& report) {
  std::string out = "{\"type\":\"cluster_report\",\"n\":";
  out += std::to_string(report.n);
  out += ",\"eps\":";
  out += format_full(report.eps);
  out += ",\"count_near_plus1\":";
  out += std::to_string(report.count_near_plus1);
  out += ",\"count_near_minus1\":";
  out += std::to_string(report.count_near_minus1);
  out += ",\"outlier_count\":";
  out += std::to_string(report.outlier_count);
  out += ",\"outliers\":";
  append_array(out, report.outliers);
  out += '}';
  return out;
}

std::string to_json(const SparselyVanishingProfile& profile) {
  std::string out = "{\"type\":\"sv_profile\",\"n\":";
  out += std::to_string(profile.n);
  out += ",\"thresholds\":";
  append_array(out, profile.thresholds);
  out += ",\"fractions\":";
  append_array(out, profile.fractions);
  out += '}';
  return out;
}

AnySymbol parse_symbol_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("symbol file: ") + e.what());
  }
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "matrix") return parse_scalar(j);

    const int s = j.at("s").get<int>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != s)
      throw std::invalid_argument("symbol file: expected s rows of entries");
    std::vector<ScalarSymbol> entries;
    entries.reserve(static_cast<std::size_t>(s) * static_cast<std::size_t>(s));
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != s)
        throw std::invalid_argument(
            "symbol file: expected s entries per row");
      for (const auto& cell : row) entries.push_back(parse_scalar(cell));
    }
    return MatrixSymbol(s, std::move(entries));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("symbol file: ") + e.what());
  }
}

AnySymbol load_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read symbol file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_symbol_json(buffer.str());
}

}  // namespace symtoep
