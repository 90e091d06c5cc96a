#include "freefam/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <span>

#include "freefam/error.hpp"

namespace freefam {

std::string format_number(double value) {
  if (!std::isfinite(value)) {
    return "null";
  }
  if (value == 0.0) {
    return "0";
  }
  std::array<char, 32> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

void write_density_csv(std::ostream& out, const Measure& nu, std::size_t points) {
  if (points == 0) {
    throw ValidationError("density export needs at least one point");
  }
  out << "x,density\n";
  if (!nu.continuous()) {
    return;
  }
  const double lo = nu.continuous()->lo;
  const double hi = nu.continuous()->hi;
  const double step = (hi - lo) / static_cast<double>(points + 1);
  for (std::size_t i = 1; i <= points; ++i) {
    const double x = lo + step * static_cast<double>(i);
    out << format_number(x) << ',' << format_number(nu.density(x)) << '\n';
  }
}

std::string atoms_json(const Measure& nu) {
  std::string out = "[";
  bool first = true;
  for (const Atom& atom : nu.atoms()) {
    if (!first) {
      out += ',';
    }
    first = false;
    out += "{\"location\":" + format_number(atom.location) + ",\"mass\":" +
           format_number(atom.mass) + '}';
  }
  return out + ']';
}

namespace {

std::string json_array(std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += format_number(values[i]);
  }
  return out + ']';
}

}  // namespace

std::string convergence_report_json(const ConvergenceReport& report) {
  return "{\"grid\":" + json_array(report.grid) + ",\"distances\":" +
         json_array(report.distances) + ",\"slope\":" + format_number(report.slope) + '}';
}

}  // namespace freefam
