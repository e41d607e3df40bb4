#include "critorbit/cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "critorbit/cli/json_io.hpp"

namespace critorbit::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kCsvHeader << '\n';
  for (const ScanRow& r : rows) {
    std::string flags;
    for (const std::string& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    out << format_double(r.c.real()) << ',' << format_double(r.c.imag()) << ',' << scan_class_name(r.kind) << ','
        << (r.period ? std::to_string(*r.period) : "") << ','
        << (r.summability ? json(*r.summability).get<std::string>() : "") << ','
        << (r.growth_exponent ? format_double(*r.growth_exponent) : "") << ','
        << (r.mu_constant ? format_double(r.mu_constant->real()) : "") << ','
        << (r.mu_constant ? format_double(r.mu_constant->imag()) : "") << ',' << csv_field(flags) << '\n';
  }
}

std::array<std::uint8_t, 3> escape_color(int count, int max_iter) {
  if (max_iter <= 0 || count >= max_iter) return {0, 0, 0};
  const double t = static_cast<double>(count) / max_iter;
  const double s = 1.0 - t;
  auto channel = [](double v) { return static_cast<std::uint8_t>(std::min(255.0, 255.0 * v)); };
  return {channel(9.0 * s * t * t * t), channel(15.0 * s * s * t * t), channel(8.5 * s * s * s * t)};
}

void write_ppm(std::ostream& out, const EscapeGrid& grid) {
  out << "P6\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  for (int count : grid.counts) {
    const auto rgb = escape_color(count, grid.max_iter);
    out.write(reinterpret_cast<const char*>(rgb.data()), 3);
  }
}

}  // namespace critorbit::cli
