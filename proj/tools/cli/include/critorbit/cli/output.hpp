#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "critorbit/scan.hpp"

namespace critorbit::cli {

inline constexpr const char* kCsvHeader = "c_re,c_im,class,period,summability,growth_exponent,mu_re,mu_im,flags";

// Shortest decimal text that reads back to the same double; "inf", "-inf", "nan" otherwise.
std::string format_double(double x);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// Points that never escape are black. Escaped points follow
// t = count / max_iter through r = 9(1-t)t^3, g = 15(1-t)^2 t^2, b = 8.5(1-t)^3 t,
// each scaled by 255 and truncated.
std::array<std::uint8_t, 3> escape_color(int count, int max_iter);

// Binary P6, maxval 255, rows top to bottom.
void write_ppm(std::ostream& out, const EscapeGrid& grid);

}  // namespace critorbit::cli
