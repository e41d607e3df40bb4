#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "critorbit/errors.hpp"
#include "critorbit/field.hpp"
#include "critorbit/map.hpp"

namespace critorbit::cli {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// "a", "a+bi", "a-bi", "bi", "i". Whitespace is not allowed inside.
Complex parse_complex(std::string_view text);

// Comma-separated complex values, lowest degree first.
std::vector<Complex> parse_complex_list(std::string_view text);

// "unicritical:d,c" or "rational:<num>/<den>".
MapSpec parse_map(std::string_view text);

// Sum of monomials in z: "1", "z", "2*z^3 - (1+2i)*z + 0.5i".
Polynomial parse_polynomial(std::string_view text);

VectorFieldSpec parse_field(std::string_view numerator, std::string_view denominator = "1");

// "re_min,re_max,im_min,im_max"
std::vector<double> parse_real_list(std::string_view text);

// Semicolon-separated complex values.
std::vector<Complex> parse_path(std::string_view text);

}  // namespace critorbit::cli
