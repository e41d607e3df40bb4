#include "critorbit/cli/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace critorbit::cli {
namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return base_ + pos_; }
  void advance() { ++pos_; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(where(), what); }

  bool at_number() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  // Unsigned decimal number; from_chars handles the exponent part.
  double number() {
    if (!at_number()) fail("expected a number");
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  int integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    int v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::string_view rest() const { return text_.substr(pos_); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

double read_sign(Cursor& in) {
  if (in.accept('-')) return -1.0;
  in.accept('+');
  return 1.0;
}

Complex complex_at(std::string_view text, std::size_t base) {
  Cursor in(text, base);
  if (in.done()) in.fail("empty complex number");
  const double s1 = read_sign(in);
  if (in.accept('i')) {
    if (!in.done()) in.fail("trailing characters after imaginary unit");
    return {0.0, s1};
  }
  const double a = s1 * in.number();
  if (in.done()) return {a, 0.0};
  if (in.accept('i')) {
    if (!in.done()) in.fail("trailing characters after imaginary part");
    return {0.0, a};
  }
  if (in.peek() != '+' && in.peek() != '-') in.fail("expected '+' or '-' before the imaginary part");
  const double s2 = read_sign(in);
  const double b = in.at_number() ? in.number() : 1.0;
  if (!in.accept('i')) in.fail("expected 'i'");
  if (!in.done()) in.fail("trailing characters");
  return {a, s2 * b};
}

std::vector<Complex> list_at(std::string_view text, std::size_t base, char sep) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    const std::string_view item = text.substr(start, end == std::string_view::npos ? end : end - start);
    out.push_back(complex_at(item, base + start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

Complex coefficient(Cursor& in) {
  if (in.accept('(')) {
    const std::size_t open = in.where();
    const std::string_view rest = in.rest();
    const std::size_t close = rest.find(')');
    if (close == std::string_view::npos) in.fail("unbalanced '('");
    const Complex c = complex_at(rest.substr(0, close), open);
    for (std::size_t k = 0; k <= close; ++k) in.advance();
    return c;
  }
  if (in.accept('i')) return {0.0, 1.0};
  const double x = in.number();
  if (in.accept('i')) return {0.0, x};
  return {x, 0.0};
}

}  // namespace

Complex parse_complex(std::string_view text) { return complex_at(text, 0); }

std::vector<Complex> parse_complex_list(std::string_view text) { return list_at(text, 0, ','); }

std::vector<Complex> parse_path(std::string_view text) { return list_at(text, 0, ';'); }

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(',', start);
    const std::string_view item = text.substr(start, end == std::string_view::npos ? end : end - start);
    const Complex z = complex_at(item, start);
    if (z.imag() != 0.0) throw ParseError(start, "expected a real number");
    out.push_back(z.real());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

MapSpec parse_map(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "expected 'unicritical:' or 'rational:'");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = text.substr(colon + 1);
  const std::size_t base = colon + 1;

  if (kind == "unicritical") {
    Cursor in(body, base);
    const int d = in.integer();
    if (!in.accept(',')) in.fail("expected ',' after the degree");
    const Complex c = complex_at(in.rest(), in.where());
    return MapSpec::unicritical(d, c);
  }
  if (kind == "rational") {
    const std::size_t slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError(base + body.size(), "expected '/' between numerator and denominator");
    const auto num = list_at(body.substr(0, slash), base, ',');
    const auto den = list_at(body.substr(slash + 1), base + slash + 1, ',');
    return MapSpec::rational(Polynomial(num), Polynomial(den));
  }
  throw ParseError(0, "unknown map kind '" + std::string(kind) + "'");
}

Polynomial parse_polynomial(std::string_view text) {
  Cursor in(text, 0);
  std::vector<Complex> coeffs;
  in.skip_ws();
  if (in.done()) in.fail("empty expression");
  bool first = true;
  while (true) {
    in.skip_ws();
    double sign = 1.0;
    if (in.accept('-')) {
      sign = -1.0;
    } else if (!in.accept('+') && !first) {
      in.fail("expected '+' or '-'");
    }
    in.skip_ws();

    Complex c = 1.0;
    bool has_coeff = false;
    if (in.peek() != 'z') {
      c = coefficient(in);
      has_coeff = true;
      in.skip_ws();
      if (in.accept('*')) {
        in.skip_ws();
        if (in.peek() != 'z') in.fail("expected 'z' after '*'");
      }
    }
    int power = 0;
    if (in.accept('z')) {
      power = 1;
      in.skip_ws();
      if (in.accept('^')) {
        in.skip_ws();
        power = in.integer();
      }
    } else if (!has_coeff) {
      in.fail("expected a term");
    }
    if (coeffs.size() <= static_cast<std::size_t>(power)) coeffs.resize(static_cast<std::size_t>(power) + 1);
    coeffs[static_cast<std::size_t>(power)] += sign * c;

    first = false;
    in.skip_ws();
    if (in.done()) break;
  }
  return Polynomial(coeffs);
}

VectorFieldSpec parse_field(std::string_view numerator, std::string_view denominator) {
  return VectorFieldSpec(parse_polynomial(numerator), parse_polynomial(denominator));
}

}  // namespace critorbit::cli
