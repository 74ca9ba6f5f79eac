#include "ginibre/complex_format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ginibre/errors.hpp"

namespace ginibre {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw ArgumentError("cannot parse complex number '" + std::string(text) + "'");
}

// Parses a real literal (no sign handling beyond what strtod accepts) from
// the full string `s`.
double parse_real(const std::string& s, std::string_view original) {
  if (s.empty()) bad(original);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) bad(original);
  return v;
}

// Coefficient of i: "" or "+" -> 1, "-" -> -1, otherwise a real literal.
double parse_imag_coefficient(const std::string& s, std::string_view original) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, original);
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) bad(text);
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  s.pop_back();
  // Split at the last sign that is not the leading sign and not part of an
  // exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag_coefficient(s, text)};
  return {parse_real(s.substr(0, split), text), parse_imag_coefficient(s.substr(split), text)};
}

std::vector<std::complex<double>> parse_complex_list(std::string_view text) {
  std::vector<std::complex<double>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string format_double_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(std::complex<double> z) {
  const double re = z.real(), im = z.imag();
  if (im == 0.0) return format_double(re);
  const std::string imag = format_double(im) + "i";
  if (re == 0.0) return imag;
  return format_double(re) + (im > 0.0 ? "+" : "") + imag;
}

}  // namespace ginibre
