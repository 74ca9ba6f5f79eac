#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace ginibre {

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" with optional exponents
/// ("1e-3+2.5e1i"). Throws ArgumentError on anything else.
std::complex<double> parse_complex(std::string_view text);

/// Comma-separated list of parse_complex values.
std::vector<std::complex<double>> parse_complex_list(std::string_view text);

/// Shortest representation that parses back to the same value, in the
/// same syntax: "0", "0.5", "0.5i", "0.5-0.3i".
std::string format_complex(std::complex<double> z);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double x);

/// 17 significant digits, as used in CSV output.
std::string format_double_full(double x);

}  // namespace ginibre
