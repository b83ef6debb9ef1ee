#pragma once

// Small text-format helpers shared by the CLI and the test drivers: decimal
// rendering with a forced decimal point, "exact (decimal)" rendering for
// rationals, comma-separated point parsing, and whole-file text IO.

#include <string>
#include <vector>

#include "cgeom/rational.hpp"
#include "cgeom/tuple.hpp"

namespace cgeom {

// Shortest %.12g rendering that still shows a decimal point ("1.0", not "1").
std::string decimal_str(double v);

// "p/q (decimal)" as printed by the evaluation front end.
std::string exact_with_decimal(const Rat& v);

std::vector<std::string> split(const std::string& s, char sep);

// Comma-separated integers or "p/q" fractions.
Pt<Rat> parse_rat_point(const std::string& csv);
Pt<double> parse_float_point(const std::string& csv);
std::vector<long> parse_long_list(const std::string& csv);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cgeom
