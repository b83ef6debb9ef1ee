#include "cgeom/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cgeom {

std::string decimal_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  std::string s(buf);
  // Force a decimal point so integral values read as floating point.
  if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos &&
      s.find("nan") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string exact_with_decimal(const Rat& v) {
  return rat_str(v) + " (" + decimal_str(to_double(v)) + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

Pt<Rat> parse_rat_point(const std::string& csv) {
  Pt<Rat> out;
  for (const std::string& tok : split(csv, ',')) {
    const std::string t = trimmed(tok);
    if (t.empty()) throw std::invalid_argument("empty coordinate in point '" + csv + "'");
    out.push_back(parse_rat(t));
  }
  return out;
}

Pt<double> parse_float_point(const std::string& csv) {
  Pt<double> out;
  for (const std::string& tok : split(csv, ',')) {
    const std::string t = trimmed(tok);
    if (t.empty()) throw std::invalid_argument("empty coordinate in point '" + csv + "'");
    std::size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad coordinate '" + t + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  for (const std::string& tok : split(csv, ',')) {
    const std::string t = trimmed(tok);
    if (t.empty()) throw std::invalid_argument("empty entry in list '" + csv + "'");
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad integer '" + t + "'");
    out.push_back(v);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace cgeom
