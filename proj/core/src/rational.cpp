#include "cgeom/rational.hpp"

#include <cctype>

namespace cgeom {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  auto scan_int = [&](const char* what) {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0)
      throw std::invalid_argument(std::string("malformed rational literal: missing ") + what +
                                  " in '" + text + "'");
    return text.substr(start, i - start);
  };
  std::string num = scan_int("numerator");
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/')
      throw std::invalid_argument("malformed rational literal '" + text + "'");
    ++i;
    den = scan_int("denominator");
    if (i != text.size())
      throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
  Int n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("rational literal with zero denominator");
  Rat q(n);
  q /= Rat(d);
  return q;
}

std::string rat_str(const Rat& q) {
  return q.get_str();  // mpq prints "p" or "p/q" in canonical form
}

Rat rat_of_double(double v) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), v);  // exact: doubles are binary rationals
  return q;
}

Int factorial(long s) {
  if (s < 0) throw std::domain_error("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(s));
  return r;
}

}  // namespace cgeom
