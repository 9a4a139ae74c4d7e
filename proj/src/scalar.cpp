#include "scalar.hpp"

#include <cctype>

namespace prb {

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

Rational rational_from_string(const std::string& s) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) -> Rational {
    throw parse_error(std::string("invalid rational '") + s + "': " + msg, i);
  };
  if (s.empty()) return fail("empty");
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  auto digits = [&]() -> boost::multiprecision::cpp_int {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected digits");
    boost::multiprecision::cpp_int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    return v;
  };
  boost::multiprecision::cpp_int num = digits();
  boost::multiprecision::cpp_int den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    den = digits();
    if (den == 0) fail("zero denominator");
  }
  if (i != s.size()) fail("trailing characters");
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

bool is_positive_integer(const Rational& r) {
  return r > 0 && denominator(r) == 1;
}

std::uint64_t rational_to_uint(const Rational& r) {
  if (!is_positive_integer(r))
    throw domain_error("expected a positive integer, got " +
                       rational_to_string(r));
  return numerator(r).convert_to<std::uint64_t>();
}

}  // namespace prb
