#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prb {

// Exact rational coefficients. Everything in the engine is computed over Q;
// no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct fuel_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  std::size_t pos;
  parse_error(const std::string& msg, std::size_t p)
      : std::runtime_error(msg), pos(p) {}
};

std::string rational_to_string(const Rational& r);
// Accepts "p", "-p", "p/q"; throws parse_error on anything else or q == 0.
Rational rational_from_string(const std::string& s);
bool is_positive_integer(const Rational& r);
std::uint64_t rational_to_uint(const Rational& r);

// Which operator law the algebra carries. A Rota-Baxter operator of weight
// lambda satisfies R(x)R(y) = R(R(x)y + xR(y) + lambda xy); a Nijenhuis
// operator satisfies N(x)N(y) = N(N(x)y + xN(y) - N(xy)). The two engines
// share all code paths and differ exactly in the weight term.
enum class OpKind { RotaBaxter, Nijenhuis };

struct OpLaw {
  OpKind kind = OpKind::RotaBaxter;
  Rational weight = 0;  // meaningful only for RotaBaxter

  char symbol() const { return kind == OpKind::RotaBaxter ? 'R' : 'N'; }
  bool is_ns() const { return kind == OpKind::Nijenhuis; }
};

}  // namespace prb
