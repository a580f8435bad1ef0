#ifndef BICONN_RATIONAL_HPP
#define BICONN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <stdexcept>
#include <string>

namespace biconn {

// Exact scalars: arbitrary-precision rationals, always in lowest terms with
// positive denominator (cpp_rational maintains this canonical form).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string num_str(const Rational& q) { return numerator(q).str(); }
inline std::string den_str(const Rational& q) { return denominator(q).str(); }

/// Parse "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer num(digits);
    Integer den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(Integer(s));
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  Integer d(den);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(Integer(num), d);
}

/// Uniform random rational with numerator in [-max_num, max_num] and
/// denominator in [1, max_den]. Deterministic for a given engine state.
inline Rational random_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace biconn

#endif
