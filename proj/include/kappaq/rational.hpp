#ifndef KAPPAQ_RATIONAL_HPP
#define KAPPAQ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace kappaq {

// Exact scalar type. Always in lowest terms, denominator > 0.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace kappaq

#endif
