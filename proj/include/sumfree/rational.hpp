#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace sumfree {

// Compare only against other Rationals: boost 1.74's mixed integer
// operator== recurses forever under C++20 reversed-operator lookup.
using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace sumfree
