#pragma once

#include <cctype>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "relb/error.hpp"

namespace relb {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
  auto valid_int = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+'))
      ++i;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string n = s.substr(0, slash);
  const std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(n, true) || !valid_int(d, false))
    throw ParseError("not a rational number: '" + s + "'");
  Integer den(d);
  if (den == 0)
    throw ParseError("zero denominator in '" + s + "'");
  return Rational(Integer(n[0] == '+' ? n.substr(1) : n), den);
}

} // namespace relb
