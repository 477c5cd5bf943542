#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace matval {

// All arithmetic in this project is exact; there is no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;
using ZVector = std::vector<Integer>;
using ZMatrix = std::vector<ZVector>;

/// Renders "p" for integers and "p/q" otherwise (q > 0, reduced).
std::string rational_to_string(const Rational& q);

/// Accepts "p" or "p/q"; throws ParseError on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

Rational dot(const QVector& a, const QVector& b);

bool is_integral(const Rational& q);

}  // namespace matval
