#include "matval/rational.hpp"

#include <cassert>

#include "matval/errors.hpp"

namespace matval {

std::string rational_to_string(const Rational& q) {
    Integer num = numerator(q), den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto parse_int = [](const std::string& t) -> Integer {
        if (t.empty()) throw ParseError("empty integer literal");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw ParseError("sign without digits: '" + t + "'");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw ParseError("bad integer literal: '" + t + "'");
        return Integer(t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(num, den);
}

Rational dot(const QVector& a, const QVector& b) {
    assert(a.size() == b.size());
    Rational r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace matval
