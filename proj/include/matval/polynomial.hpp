#pragma once

#include <map>
#include <utility>
#include <vector>

#include "matval/rational.hpp"

namespace matval {

/// Integer polynomial in two variables, stored sparsely as
/// (degree in x, degree in y) -> coefficient, with no zero coefficients.
class Polynomial2 {
public:
    using Key = std::pair<int, int>;

    Polynomial2() = default;

    static Polynomial2 monomial(int dx, int dy, Integer coeff = 1);
    static Polynomial2 constant(Integer c) { return monomial(0, 0, std::move(c)); }

    void add_term(int dx, int dy, const Integer& coeff);

    Polynomial2& operator+=(const Polynomial2& o);
    Polynomial2& operator-=(const Polynomial2& o);
    friend Polynomial2 operator+(Polynomial2 a, const Polynomial2& b) { return a += b; }
    friend Polynomial2 operator-(Polynomial2 a, const Polynomial2& b) { return a -= b; }
    Polynomial2 operator*(const Polynomial2& o) const;
    Polynomial2 scaled(const Integer& c) const;

    /// Integer power, exponent >= 0.
    Polynomial2 pow(int e) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool operator==(const Polynomial2&) const = default;

    Rational eval(const Rational& x, const Rational& y) const;

    const std::map<Key, Integer>& coefficients() const { return coeffs_; }

private:
    std::map<Key, Integer> coeffs_;
};

/// Univariate polynomial with rational coefficients, dense, constant term
/// first. Trailing zeros are trimmed so equality is coefficient-list equality.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(QVector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const QVector& coefficients() const { return coeffs_; }
    Rational coefficient(int i) const;
    Rational leading_coefficient() const;

    Rational eval(const Rational& t) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly scaled(const Rational& c) const;

    bool operator==(const UniPoly&) const = default;

private:
    void trim();
    QVector coeffs_;
};

/// Unique polynomial of degree < points.size() through the given (t, value)
/// pairs; the t values must be distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace matval
