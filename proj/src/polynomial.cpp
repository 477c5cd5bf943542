#include "matval/polynomial.hpp"

#include <cassert>

#include "matval/errors.hpp"

namespace matval {

Polynomial2 Polynomial2::monomial(int dx, int dy, Integer coeff) {
    Polynomial2 p;
    p.add_term(dx, dy, coeff);
    return p;
}

void Polynomial2::add_term(int dx, int dy, const Integer& coeff) {
    if (coeff == 0) return;
    Key k{dx, dy};
    auto [it, inserted] = coeffs_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Polynomial2& Polynomial2::operator+=(const Polynomial2& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
}

Polynomial2& Polynomial2::operator-=(const Polynomial2& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
    return *this;
}

Polynomial2 Polynomial2::operator*(const Polynomial2& o) const {
    Polynomial2 r;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

Polynomial2 Polynomial2::scaled(const Integer& c) const {
    Polynomial2 r;
    if (c == 0) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

Polynomial2 Polynomial2::pow(int e) const {
    assert(e >= 0);
    Polynomial2 r = constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Rational Polynomial2::eval(const Rational& x, const Rational& y) const {
    Rational total = 0;
    for (const auto& [k, c] : coeffs_) {
        Rational term(c);
        for (int i = 0; i < k.first; ++i) term *= x;
        for (int i = 0; i < k.second; ++i) term *= y;
        total += term;
    }
    return total;
}

Rational UniPoly::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

Rational UniPoly::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    QVector v = coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    size_t n = points.size();
    if (n == 0) return UniPoly();
    UniPoly result;
    for (size_t i = 0; i < n; ++i) {
        // Basis polynomial prod_{j != i} (t - t_j) / (t_i - t_j), scaled by y_i.
        QVector basis{Rational(1)};
        Rational denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (points[i].first == points[j].first)
                throw InvalidParameters("interpolation nodes must be distinct");
            denom *= points[i].first - points[j].first;
            QVector next(basis.size() + 1, Rational(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= points[j].first * basis[k];
            }
            basis = std::move(next);
        }
        Rational factor = points[i].second / denom;
        for (auto& c : basis) c *= factor;
        result += UniPoly(std::move(basis));
    }
    return result;
}

}  // namespace matval
