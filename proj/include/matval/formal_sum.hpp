#pragma once

#include <map>

#include "matval/rational.hpp"

namespace matval {

/// Element of the free abelian group on keys of type K: a finite integer
/// combination of keys. Zero coefficients are never stored, so equality is
/// plain map equality and is_zero() is emptiness.
template <class K>
class FormalSum {
public:
    FormalSum() = default;

    static FormalSum single(const K& key, Integer coeff = 1) {
        FormalSum s;
        s.add_term(key, coeff);
        return s;
    }

    void add_term(const K& key, const Integer& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

    FormalSum scaled(const Integer& c) const {
        FormalSum s;
        if (c == 0) return s;
        for (const auto& [k, v] : terms_) s.terms_.emplace(k, v * c);
        return s;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const FormalSum&) const = default;

    Integer coefficient(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Integer coefficient_sum() const {
        Integer t = 0;
        for (const auto& [k, c] : terms_) t += c;
        return t;
    }

    size_t term_count() const { return terms_.size(); }
    const std::map<K, Integer>& terms() const { return terms_; }

private:
    std::map<K, Integer> terms_;
};

template <class K>
FormalSum<K> add(const FormalSum<K>& a, const FormalSum<K>& b) { return a + b; }

template <class K>
FormalSum<K> scale(const FormalSum<K>& a, const Integer& c) { return a.scaled(c); }

template <class K>
bool is_zero(const FormalSum<K>& a) { return a.is_zero(); }

}  // namespace matval
