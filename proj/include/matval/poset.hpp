#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matval/errors.hpp"

namespace matval {

/// Finite poset on elements 0..size-1 given by its order relation. Checks
/// the partial-order axioms on construction. Mobius values are memoized;
/// joins/meets and the lattice property are computed from bitset up/down
/// sets, which keeps the brute-force checks cheap at desk scale.
class Poset {
public:
    Poset() = default;  // empty poset
    explicit Poset(const std::vector<std::vector<bool>>& leq);

    int size() const { return n_; }
    bool leq(int x, int y) const;
    bool strictly_less(int x, int y) const { return x != y && leq(x, y); }

    /// Mobius function via mu(x,x) = 1, sum_{x <= a <= y} mu(x,a) = 0.
    long long mobius(int x, int y) const;
    /// Same values through the dual recursion sum_{x <= a <= y} mu(a,y) = 0.
    long long mobius_dual(int x, int y) const;

    std::optional<int> bottom() const;
    std::optional<int> top() const;
    /// Elements covering the bottom; requires a bottom element.
    std::vector<int> atoms() const;

    /// Least upper bound / greatest lower bound of a set of elements;
    /// nullopt when none exists. The empty join is the bottom, the empty
    /// meet the top.
    std::optional<int> join_all(const std::vector<int>& xs) const;
    std::optional<int> meet_all(const std::vector<int>& xs) const;

    bool is_lattice() const;  // cached

    Poset flipped() const;

    /// Number of covers in a maximal chain from x to y when every maximal
    /// chain in [x,y] has the same length; nullopt when the interval is not
    /// graded. Requires x <= y.
    std::optional<int> interval_length(int x, int y) const;

private:
    using Row = std::vector<uint64_t>;
    bool row_bit(const Row& r, int i) const { return (r[i >> 6] >> (i & 63)) & 1; }
    std::optional<int> min_of_row(const Row& candidates) const;
    std::optional<int> max_of_row(const Row& candidates) const;
    const std::vector<std::vector<int>>& covers_up() const;
    const std::vector<long long>& mobius_row(int x) const;
    const std::vector<long long>& mobius_dual_row(int y) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<Row> up_;    // up_[x] bit y: x <= y
    std::vector<Row> down_;  // down_[x] bit y: y <= x
    std::vector<int> extension_;  // linear extension (position -> element)
    std::vector<int> position_;  // element -> position in extension_
    mutable std::vector<std::vector<long long>> mobius_rows_;
    mutable std::vector<bool> mobius_done_;
    mutable std::vector<std::vector<long long>> mobius_dual_rows_;
    mutable std::vector<bool> mobius_dual_done_;
    mutable std::optional<bool> lattice_;
    mutable std::optional<std::vector<std::vector<int>>> covers_up_;
};

/// Rota crosscut identity at x: mu(bottom, x) equals the signed count of
/// atom sets with join x. Brute force over atom subsets (at most 20 atoms).
bool crosscut_check(const Poset& lattice, int x);

}  // namespace matval
