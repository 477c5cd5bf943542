#include "matval/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <string>

namespace matval {

Poset::Poset(const std::vector<std::vector<bool>>& leq) {
    n_ = static_cast<int>(leq.size());
    words_ = (n_ + 63) / 64;
    up_.assign(n_, Row(words_, 0));
    down_.assign(n_, Row(words_, 0));
    for (int x = 0; x < n_; ++x) {
        if (static_cast<int>(leq[x].size()) != n_)
            throw InvalidParameters("order relation is not square");
        for (int y = 0; y < n_; ++y) {
            if (!leq[x][y]) continue;
            up_[x][y >> 6] |= uint64_t(1) << (y & 63);
            down_[y][x >> 6] |= uint64_t(1) << (x & 63);
        }
    }
    for (int x = 0; x < n_; ++x) {
        if (!row_bit(up_[x], x)) throw InvalidParameters("order is not reflexive");
        for (int y = 0; y < n_; ++y) {
            if (!row_bit(up_[x], y)) continue;
            if (x != y && row_bit(up_[y], x))
                throw InvalidParameters("order is not antisymmetric");
            // transitivity: up(y) must be contained in up(x)
            for (int w = 0; w < words_; ++w)
                if (up_[y][w] & ~up_[x][w])
                    throw InvalidParameters("order is not transitive");
        }
    }
    // Linear extension: sort by down-set size (strictly increases along <).
    extension_.resize(n_);
    std::iota(extension_.begin(), extension_.end(), 0);
    std::vector<int> downsize(n_);
    for (int x = 0; x < n_; ++x) {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(down_[x][w]);
        downsize[x] = c;
    }
    std::stable_sort(extension_.begin(), extension_.end(),
                     [&](int a, int b) { return downsize[a] < downsize[b]; });
    position_.resize(n_);
    for (int i = 0; i < n_; ++i) position_[extension_[i]] = i;
    mobius_rows_.resize(n_);
    mobius_done_.assign(n_, false);
    mobius_dual_rows_.resize(n_);
    mobius_dual_done_.assign(n_, false);
}

bool Poset::leq(int x, int y) const {
    assert(x >= 0 && x < n_ && y >= 0 && y < n_);
    return row_bit(up_[x], y);
}

const std::vector<long long>& Poset::mobius_row(int x) const {
    if (!mobius_done_[x]) {
        std::vector<long long> row(n_, 0);
        for (int pos = position_[x]; pos < n_; ++pos) {
            int y = extension_[pos];
            if (!leq(x, y)) continue;
            if (y == x) { row[y] = 1; continue; }
            long long s = 0;
            for (int p2 = position_[x]; p2 < pos; ++p2) {
                int a = extension_[p2];
                if (leq(x, a) && leq(a, y)) s += row[a];
            }
            row[y] = -s;
        }
        mobius_rows_[x] = std::move(row);
        mobius_done_[x] = true;
    }
    return mobius_rows_[x];
}

long long Poset::mobius(int x, int y) const {
    if (!leq(x, y)) throw NotComparable("mobius needs x <= y");
    return mobius_row(x)[y];
}

const std::vector<long long>& Poset::mobius_dual_row(int y) const {
    if (!mobius_dual_done_[y]) {
        std::vector<long long> row(n_, 0);
        for (int pos = position_[y]; pos >= 0; --pos) {
            int x = extension_[pos];
            if (!leq(x, y)) continue;
            if (x == y) { row[x] = 1; continue; }
            long long s = 0;
            for (int p2 = position_[y]; p2 > pos; --p2) {
                int a = extension_[p2];
                if (leq(x, a) && leq(a, y)) s += row[a];
            }
            row[x] = -s;
        }
        mobius_dual_rows_[y] = std::move(row);
        mobius_dual_done_[y] = true;
    }
    return mobius_dual_rows_[y];
}

long long Poset::mobius_dual(int x, int y) const {
    if (!leq(x, y)) throw NotComparable("mobius needs x <= y");
    return mobius_dual_row(y)[x];
}

std::optional<int> Poset::bottom() const {
    for (int x = 0; x < n_; ++x) {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(up_[x][w]);
        if (c == n_) return x;
    }
    return std::nullopt;
}

std::optional<int> Poset::top() const {
    for (int x = 0; x < n_; ++x) {
        int c = 0;
        for (int w = 0; w < words_; ++w) c += std::popcount(down_[x][w]);
        if (c == n_) return x;
    }
    return std::nullopt;
}

const std::vector<std::vector<int>>& Poset::covers_up() const {
    if (!covers_up_) {
        std::vector<std::vector<int>> cov(n_);
        for (int x = 0; x < n_; ++x) {
            for (int y = 0; y < n_; ++y) {
                if (x == y || !leq(x, y)) continue;
                bool cover = true;
                for (int w = 0; w < words_ && cover; ++w) {
                    uint64_t strictly_between = up_[x][w] & down_[y][w];
                    if (w == (x >> 6)) strictly_between &= ~(uint64_t(1) << (x & 63));
                    if (w == (y >> 6)) strictly_between &= ~(uint64_t(1) << (y & 63));
                    if (strictly_between) cover = false;
                }
                if (cover) cov[x].push_back(y);
            }
        }
        covers_up_ = std::move(cov);
    }
    return *covers_up_;
}

std::vector<int> Poset::atoms() const {
    auto b = bottom();
    if (!b) throw NotALattice("poset has no bottom element");
    return covers_up()[*b];
}

std::optional<int> Poset::min_of_row(const Row& candidates) const {
    // The minimum of a candidate set C exists iff some u in C has C within
    // its up-set; antisymmetry makes it unique.
    for (int u = 0; u < n_; ++u) {
        if (!row_bit(candidates, u)) continue;
        bool all_above = true;
        for (int w = 0; w < words_ && all_above; ++w)
            if (candidates[w] & ~up_[u][w]) all_above = false;
        if (all_above) return u;
    }
    return std::nullopt;
}

std::optional<int> Poset::max_of_row(const Row& candidates) const {
    for (int u = 0; u < n_; ++u) {
        if (!row_bit(candidates, u)) continue;
        bool all_below = true;
        for (int w = 0; w < words_ && all_below; ++w)
            if (candidates[w] & ~down_[u][w]) all_below = false;
        if (all_below) return u;
    }
    return std::nullopt;
}

std::optional<int> Poset::join_all(const std::vector<int>& xs) const {
    if (xs.empty()) return bottom();
    Row common(words_, ~uint64_t(0));
    for (int x : xs)
        for (int w = 0; w < words_; ++w) common[w] &= up_[x][w];
    if (n_ % 64)
        common[words_ - 1] &= (uint64_t(1) << (n_ % 64)) - 1;
    return min_of_row(common);
}

std::optional<int> Poset::meet_all(const std::vector<int>& xs) const {
    if (xs.empty()) return top();
    Row common(words_, ~uint64_t(0));
    for (int x : xs)
        for (int w = 0; w < words_; ++w) common[w] &= down_[x][w];
    if (n_ % 64)
        common[words_ - 1] &= (uint64_t(1) << (n_ % 64)) - 1;
    return max_of_row(common);
}

bool Poset::is_lattice() const {
    if (!lattice_) {
        bool ok = n_ > 0;
        for (int x = 0; x < n_ && ok; ++x)
            for (int y = x + 1; y < n_ && ok; ++y)
                if (!join_all({x, y}) || !meet_all({x, y})) ok = false;
        lattice_ = ok;
    }
    return *lattice_;
}

Poset Poset::flipped() const {
    std::vector<std::vector<bool>> leq(n_, std::vector<bool>(n_, false));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (this->leq(y, x)) leq[x][y] = true;
    return Poset(leq);
}

std::optional<int> Poset::interval_length(int x, int y) const {
    if (!leq(x, y)) throw NotComparable("interval_length needs x <= y");
    if (x == y) return 0;
    // Longest and shortest chain DP over covers, restricted to [x, y].
    std::vector<int> longest(n_, -1), shortest(n_, -1);
    longest[x] = shortest[x] = 0;
    for (int pos = position_[x]; pos <= position_[y]; ++pos) {
        int a = extension_[pos];
        if (longest[a] < 0 || !leq(x, a) || !leq(a, y)) continue;
        for (int b : covers_up()[a]) {
            if (!leq(b, y)) continue;
            if (longest[b] < longest[a] + 1) longest[b] = longest[a] + 1;
            if (shortest[b] < 0 || shortest[b] > shortest[a] + 1)
                shortest[b] = shortest[a] + 1;
        }
    }
    if (longest[y] != shortest[y]) return std::nullopt;
    return longest[y];
}

bool crosscut_check(const Poset& lattice, int x) {
    if (!lattice.is_lattice()) throw NotALattice("crosscut needs a lattice");
    auto bottom = lattice.bottom();
    assert(bottom.has_value());
    std::vector<int> atoms = lattice.atoms();
    if (atoms.size() > 20)
        throw ScaleExceeded("crosscut guard: " + std::to_string(atoms.size()) + " atoms");
    long long signed_count = 0;
    for (uint32_t bits = 0; bits < (1u << atoms.size()); ++bits) {
        std::vector<int> chosen;
        for (size_t i = 0; i < atoms.size(); ++i)
            if (bits & (1u << i)) chosen.push_back(atoms[i]);
        auto j = lattice.join_all(chosen);
        assert(j.has_value());
        if (*j == x) signed_count += (std::popcount(bits) % 2 == 0) ? 1 : -1;
    }
    return lattice.mobius(*bottom, x) == signed_count;
}

}  // namespace matval
