#include "matval/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace matval {

namespace {

constexpr int kMaxGroundSet = 25;

std::string subset_str(const Subset& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Lexicographic order of the sorted element lists (not numeric mask order).
bool mask_list_less(uint32_t a, uint32_t b) {
    while (a && b) {
        int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

}  // namespace

uint32_t mask_of(const Subset& s, int n) {
    uint32_t m = 0;
    for (int e : s) {
        if (e < 1 || e > n)
            throw ElementOutOfRange("element " + std::to_string(e) +
                                    " outside ground set [" + std::to_string(n) + "]");
        uint32_t bit = 1u << (e - 1);
        if (m & bit)
            throw InvalidParameters("duplicate element " + std::to_string(e) +
                                    " in subset");
        m |= bit;
    }
    return m;
}

Subset subset_of(uint32_t mask) {
    Subset s;
    while (mask) {
        s.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return s;
}

std::optional<ExchangeWitness> find_exchange_violation(const std::vector<uint32_t>& masks) {
    for (uint32_t b1 : masks) {
        for (uint32_t b2 : masks) {
            uint32_t only1 = b1 & ~b2;
            for (uint32_t rest = only1; rest;) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                uint32_t removed = b1 & ~(1u << e);
                bool ok = false;
                for (uint32_t cand = b2 & ~b1; cand;) {
                    int f = std::countr_zero(cand);
                    cand &= cand - 1;
                    uint32_t swapped = removed | (1u << f);
                    if (std::find(masks.begin(), masks.end(), swapped) != masks.end()) {
                        ok = true;
                        break;
                    }
                }
                if (!ok) return ExchangeWitness{b1, b2, e + 1};
            }
        }
    }
    return std::nullopt;
}

Matroid Matroid::from_valid_masks(int n, std::vector<uint32_t> masks) {
    Matroid m;
    m.n_ = n;
    std::sort(masks.begin(), masks.end(), mask_list_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    m.masks_ = masks;
    m.sorted_masks_ = masks;
    std::sort(m.sorted_masks_.begin(), m.sorted_masks_.end());
    m.rank_ = masks.empty() ? -1 : std::popcount(masks.front());
    return m;
}

Matroid Matroid::from_bases(int n, const std::vector<Subset>& bases) {
    if (n < 1) throw InvalidParameters("ground set size must be positive");
    if (n > kMaxGroundSet) throw ScaleExceeded("ground set larger than supported");
    std::vector<uint32_t> masks;
    masks.reserve(bases.size());
    for (const Subset& b : bases) masks.push_back(mask_of(b, n));
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (!masks.empty()) {
        int r = std::popcount(masks.front());
        for (uint32_t m : masks)
            if (std::popcount(m) != r)
                throw CardinalityMismatch("bases " + subset_str(subset_of(masks.front())) +
                                          " and " + subset_str(subset_of(m)) +
                                          " have different sizes");
        if (auto w = find_exchange_violation(masks))
            throw ExchangeViolation(
                subset_of(w->basis1), subset_of(w->basis2), w->element,
                "exchange axiom fails for " + subset_str(subset_of(w->basis1)) + ", " +
                    subset_str(subset_of(w->basis2)) + " at element " +
                    std::to_string(w->element));
    }
    return from_valid_masks(n, std::move(masks));
}

Matroid Matroid::uniform(int k, int n) {
    if (n < 1) throw InvalidParameters("ground set size must be positive");
    if (k < 0 || k > n) throw InvalidParameters("uniform matroid needs 0 <= k <= n");
    if (n > kMaxGroundSet) throw ScaleExceeded("ground set larger than supported");
    std::vector<uint32_t> masks;
    for (uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == k) masks.push_back(m);
    return from_valid_masks(n, std::move(masks));
}

Matroid Matroid::schubert(int n, const Subset& s) {
    if (n < 1) throw InvalidParameters("ground set size must be positive");
    if (n > kMaxGroundSet) throw ScaleExceeded("ground set larger than supported");
    if (s.empty()) throw InvalidParameters("schubert matroid needs at least one bound");
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n)
            throw InvalidParameters("schubert bound out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw InvalidParameters("schubert bounds must be strictly increasing");
    }
    int r = static_cast<int>(s.size());
    std::vector<uint32_t> masks;
    Subset current(r);
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == r) {
            masks.push_back(mask_of(current, n));
            return;
        }
        for (int a = low; a <= s[pos]; ++a) {
            current[pos] = a;
            self(self, pos + 1, a + 1);
        }
    };
    rec(rec, 0, 1);
    return from_valid_masks(n, std::move(masks));
}

Matroid Matroid::relabel(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != n_)
        throw InvalidPermutation("permutation length differs from ground set size");
    std::vector<bool> seen(n_, false);
    for (int v : sigma) {
        if (v < 1 || v > n_ || seen[v - 1])
            throw InvalidPermutation("not a bijection on the ground set");
        seen[v - 1] = true;
    }
    std::vector<uint32_t> mapped;
    mapped.reserve(masks_.size());
    for (uint32_t b : masks_) {
        uint32_t img = 0;
        for (uint32_t rest = b; rest;) {
            int e = std::countr_zero(rest);
            rest &= rest - 1;
            img |= 1u << (sigma[e] - 1);
        }
        mapped.push_back(img);
    }
    return from_valid_masks(n_, std::move(mapped));
}

int Matroid::rank() const {
    if (empty()) throw EmptyMatroid("empty matroid has no rank");
    return rank_;
}

int Matroid::rank_mask(uint32_t a) const {
    if (empty()) throw EmptyMatroid("empty matroid has no rank function");
    int best = 0;
    for (uint32_t b : masks_) best = std::max(best, std::popcount(a & b));
    return best;
}

int Matroid::rank(const Subset& a) const { return rank_mask(mask_of(a, n_)); }

bool Matroid::is_basis_mask(uint32_t m) const {
    return std::binary_search(sorted_masks_.begin(), sorted_masks_.end(), m);
}

std::vector<Subset> Matroid::bases() const {
    std::vector<Subset> out;
    out.reserve(masks_.size());
    for (uint32_t m : masks_) out.push_back(subset_of(m));
    return out;
}

std::pair<uint32_t, uint32_t> Matroid::activity_masks(uint32_t basis) const {
    if (!is_basis_mask(basis)) throw NotABasis("activity query on a non-basis");
    uint32_t full = (n_ >= 32) ? ~0u : ((1u << n_) - 1);
    uint32_t external = 0, internal = 0;
    for (uint32_t rest = full & ~basis; rest;) {  // candidates i outside B
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        bool active = true;
        for (uint32_t js = basis; js;) {  // j in B with j < i would disqualify
            int j = std::countr_zero(js);
            js &= js - 1;
            if (j >= i) break;
            if (is_basis_mask((basis & ~(1u << j)) | (1u << i))) {
                active = false;
                break;
            }
        }
        if (active) external |= 1u << i;
    }
    for (uint32_t rest = basis; rest;) {  // candidates i inside B
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        bool active = true;
        for (uint32_t js = full & ~basis; js;) {
            int j = std::countr_zero(js);
            js &= js - 1;
            if (j >= i) break;
            if (is_basis_mask((basis & ~(1u << i)) | (1u << j))) {
                active = false;
                break;
            }
        }
        if (active) internal |= 1u << i;
    }
    return {external, internal};
}

ActivityRecord Matroid::activities(const Subset& basis) const {
    uint32_t b = mask_of(basis, n_);
    auto [e, i] = activity_masks(b);
    return ActivityRecord{subset_of(b), subset_of(e), subset_of(i)};
}

std::vector<std::pair<Subset, Subset>> Matroid::adjacent_basis_pairs() const {
    if (empty()) throw EmptyMatroid("empty matroid has no bases");
    std::vector<std::pair<Subset, Subset>> out;
    for (size_t i = 0; i < masks_.size(); ++i)
        for (size_t j = i + 1; j < masks_.size(); ++j)
            if (std::popcount(masks_[i] ^ masks_[j]) == 2)
                out.emplace_back(subset_of(masks_[i]), subset_of(masks_[j]));
    return out;
}

bool Matroid::operator<(const Matroid& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return masks_ < o.masks_;
}

}  // namespace matval
