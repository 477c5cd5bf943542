#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "matval/matroid.hpp"

namespace matval::testing {

// Deterministic across platforms (std:: distributions are not).
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

// Random matroid via exchange closure: seed a few random r-subsets, then
// repair violations by inserting the missing exchange results until the
// collection is a matroid. Terminates since the collection only grows.
inline Matroid random_matroid(int n, Rng& rng) {
    int r = 1 + rng.below(n);
    std::vector<uint32_t> masks;
    int seeds = 1 + rng.below(3);
    for (int s = 0; s < seeds; ++s) {
        uint32_t m = 0;
        while (std::popcount(m) < r) m |= 1u << rng.below(n);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (;;) {
        auto w = find_exchange_violation(masks);
        if (!w) break;
        uint32_t removed = w->basis1 & ~(1u << (w->element - 1));
        uint32_t candidates = w->basis2 & ~w->basis1;
        std::vector<int> opts;
        for (uint32_t rest = candidates; rest;) {
            opts.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        uint32_t added = removed | (1u << opts[rng.below(static_cast<int>(opts.size()))]);
        masks.push_back(added);
        std::sort(masks.begin(), masks.end());
    }
    return Matroid::from_valid_masks(n, masks);
}

// Every nonempty basis collection on [n] closed under exchange, one matroid
// per collection. Feasible for n <= 5.
inline std::vector<Matroid> all_matroids(int n) {
    std::vector<Matroid> out;
    for (int r = 0; r <= n; ++r) {
        std::vector<uint32_t> rsets;
        for (uint32_t m = 0; m < (1u << n); ++m)
            if (std::popcount(m) == r) rsets.push_back(m);
        for (uint64_t bits = 1; bits < (1ull << rsets.size()); ++bits) {
            std::vector<uint32_t> masks;
            for (size_t i = 0; i < rsets.size(); ++i)
                if (bits & (1ull << i)) masks.push_back(rsets[i]);
            if (!find_exchange_violation(masks))
                out.push_back(Matroid::from_valid_masks(n, masks));
        }
    }
    return out;
}

}  // namespace matval::testing
