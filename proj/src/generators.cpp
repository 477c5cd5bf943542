#include "matval/generators.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace matval {

Subdivision u_a_ab_subdivision(int a, int b) {
    if (a < 2 || b < 1) throw InvalidParameters("need a >= 2 and b >= 1");
    int n = a * b;
    Subset bounds(a);
    for (int i = 0; i < a; ++i) bounds[i] = (i + 1) * b;
    Matroid first = Matroid::schubert(n, bounds);
    std::vector<int> shift(n);
    for (int i = 1; i <= n; ++i) shift[i - 1] = (i - 1 + b) % n + 1;
    Subdivision s;
    s.ambient = Matroid::uniform(a, n);
    s.cells.push_back(first);
    Matroid current = first;
    for (int k = 1; k < a; ++k) {
        current = current.relabel(shift);
        s.cells.push_back(current);
    }
    return s;
}

Matroid matroid_from_rank_table(int n, const std::vector<int>& ranks_by_mask) {
    if (static_cast<int>(ranks_by_mask.size()) != (1 << n))
        throw InvalidParameters("rank table needs one entry per subset");
    int full_rank = ranks_by_mask.back();
    std::vector<Subset> bases;
    for (uint32_t mask = 0; mask < ranks_by_mask.size(); ++mask)
        if (std::popcount(mask) == full_rank &&
            ranks_by_mask[mask] == full_rank)
            bases.push_back(subset_of(mask));
    Matroid m = Matroid::from_bases(n, bases);
    for (uint32_t mask = 0; mask < ranks_by_mask.size(); ++mask) {
        int r = (mask == 0) ? 0 : m.rank_mask(mask);
        if (r != ranks_by_mask[mask])
            throw InvalidParameters(
                "rank table is not the rank function of the recovered matroid "
                "(mismatch at mask " + std::to_string(mask) + ")");
    }
    return m;
}

const SyzygyData& syzygy_data() {
    // Subset order: masks 0..15 with bit i-1 standing for element i.
    static const SyzygyData data{
        {{
            {0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1},
            {0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
            {0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
            {0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
            {0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 1, 2, 0, 1, 1, 2},
            {0, 1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2},
            {0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2},
            {0, 1, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
            {0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 2, 2, 3, 3},
            {0, 1, 1, 2, 1, 2, 2, 3, 1, 1, 2, 2, 2, 2, 3, 3},
            {0, 1, 1, 2, 1, 1, 2, 2, 1, 2, 2, 3, 2, 2, 3, 3},
            {0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 2, 3, 3},
        }},
        {-1, 1, -1, 1, 1, -1, -1, 1, 2, -2, -2, 2},
    };
    return data;
}

}  // namespace matval
