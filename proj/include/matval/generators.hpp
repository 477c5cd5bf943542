#pragma once

#include <array>
#include <vector>

#include "matval/matroid.hpp"
#include "matval/subdivision.hpp"

namespace matval {

/// Subdivision of U(a, ab) into a isomorphic cells: the first cell is the
/// Schubert matroid with bounds (b, 2b, ..., ab) and the others are its
/// images under the cyclic shift by b. a = 2, b = 2 is the octahedron split
/// into two square pyramids; a = 3, b = 2 is the three-cell split of U(3,6).
Subdivision u_a_ab_subdivision(int a, int b);

inline Subdivision octahedron_subdivision() { return u_a_ab_subdivision(2, 2); }
inline Subdivision u36_subdivision() { return u_a_ab_subdivision(3, 2); }

/// Recovers the matroid whose rank function is given (indexed by subset
/// mask): bases are the full-rank sets B with r(B) = |B|. The whole table is
/// re-derived from the recovered matroid and any mismatch throws
/// InvalidParameters.
Matroid matroid_from_rank_table(int n, const std::vector<int>& ranks_by_mask);

/// Twelve rank functions on [4] and coefficients c with sum c_i F(M_i) = 0
/// while the same combination of G, QS and H does not vanish.
struct SyzygyData {
    std::vector<std::array<int, 16>> rank_rows;
    std::vector<int> coefficients;
};
const SyzygyData& syzygy_data();

}  // namespace matval
