#pragma once

#include <bit>
#include <map>
#include <string>
#include <vector>

#include "matval/geometry.hpp"
#include "matval/matroid.hpp"
#include "matval/poset.hpp"

namespace matval {

struct Subdivision {
    Matroid ambient;
    std::vector<Matroid> cells;
};

struct PairWitness {
    int i = 0, j = 0;      // 1-based cell indices
    bool common = false;   // basis intersection nonempty
    QVector w;
    Rational c;
};

/// Outcome of the three validation checks. Failures are reported as named
/// counterexamples in `issues` instead of aborting.
struct ValidationReport {
    bool containment_ok = false;
    bool pairwise_ok = false;
    bool coverage_ok = false;
    std::vector<std::string> issues;
    Rational ambient_volume;
    std::vector<Rational> cell_volumes;
    std::vector<PairWitness> witnesses;
    bool valid() const { return containment_ok && pairwise_ok && coverage_ok; }
};

/// Checks (1) basis containment and full-dimensionality of every cell,
/// (2) for every cell pair a supporting functional flat on the common
/// vertices (or a strict separation when there are none), and (3) exact
/// volume coverage.
ValidationReport validate_subdivision(const Matroid& ambient,
                                      const std::vector<Matroid>& cells);

/// Intersection lattice {M_A}: key A is a sorted list of 1-based cell
/// indices; the empty key holds the ambient matroid; keys whose basis
/// intersection is empty are absent.
struct IntersectionLattice {
    int num_cells = 0;
    std::map<std::vector<int>, Matroid> entries;
};

struct InteriorFace {
    Matroid matroid;
    int dim = 0;
    std::vector<int> witness;  // lexicographically least A realizing the face
};

/// Subdivision that has passed validate_subdivision; construction throws
/// NotValidated otherwise. Carries the intersection lattice and the
/// deduplicated interior faces.
class ValidatedSubdivision {
public:
    ValidatedSubdivision(Matroid ambient, std::vector<Matroid> cells);

    const Matroid& ambient() const { return sub_.ambient; }
    const std::vector<Matroid>& cells() const { return sub_.cells; }
    const Subdivision& subdivision() const { return sub_; }
    const ValidationReport& report() const { return report_; }
    const IntersectionLattice& lattice() const { return lattice_; }
    const std::vector<InteriorFace>& interior() const { return interior_; }
    int ambient_dim() const { return ambient_dim_; }

private:
    Subdivision sub_;
    ValidationReport report_;
    IntersectionLattice lattice_;
    std::vector<InteriorFace> interior_;
    int ambient_dim_ = 0;
};

inline const IntersectionLattice& intersection_lattice(const ValidatedSubdivision& s) {
    return s.lattice();
}
inline const std::vector<InteriorFace>& interior_faces(const ValidatedSubdivision& s) {
    return s.interior();
}

/// Face poset of the subdivision with an adjoined bottom (the empty face)
/// and top. Element 0 is the bottom, the last element the top; elements
/// 1..k are the nonempty faces of the cells, identified by their vertex
/// sets (as ambient basis masks) and flagged when they lie in the boundary
/// of the ambient polytope.
struct FacePosetWithTop {
    std::vector<std::vector<uint32_t>> face_bases;  // size k, sorted masks
    std::vector<int> dims;                          // size k
    std::vector<bool> boundary;                     // size k
    Poset poset;                                    // size k + 2
    int bottom_index() const { return 0; }
    int top_index() const { return poset.size() - 1; }
    int face_count() const { return static_cast<int>(face_bases.size()); }
};

FacePosetWithTop face_poset(const ValidatedSubdivision& s);

/// Verifies the Mobius data of the face poset against the ball/boundary
/// pattern: mu(bottom, top) = 0, mu(x, top) = 0 for boundary faces, and
/// mu(x, y) = (-1)^(chain length) elsewhere, with every interval graded.
bool topology_check(const ValidatedSubdivision& s);

/// sum over A of (-1)^|A| f(M_A); absent intersections contribute zero.
template <class V, class F>
V alternating_sum(F&& f, const ValidatedSubdivision& s) {
    const IntersectionLattice& lat = s.lattice();
    V total{};
    for (uint32_t bits = 0; bits < (1u << lat.num_cells); ++bits) {
        std::vector<int> key;
        for (int i = 0; i < lat.num_cells; ++i)
            if (bits & (1u << i)) key.push_back(i + 1);
        auto it = lat.entries.find(key);
        if (it == lat.entries.end()) continue;
        if (std::popcount(bits) % 2 == 0)
            total += f(it->second);
        else
            total -= f(it->second);
    }
    return total;
}

/// sum over interior faces F of (-1)^(dim Q - dim F) f(M(F)).
template <class V, class F>
V interior_face_sum(F&& f, const ValidatedSubdivision& s) {
    V total{};
    for (const InteriorFace& face : s.interior()) {
        if ((s.ambient_dim() - face.dim) % 2 == 0)
            total += f(face.matroid);
        else
            total -= f(face.matroid);
    }
    return total;
}

/// Both identity forms: the alternating sum vanishes and the interior-face
/// sum recovers f(M).
template <class V, class F>
bool verify_valuation(F&& f, const ValidatedSubdivision& s) {
    if (!(alternating_sum<V>(f, s) == V{})) return false;
    return interior_face_sum<V>(f, s) == f(s.ambient());
}

}  // namespace matval
