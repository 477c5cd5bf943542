#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matval/lp.hpp"
#include "matval/matroid.hpp"
#include "matval/polynomial.hpp"

namespace matval {

/// Exact-rational inequality description. Constraints may be non-strict,
/// strict, or equalities; a zero-normal constraint only appears as the
/// trivial 0 <= 0 (infeasible zero rows are canonicalized away on
/// construction of the specific polytopes below).
struct HPolytope {
    int n = 0;
    std::vector<LinConstraint> constraints;
};

struct VPolytope {
    int n = 0;
    std::vector<QVector> vertices;  // pairwise distinct
};

struct Face {
    std::vector<int> vertex_indices;  // sorted indices into the vertex list
    int dim = -1;                     // -1 for the empty face
};

/// Complete face lattice of a polytope, including the empty face and the
/// polytope itself. Faces are sorted by (dim, vertex set); containment is
/// vertex-set inclusion.
struct FaceLattice {
    std::vector<Face> faces;

    bool contains(int big, int small) const;
    int top_index() const { return static_cast<int>(faces.size()) - 1; }
    int dim() const { return faces.back().dim; }
    std::vector<int> faces_of_dim(int d) const;
    /// Maximal proper faces (dimension dim()-1).
    std::vector<int> facet_indices() const { return faces_of_dim(dim() - 1); }
    /// Sum of (-1)^dim over nonempty faces.
    long long euler_characteristic() const;
};

VPolytope matroid_polytope_vertices(const Matroid& m);

/// Standard outer description: 0 <= x <= 1, sum_{i in A} x_i <= r(A) for all
/// nonempty A, sum x_i = r(M).
HPolytope matroid_polytope_h(const Matroid& m);

/// Exact feasibility of the constraint system, strict constraints included:
/// strict rows a.x < b are rewritten as a.x <= b - delta and a shared slack
/// delta (capped at 1) is maximized; the system is feasible iff the optimum
/// is positive.
bool lp_feasible(const HPolytope& p);

/// Concatenation of the two constraint systems (same ambient dimension).
HPolytope intersect_h(const HPolytope& a, const HPolytope& b);

/// Witness (w, c) with w.v = c on `sub` and w.v <= c - 1 on the rest, if one
/// exists; present iff conv(sub) is a face of conv(whole). `sub` must be a
/// sub-list of `whole`; the empty sub-list is allowed and trivially present.
std::optional<std::pair<QVector, Rational>> supporting_functional(
    const std::vector<QVector>& whole, const std::vector<QVector>& sub);

/// Witness (w, c) with w.u <= c - 1 on `a` and w.v >= c + 1 on `b`; present
/// iff the two hulls are disjoint.
std::optional<std::pair<QVector, Rational>> separating_functional(
    const std::vector<QVector>& a, const std::vector<QVector>& b);

/// Joint convex-combination LP: conv(a) and conv(b) meet. An empty vertex
/// list denotes the empty polytope and never meets anything.
bool convex_hulls_intersect(const VPolytope& a, const VPolytope& b);

/// True iff conv(a) meet conv(b) contains a point with w.x strictly below c
/// (slack-maximization LP). With w supporting conv(a) at the common face
/// from above, a false result pins the whole intersection to the face.
bool hulls_meet_off_hyperplane(const VPolytope& a, const VPolytope& b,
                               const QVector& w, const Rational& c);

int affine_dimension(const VPolytope& p);

/// Complete face lattice via exact double description (vertex list to facet
/// list) followed by closing facet subsets under intersection. Guarded to
/// affine dimension <= 6 and at most 60 vertices.
FaceLattice enumerate_faces(const VPolytope& p);

/// Lattice-normalized volume: a unimodular simplex of the affine lattice
/// (integer points of the affine hull) has volume 1. Computed by a pulling
/// triangulation from the lexicographically least vertex.
Rational normalized_volume(const VPolytope& p);

/// Number of lattice points of the t-th dilate of Q(m), t >= 0.
Integer dilate_lattice_point_count(const Matroid& m, int t);

/// Ehrhart polynomial E with E(t) = |t Q(m) meet Z^n|, via dilate counts at
/// t = 0..dim and Lagrange interpolation.
UniPoly ehrhart_polynomial(const Matroid& m);

/// P_{A,s} = {x in [0,1]^n : sum_{i in A} x_i >= s}.
HPolytope p_as_polytope(const Subset& a, int s, int n);

/// conv{(e_A + e_B)/2 : A in V(B,E,I)} where V(B,E,I) collects the A with
/// e_A - e_B = e_a - e_b, a in E and a > b, or b in I and a < b.
VPolytope pbei_polytope(const Subset& b, const Subset& e, const Subset& i, int n);

}  // namespace matval
