#include "matval/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <string>

#include "matval/linalg.hpp"

namespace matval {

namespace {

constexpr int kMaxFaceDim = 6;
constexpr int kMaxFaceVertices = 60;

QVector indicator_vector(uint32_t mask, int n) {
    QVector v(n, Rational(0));
    for (uint32_t rest = mask; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        v[e] = 1;
    }
    return v;
}

QVector unit_row(int n, int i, const Rational& value) {
    QVector v(n, Rational(0));
    v[i] = value;
    return v;
}

// Affine coordinate frame of a point set: origin plus an independent set of
// difference vectors spanning the direction space.
struct AffineFrame {
    QVector origin;
    QMatrix basis;  // d rows of length n

    QVector coords(const QVector& point) const {
        QVector diff(point.size());
        for (size_t i = 0; i < point.size(); ++i) diff[i] = point[i] - origin[i];
        auto y = solve_in_span(basis, diff);
        if (!y) throw InternalDisagreement("point outside its own affine hull");
        return *y;
    }
};

AffineFrame affine_frame(const std::vector<QVector>& pts) {
    assert(!pts.empty());
    AffineFrame f;
    f.origin = pts[0];
    for (size_t i = 1; i < pts.size(); ++i) {
        QVector diff(pts[i].size());
        for (size_t j = 0; j < diff.size(); ++j) diff[j] = pts[i][j] - f.origin[j];
        QMatrix candidate = f.basis;
        candidate.push_back(diff);
        if (matrix_rank(candidate) > static_cast<int>(f.basis.size()))
            f.basis = std::move(candidate);
    }
    return f;
}

// Extreme rays of the pointed cone {y : rows[i] . y >= 0}; the rows must
// span the ambient space. Incremental double description with the
// combinatorial adjacency test.
std::vector<QVector> dd_extreme_rays(const QMatrix& rows) {
    size_t dim = rows[0].size();
    size_t nrows = rows.size();

    // Seed with an invertible row subset.
    std::vector<size_t> seed;
    QMatrix echelon;
    for (size_t i = 0; i < nrows && seed.size() < dim; ++i) {
        QMatrix candidate = echelon;
        candidate.push_back(rows[i]);
        if (matrix_rank(candidate) > static_cast<int>(echelon.size())) {
            echelon = std::move(candidate);
            seed.push_back(i);
        }
    }
    assert(seed.size() == dim);

    // Initial rays: columns of the inverse of the seed matrix.
    QMatrix aug(dim, QVector(2 * dim, Rational(0)));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) aug[i][j] = rows[seed[i]][j];
        aug[i][dim + i] = 1;
    }
    for (size_t c = 0; c < dim; ++c) {
        size_t piv = c;
        while (aug[piv][c] == 0) ++piv;
        std::swap(aug[piv], aug[c]);
        Rational p = aug[c][c];
        for (auto& v : aug[c]) v /= p;
        for (size_t i = 0; i < dim; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rational f = aug[i][c];
            for (size_t j = 0; j < 2 * dim; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    std::vector<QVector> rays;
    for (size_t j = 0; j < dim; ++j) {
        QVector r(dim);
        for (size_t i = 0; i < dim; ++i) r[i] = aug[i][dim + j];
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_seed(nrows, false);
    for (size_t i : seed) in_seed[i] = true;
    std::vector<size_t> processed = seed;
    auto zero_set = [&](const QVector& ray) {
        std::vector<bool> z(nrows, false);
        for (size_t i : processed)
            if (dot(rows[i], ray) == 0) z[i] = true;
        return z;
    };

    for (size_t next = 0; next < nrows; ++next) {
        if (in_seed[next]) continue;
        std::vector<Rational> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) val[r] = dot(rows[next], rays[r]);
        std::vector<size_t> pos, neg;
        for (size_t r = 0; r < rays.size(); ++r) {
            if (val[r] > 0) pos.push_back(r);
            else if (val[r] < 0) neg.push_back(r);
        }
        if (neg.empty()) {
            processed.push_back(next);
            continue;
        }
        std::vector<std::vector<bool>> zsets(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) zsets[r] = zero_set(rays[r]);
        std::vector<QVector> kept;
        for (size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) kept.push_back(rays[r]);
        for (size_t p : pos) {
            for (size_t q : neg) {
                // adjacency: no third ray's zero set contains the common one
                std::vector<bool> common(nrows, false);
                for (size_t i : processed)
                    common[i] = zsets[p][i] && zsets[q][i];
                bool adjacent = true;
                for (size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == q) continue;
                    bool covers = true;
                    for (size_t i : processed)
                        if (common[i] && !zsets[r][i]) { covers = false; break; }
                    if (covers) adjacent = false;
                }
                if (!adjacent) continue;
                QVector combo(dim);
                for (size_t j = 0; j < dim; ++j)
                    combo[j] = val[p] * rays[q][j] - val[q] * rays[p][j];
                kept.push_back(std::move(combo));
            }
        }
        rays = std::move(kept);
        processed.push_back(next);
    }

    // Canonical primitive form, then dedupe.
    for (auto& r : rays) {
        Integer lcm_den = 1;
        for (const auto& x : r) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
        Integer g = 0;
        for (auto& x : r) {
            x *= lcm_den;
            g = boost::multiprecision::gcd(g, numerator(x));
        }
        if (g != 0)
            for (auto& x : r) x /= g;
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

std::vector<int> sorted_indices(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int affine_rank_of_subset(const std::vector<QVector>& coords, const std::vector<int>& idx) {
    if (idx.empty()) return -1;
    QMatrix diffs;
    for (size_t k = 1; k < idx.size(); ++k) {
        QVector d(coords[idx[0]].size());
        for (size_t j = 0; j < d.size(); ++j)
            d[j] = coords[idx[k]][j] - coords[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(diffs);
}

}  // namespace

bool FaceLattice::contains(int big, int small) const {
    const auto& b = faces[big].vertex_indices;
    const auto& s = faces[small].vertex_indices;
    return std::includes(b.begin(), b.end(), s.begin(), s.end());
}

std::vector<int> FaceLattice::faces_of_dim(int d) const {
    std::vector<int> out;
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].dim == d) out.push_back(static_cast<int>(i));
    return out;
}

long long FaceLattice::euler_characteristic() const {
    long long chi = 0;
    for (const auto& f : faces)
        if (f.dim >= 0) chi += (f.dim % 2 == 0) ? 1 : -1;
    return chi;
}

VPolytope matroid_polytope_vertices(const Matroid& m) {
    if (m.empty()) throw EmptyMatroid("empty matroid has no polytope");
    VPolytope p;
    p.n = m.n();
    for (uint32_t b : m.basis_masks()) p.vertices.push_back(indicator_vector(b, m.n()));
    return p;
}

HPolytope matroid_polytope_h(const Matroid& m) {
    if (m.empty()) throw EmptyMatroid("empty matroid has no polytope");
    int n = m.n();
    HPolytope p;
    p.n = n;
    for (int i = 0; i < n; ++i) {
        p.constraints.push_back({unit_row(n, i, -1), Rational(0), Rel::LessEq});
        p.constraints.push_back({unit_row(n, i, 1), Rational(1), Rel::LessEq});
    }
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        QVector normal(n, Rational(0));
        for (uint32_t rest = mask; rest;) {
            int e = std::countr_zero(rest);
            rest &= rest - 1;
            normal[e] = 1;
        }
        p.constraints.push_back({std::move(normal), Rational(m.rank_mask(mask)), Rel::LessEq});
    }
    p.constraints.push_back({QVector(n, Rational(1)), Rational(m.rank()), Rel::Eq});
    return p;
}

bool lp_feasible(const HPolytope& p) {
    int n = p.n;
    bool any_strict = false;
    std::vector<bool> nonneg(n, false);
    std::vector<LinConstraint> rows;
    for (const auto& c : p.constraints) {
        if (c.rel == Rel::Less) { any_strict = true; continue; }
        if (c.rel == Rel::LessEq && c.bound == 0) {
            // -x_i <= 0 marks the variable nonnegative; no row needed.
            int nz = -1;
            bool unit = true;
            for (int j = 0; j < n && unit; ++j) {
                if (c.normal[j] == 0) continue;
                if (nz >= 0 || c.normal[j] != -1) unit = false;
                nz = j;
            }
            if (unit && nz >= 0) {
                nonneg[nz] = true;
                continue;
            }
        }
        rows.push_back(c);
    }
    if (!any_strict) return lp_system_feasible(n, rows, nonneg);

    // Shared-slack reduction: maximize delta with strict rows tightened.
    int nv = n + 1;
    std::vector<LinConstraint> ext;
    nonneg.push_back(true);  // delta >= 0
    for (auto& c : rows) {
        c.normal.push_back(Rational(0));
        ext.push_back(std::move(c));
    }
    for (const auto& c : p.constraints) {
        if (c.rel != Rel::Less) continue;
        LinConstraint row{c.normal, c.bound, Rel::LessEq};
        row.normal.push_back(Rational(1));
        ext.push_back(std::move(row));
    }
    ext.push_back({unit_row(nv, n, 1), Rational(1), Rel::LessEq});  // delta <= 1
    QVector obj(nv, Rational(0));
    obj[n] = 1;
    LPResult res = solve_lp(nv, ext, obj, nonneg);
    return res.status == LPStatus::Optimal && res.objective > 0;
}

HPolytope intersect_h(const HPolytope& a, const HPolytope& b) {
    if (a.n != b.n) throw DimensionMismatch("ambient dimensions differ");
    HPolytope p = a;
    p.constraints.insert(p.constraints.end(), b.constraints.begin(), b.constraints.end());
    return p;
}

std::optional<std::pair<QVector, Rational>> supporting_functional(
    const std::vector<QVector>& whole, const std::vector<QVector>& sub) {
    if (sub.empty()) {
        size_t n = whole.empty() ? 0 : whole[0].size();
        return std::make_pair(QVector(n, Rational(0)), Rational(1));
    }
    size_t n = whole[0].size();
    std::vector<bool> in_sub(whole.size(), false);
    for (const auto& v : sub) {
        bool found = false;
        for (size_t i = 0; i < whole.size(); ++i)
            if (!in_sub[i] && whole[i] == v) { in_sub[i] = true; found = true; break; }
        if (!found) throw InvalidParameters("sub-list vertex missing from the whole list");
    }
    if (sub.size() == whole.size())
        return std::make_pair(QVector(n, Rational(0)), Rational(0));

    // Variables: w (n, free), c (free).
    int nv = static_cast<int>(n) + 1;
    std::vector<LinConstraint> rows;
    for (size_t i = 0; i < whole.size(); ++i) {
        QVector normal = whole[i];
        normal.push_back(Rational(-1));
        if (in_sub[i])
            rows.push_back({std::move(normal), Rational(0), Rel::Eq});
        else
            rows.push_back({std::move(normal), Rational(-1), Rel::LessEq});
    }
    QVector obj(nv, Rational(0));
    std::vector<bool> nonneg(nv, false);
    LPResult res = solve_lp(nv, rows, obj, nonneg);
    if (res.status != LPStatus::Optimal) return std::nullopt;
    QVector w(res.x.begin(), res.x.begin() + n);
    return std::make_pair(std::move(w), res.x[n]);
}

std::optional<std::pair<QVector, Rational>> separating_functional(
    const std::vector<QVector>& a, const std::vector<QVector>& b) {
    size_t n = !a.empty() ? a[0].size() : (!b.empty() ? b[0].size() : 0);
    int nv = static_cast<int>(n) + 1;
    std::vector<LinConstraint> rows;
    for (const auto& u : a) {
        QVector normal = u;
        normal.push_back(Rational(-1));
        rows.push_back({std::move(normal), Rational(-1), Rel::LessEq});
    }
    for (const auto& v : b) {
        QVector normal(n + 1);
        for (size_t j = 0; j < n; ++j) normal[j] = -v[j];
        normal[n] = 1;
        rows.push_back({std::move(normal), Rational(-1), Rel::LessEq});
    }
    QVector obj(nv, Rational(0));
    std::vector<bool> nonneg(nv, false);
    LPResult res = solve_lp(nv, rows, obj, nonneg);
    if (res.status != LPStatus::Optimal) return std::nullopt;
    QVector w(res.x.begin(), res.x.begin() + n);
    return std::make_pair(std::move(w), res.x[n]);
}

bool convex_hulls_intersect(const VPolytope& a, const VPolytope& b) {
    if (a.vertices.empty() || b.vertices.empty()) return false;
    if (a.n != b.n) throw DimensionMismatch("ambient dimensions differ");
    int n = a.n;
    int na = static_cast<int>(a.vertices.size());
    int nb = static_cast<int>(b.vertices.size());
    int nv = na + nb;
    std::vector<LinConstraint> rows;
    for (int i = 0; i < n; ++i) {
        QVector normal(nv, Rational(0));
        for (int j = 0; j < na; ++j) normal[j] = a.vertices[j][i];
        for (int j = 0; j < nb; ++j) normal[na + j] = -b.vertices[j][i];
        rows.push_back({std::move(normal), Rational(0), Rel::Eq});
    }
    QVector ones_a(nv, Rational(0)), ones_b(nv, Rational(0));
    for (int j = 0; j < na; ++j) ones_a[j] = 1;
    for (int j = 0; j < nb; ++j) ones_b[na + j] = 1;
    rows.push_back({std::move(ones_a), Rational(1), Rel::Eq});
    rows.push_back({std::move(ones_b), Rational(1), Rel::Eq});
    return lp_system_feasible(nv, rows, std::vector<bool>(nv, true));
}

bool hulls_meet_off_hyperplane(const VPolytope& a, const VPolytope& b,
                               const QVector& w, const Rational& c) {
    if (a.vertices.empty() || b.vertices.empty()) return false;
    if (a.n != b.n) throw DimensionMismatch("ambient dimensions differ");
    int n = a.n;
    int na = static_cast<int>(a.vertices.size());
    int nb = static_cast<int>(b.vertices.size());
    int nv = na + nb + 1;  // lambda, gamma, slack delta
    std::vector<LinConstraint> rows;
    for (int i = 0; i < n; ++i) {
        QVector normal(nv, Rational(0));
        for (int j = 0; j < na; ++j) normal[j] = a.vertices[j][i];
        for (int j = 0; j < nb; ++j) normal[na + j] = -b.vertices[j][i];
        rows.push_back({std::move(normal), Rational(0), Rel::Eq});
    }
    QVector ones_a(nv, Rational(0)), ones_b(nv, Rational(0));
    for (int j = 0; j < na; ++j) ones_a[j] = 1;
    for (int j = 0; j < nb; ++j) ones_b[na + j] = 1;
    rows.push_back({std::move(ones_a), Rational(1), Rel::Eq});
    rows.push_back({std::move(ones_b), Rational(1), Rel::Eq});
    // w.x + delta <= c with delta maximized and capped
    QVector strict(nv, Rational(0));
    for (int j = 0; j < na; ++j) strict[j] = dot(w, a.vertices[j]);
    strict[na + nb] = 1;
    rows.push_back({std::move(strict), c, Rel::LessEq});
    QVector cap(nv, Rational(0));
    cap[na + nb] = 1;
    rows.push_back({cap, Rational(1), Rel::LessEq});
    QVector obj(nv, Rational(0));
    obj[na + nb] = 1;
    LPResult res = solve_lp(nv, rows, obj, std::vector<bool>(nv, true));
    return res.status == LPStatus::Optimal && res.objective > 0;
}

int affine_dimension(const VPolytope& p) {
    if (p.vertices.empty()) throw EmptyPolytope("affine dimension of the empty polytope");
    QMatrix diffs;
    for (size_t i = 1; i < p.vertices.size(); ++i) {
        QVector d(p.n);
        for (int j = 0; j < p.n; ++j) d[j] = p.vertices[i][j] - p.vertices[0][j];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(diffs);
}

FaceLattice enumerate_faces(const VPolytope& p) {
    if (p.vertices.empty()) throw EmptyPolytope("face lattice of the empty polytope");
    int nv = static_cast<int>(p.vertices.size());
    int d = affine_dimension(p);
    if (d > kMaxFaceDim || nv > kMaxFaceVertices)
        throw ScaleExceeded("face enumeration guard: dim " + std::to_string(d) + ", " +
                            std::to_string(nv) + " vertices");

    FaceLattice fl;
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    if (d == 0) {
        fl.faces.push_back({{}, -1});
        fl.faces.push_back({all, 0});
        return fl;
    }

    // Project to the affine hull so the polytope is full-dimensional there.
    AffineFrame frame = affine_frame(p.vertices);
    std::vector<QVector> coords(nv);
    for (int i = 0; i < nv; ++i) coords[i] = frame.coords(p.vertices[i]);

    // Facets = extreme rays of the dual cone {(c0, w) : c0 + w.x_i >= 0}.
    QMatrix rows(nv, QVector(d + 1));
    for (int i = 0; i < nv; ++i) {
        rows[i][0] = 1;
        for (int j = 0; j < d; ++j) rows[i][j + 1] = coords[i][j];
    }
    std::vector<QVector> rays = dd_extreme_rays(rows);

    std::set<std::vector<int>> facet_sets;
    for (const auto& r : rays) {
        std::vector<int> verts;
        for (int i = 0; i < nv; ++i)
            if (dot(rows[i], r) == 0) verts.push_back(i);
        facet_sets.insert(sorted_indices(std::move(verts)));
    }

    // Close the facet sets under intersection; every face arises this way.
    std::set<std::vector<int>> faces;
    faces.insert(all);
    std::vector<std::vector<int>> queue(facet_sets.begin(), facet_sets.end());
    while (!queue.empty()) {
        std::vector<int> f = std::move(queue.back());
        queue.pop_back();
        if (!faces.insert(f).second) continue;
        for (const auto& s : facet_sets) {
            std::vector<int> inter;
            std::set_intersection(f.begin(), f.end(), s.begin(), s.end(),
                                  std::back_inserter(inter));
            if (inter != f && !faces.count(inter)) queue.push_back(inter);
        }
    }
    faces.insert({});

    for (const auto& f : faces)
        fl.faces.push_back({f, affine_rank_of_subset(coords, f)});
    std::sort(fl.faces.begin(), fl.faces.end(), [](const Face& x, const Face& y) {
        if (x.dim != y.dim) return x.dim < y.dim;
        return x.vertex_indices < y.vertex_indices;
    });
    return fl;
}

namespace {

// Pulling triangulation over a face lattice: every face is triangulated by
// coning its lexicographically least vertex over the triangulations of the
// facets avoiding it.
std::vector<std::vector<int>> pulling_triangulation(const VPolytope& p, const FaceLattice& fl) {
    int nf = static_cast<int>(fl.faces.size());
    std::vector<std::vector<std::vector<int>>> memo(nf);
    std::vector<bool> done(nf, false);

    auto lex_least = [&](const std::vector<int>& verts) {
        int best = verts[0];
        for (int v : verts)
            if (p.vertices[v] < p.vertices[best]) best = v;
        return best;
    };

    auto rec = [&](auto&& self, int fi) -> const std::vector<std::vector<int>>& {
        if (done[fi]) return memo[fi];
        const Face& f = fl.faces[fi];
        assert(f.dim >= 0);
        if (f.dim == 0) {
            memo[fi] = {{f.vertex_indices[0]}};
        } else {
            int apex = lex_least(f.vertex_indices);
            std::vector<std::vector<int>> simplices;
            for (int gi = 0; gi < nf; ++gi) {
                const Face& g = fl.faces[gi];
                if (g.dim != f.dim - 1 || !fl.contains(fi, gi)) continue;
                if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex))
                    continue;
                for (const auto& s : self(self, gi)) {
                    std::vector<int> simplex = s;
                    simplex.push_back(apex);
                    simplices.push_back(std::move(simplex));
                }
            }
            memo[fi] = std::move(simplices);
        }
        done[fi] = true;
        return memo[fi];
    };
    return rec(rec, fl.top_index());
}

}  // namespace

Rational normalized_volume(const VPolytope& p) {
    if (p.vertices.empty()) throw EmptyPolytope("volume of the empty polytope");
    for (const auto& v : p.vertices)
        for (const auto& x : v)
            if (!is_integral(x))
                throw NonLatticeVertices("volume requires lattice vertices");
    int d = affine_dimension(p);
    if (d > kMaxFaceDim) throw ScaleExceeded("volume guard: dim " + std::to_string(d));
    if (d == 0) return 1;

    // Basis of the affine lattice: saturate the span of the edge directions.
    ZMatrix diffs;
    for (size_t i = 1; i < p.vertices.size(); ++i) {
        ZVector row(p.n);
        for (int j = 0; j < p.n; ++j) {
            Rational d = p.vertices[i][j] - p.vertices[0][j];
            row[j] = numerator(d);
        }
        diffs.push_back(std::move(row));
    }
    ZMatrix orth = integer_kernel(diffs, p.n);
    ZMatrix lattice = integer_kernel(orth, p.n);
    assert(static_cast<int>(lattice.size()) == d);
    QMatrix lattice_q(lattice.size(), QVector(p.n));
    for (size_t i = 0; i < lattice.size(); ++i)
        for (int j = 0; j < p.n; ++j) lattice_q[i][j] = Rational(lattice[i][j]);

    FaceLattice fl = enumerate_faces(p);
    auto simplices = pulling_triangulation(p, fl);

    Rational total = 0;
    for (const auto& s : simplices) {
        if (static_cast<int>(s.size()) != d + 1)
            throw InternalDisagreement("pulling triangulation produced a non-simplex");
        ZMatrix m(d, ZVector(d));
        for (int k = 1; k <= d; ++k) {
            QVector diff(p.n);
            for (int j = 0; j < p.n; ++j)
                diff[j] = p.vertices[s[k]][j] - p.vertices[s[0]][j];
            auto y = solve_in_span(lattice_q, diff);
            if (!y) throw InternalDisagreement("edge vector outside the affine lattice span");
            for (int j = 0; j < d; ++j) {
                if (!is_integral((*y)[j]))
                    throw InternalDisagreement("edge vector has fractional lattice coordinates");
                m[k - 1][j] = numerator((*y)[j]);
            }
        }
        Integer det = integer_det(std::move(m));
        total += Rational(det < 0 ? -det : det);
    }
    return total;
}

Integer dilate_lattice_point_count(const Matroid& m, int t) {
    if (m.empty()) throw EmptyMatroid("empty matroid has no polytope");
    assert(t >= 0);
    if (t == 0) return 1;
    int n = m.n();
    int r = m.rank();
    std::vector<int> rk(1u << n);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) rk[mask] = m.rank_mask(mask);

    Integer count = 0;
    std::vector<int> x(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            if (remaining != 0) return;
            // subset-sum check against all rank constraints
            std::vector<int> sum(1u << n, 0);
            for (uint32_t mask = 1; mask < (1u << n); ++mask) {
                int low = std::countr_zero(mask);
                sum[mask] = sum[mask & (mask - 1)] + x[low];
                if (sum[mask] > t * rk[mask]) return;
            }
            ++count;
            return;
        }
        int hi = std::min(t, remaining);
        int slots_after = n - pos - 1;
        for (int v = 0; v <= hi; ++v) {
            if (remaining - v > t * slots_after) continue;
            x[pos] = v;
            self(self, pos + 1, remaining - v);
        }
        x[pos] = 0;
    };
    rec(rec, 0, t * r);
    return count;
}

UniPoly ehrhart_polynomial(const Matroid& m) {
    if (m.empty()) throw EmptyMatroid("empty matroid has no polytope");
    int d = affine_dimension(matroid_polytope_vertices(m));
    if (d > kMaxFaceDim) throw ScaleExceeded("ehrhart guard: dim " + std::to_string(d));
    std::vector<std::pair<Rational, Rational>> points;
    for (int t = 0; t <= d; ++t)
        points.emplace_back(Rational(t), Rational(dilate_lattice_point_count(m, t)));
    return lagrange_interpolate(points);
}

HPolytope p_as_polytope(const Subset& a, int s, int n) {
    if (s < 0) throw InvalidParameters("rank threshold must be nonnegative");
    uint32_t mask = mask_of(a, n);
    HPolytope p;
    p.n = n;
    for (int i = 0; i < n; ++i) {
        p.constraints.push_back({unit_row(n, i, -1), Rational(0), Rel::LessEq});
        p.constraints.push_back({unit_row(n, i, 1), Rational(1), Rel::LessEq});
    }
    if (mask == 0) {
        if (s > 0) {
            // Empty: the threshold cannot be met by an empty index set.
            p.constraints.push_back({unit_row(n, 0, 1), Rational(-1), Rel::LessEq});
        }
        return p;
    }
    QVector normal(n, Rational(0));
    for (uint32_t rest = mask; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        normal[e] = -1;
    }
    p.constraints.push_back({std::move(normal), Rational(-s), Rel::LessEq});
    return p;
}

VPolytope pbei_polytope(const Subset& b, const Subset& e, const Subset& i, int n) {
    uint32_t bm = mask_of(b, n);
    uint32_t em = mask_of(e, n);
    uint32_t im = mask_of(i, n);
    if (em & bm) throw InvalidParameters("external candidates must avoid the basis");
    if ((im & bm) != im) throw InvalidParameters("internal candidates must lie in the basis");
    VPolytope p;
    p.n = n;
    QVector base = indicator_vector(bm, n);
    for (int out = 1; out <= n; ++out) {
        if (bm & (1u << (out - 1))) continue;
        for (int in = 1; in <= n; ++in) {
            if (!(bm & (1u << (in - 1)))) continue;
            bool from_external = (em & (1u << (out - 1))) && out > in;
            bool from_internal = (im & (1u << (in - 1))) && out < in;
            if (!from_external && !from_internal) continue;
            uint32_t am = (bm & ~(1u << (in - 1))) | (1u << (out - 1));
            QVector mid = indicator_vector(am, n);
            for (int j = 0; j < n; ++j) mid[j] = (mid[j] + base[j]) / 2;
            p.vertices.push_back(std::move(mid));
        }
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
    return p;
}

bool gelfand_serganova_check(int n, const std::vector<Subset>& collection) {
    if (collection.empty()) return true;
    std::vector<uint32_t> masks;
    size_t card = collection.front().size();
    for (const auto& s : collection) {
        if (s.size() != card)
            throw CardinalityMismatch("collection members have different sizes");
        masks.push_back(mask_of(s, n));
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.size() == 1) return true;

    VPolytope p;
    p.n = n;
    for (uint32_t m : masks) p.vertices.push_back(indicator_vector(m, n));
    FaceLattice fl = enumerate_faces(p);
    for (int ei : fl.faces_of_dim(1)) {
        const auto& verts = fl.faces[ei].vertex_indices;
        assert(verts.size() == 2);
        int plus = 0, minus = 0, other = 0;
        for (int j = 0; j < n; ++j) {
            Rational diff = p.vertices[verts[1]][j] - p.vertices[verts[0]][j];
            if (diff == 1) ++plus;
            else if (diff == -1) ++minus;
            else if (diff != 0) ++other;
        }
        if (!(plus == 1 && minus == 1 && other == 0)) return false;
    }
    return true;
}

}  // namespace matval
