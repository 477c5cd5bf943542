#include "matval/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace matval {

namespace {

std::string cell_name(int i) { return "cell " + std::to_string(i); }

std::vector<uint32_t> mask_intersection(const std::vector<uint32_t>& a,
                                        const std::vector<uint32_t>& b) {
    std::vector<uint32_t> sa = a, sb = b, out;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

ValidationReport validate_subdivision(const Matroid& ambient,
                                      const std::vector<Matroid>& cells) {
    if (ambient.empty()) throw EmptyMatroid("ambient matroid is empty");
    for (const Matroid& c : cells) {
        if (c.empty()) throw EmptyMatroid("subdivision cells must be nonempty");
        if (c.n() != ambient.n())
            throw DimensionMismatch("cell ground set differs from the ambient one");
    }
    if (cells.empty()) throw InvalidParameters("subdivision needs at least one cell");

    ValidationReport rep;
    int m = static_cast<int>(cells.size());
    VPolytope q = matroid_polytope_vertices(ambient);
    int dq = affine_dimension(q);

    // (1) containment: cell bases inside the ambient ones, cells full-dimensional.
    rep.containment_ok = true;
    std::vector<VPolytope> cell_polys;
    for (int i = 0; i < m; ++i) {
        cell_polys.push_back(matroid_polytope_vertices(cells[i]));
        for (uint32_t b : cells[i].basis_masks())
            if (!ambient.is_basis_mask(b)) {
                rep.containment_ok = false;
                rep.issues.push_back(cell_name(i + 1) + " has a basis outside the ambient matroid");
                break;
            }
        int di = affine_dimension(cell_polys.back());
        if (di != dq) {
            rep.containment_ok = false;
            rep.issues.push_back(cell_name(i + 1) + " has dimension " + std::to_string(di) +
                                 " instead of " + std::to_string(dq));
        }
    }

    // (2) pairwise faces. For each pair with common vertex set C: conv(C)
    // must be a proper face of both cells (one supporting functional per
    // cell), and the geometric intersection must stay inside the supporting
    // hyperplane, so that Q_i meet Q_j = conv(C) exactly. Pairs without
    // common vertices must admit a strict separation.
    rep.pairwise_ok = true;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::string pair_name =
                "cells " + std::to_string(i + 1) + "," + std::to_string(j + 1);
            auto common = mask_intersection(cells[i].basis_masks(), cells[j].basis_masks());
            if (common.empty()) {
                auto w = separating_functional(cell_polys[i].vertices, cell_polys[j].vertices);
                if (!w) {
                    rep.pairwise_ok = false;
                    rep.issues.push_back(pair_name +
                                         ": no common vertex but the polytopes meet");
                } else {
                    rep.witnesses.push_back({i + 1, j + 1, false, w->first, w->second});
                }
                continue;
            }
            if (common.size() == cells[i].basis_count() ||
                common.size() == cells[j].basis_count()) {
                rep.pairwise_ok = false;
                rep.issues.push_back(pair_name + ": common vertices are not a proper face");
                continue;
            }
            std::vector<QVector> sub;
            for (uint32_t b : common) {
                QVector v(ambient.n(), Rational(0));
                for (int e = 0; e < ambient.n(); ++e)
                    if (b & (1u << e)) v[e] = 1;
                sub.push_back(std::move(v));
            }
            auto wi = supporting_functional(cell_polys[i].vertices, sub);
            auto wj = supporting_functional(cell_polys[j].vertices, sub);
            if (!wi || !wj) {
                rep.pairwise_ok = false;
                rep.issues.push_back(pair_name +
                                     ": common vertices are not a face of both cells");
                continue;
            }
            if (hulls_meet_off_hyperplane(cell_polys[i], cell_polys[j], wi->first,
                                          wi->second)) {
                rep.pairwise_ok = false;
                rep.issues.push_back(pair_name +
                                     ": the intersection leaves the common face");
                continue;
            }
            rep.witnesses.push_back({i + 1, j + 1, true, wi->first, wi->second});
        }
    }

    // (3) coverage by exact volume.
    rep.ambient_volume = normalized_volume(q);
    Rational total = 0;
    for (int i = 0; i < m; ++i) {
        rep.cell_volumes.push_back(normalized_volume(cell_polys[i]));
        total += rep.cell_volumes.back();
    }
    rep.coverage_ok = (total == rep.ambient_volume);
    if (!rep.coverage_ok)
        rep.issues.push_back("cell volumes sum to " + rational_to_string(total) +
                             ", ambient volume is " + rational_to_string(rep.ambient_volume));
    return rep;
}

ValidatedSubdivision::ValidatedSubdivision(Matroid ambient, std::vector<Matroid> cells)
    : sub_{std::move(ambient), std::move(cells)} {
    report_ = validate_subdivision(sub_.ambient, sub_.cells);
    if (!report_.valid()) {
        std::string msg = "subdivision failed validation";
        for (const auto& issue : report_.issues) msg += "; " + issue;
        throw NotValidated(msg);
    }
    ambient_dim_ = affine_dimension(matroid_polytope_vertices(sub_.ambient));

    int m = static_cast<int>(sub_.cells.size());
    lattice_.num_cells = m;
    lattice_.entries.emplace(std::vector<int>{}, sub_.ambient);
    for (uint32_t bits = 1; bits < (1u << m); ++bits) {
        std::vector<int> key;
        std::vector<uint32_t> masks;
        bool first = true;
        for (int i = 0; i < m; ++i) {
            if (!(bits & (1u << i))) continue;
            key.push_back(i + 1);
            masks = first ? sub_.cells[i].basis_masks()
                          : mask_intersection(masks, sub_.cells[i].basis_masks());
            first = false;
        }
        if (masks.empty()) continue;
        lattice_.entries.emplace(std::move(key),
                                 Matroid::from_valid_masks(sub_.ambient.n(), std::move(masks)));
    }

    // Interior faces: lattice entries with nonempty A, deduplicated by basis
    // set; the lexicographically least witness A is kept (map order is lex).
    std::set<std::vector<uint32_t>> seen;
    for (const auto& [key, mat] : lattice_.entries) {
        if (key.empty()) continue;
        if (!seen.insert(mat.basis_masks()).second) continue;
        int dim = affine_dimension(matroid_polytope_vertices(mat));
        interior_.push_back({mat, dim, key});
    }
}

FacePosetWithTop face_poset(const ValidatedSubdivision& s) {
    const Matroid& ambient = s.ambient();
    if (s.ambient_dim() > 6)
        throw ScaleExceeded("face poset guard: dim " + std::to_string(s.ambient_dim()));

    // Collect the nonempty faces of every cell, keyed by ambient basis sets.
    std::map<std::vector<uint32_t>, int> dims;
    for (const Matroid& cell : s.cells()) {
        VPolytope p = matroid_polytope_vertices(cell);
        FaceLattice fl = enumerate_faces(p);
        const auto& masks = cell.basis_masks();
        for (const Face& f : fl.faces) {
            if (f.dim < 0) continue;
            std::vector<uint32_t> key;
            key.reserve(f.vertex_indices.size());
            for (int vi : f.vertex_indices) key.push_back(masks[vi]);
            std::sort(key.begin(), key.end());
            dims.emplace(std::move(key), f.dim);
        }
    }

    FacePosetWithTop out;
    for (const auto& [key, d] : dims) {
        out.face_bases.push_back(key);
        out.dims.push_back(d);
    }
    int k = static_cast<int>(out.face_bases.size());

    // Boundary flags: contained in some facet of the ambient polytope.
    VPolytope q = matroid_polytope_vertices(ambient);
    FaceLattice qfl = enumerate_faces(q);
    std::vector<std::vector<uint32_t>> q_facets;
    for (int fi : qfl.facet_indices()) {
        std::vector<uint32_t> key;
        for (int vi : qfl.faces[fi].vertex_indices)
            key.push_back(ambient.basis_masks()[vi]);
        std::sort(key.begin(), key.end());
        q_facets.push_back(std::move(key));
    }
    out.boundary.assign(k, false);
    for (int i = 0; i < k; ++i)
        for (const auto& facet : q_facets)
            if (std::includes(facet.begin(), facet.end(), out.face_bases[i].begin(),
                              out.face_bases[i].end())) {
                out.boundary[i] = true;
                break;
            }

    // Order: bottom (index 0) below everything, top (index k+1) above, faces
    // ordered by vertex-set inclusion.
    int total = k + 2;
    std::vector<std::vector<bool>> leq(total, std::vector<bool>(total, false));
    for (int x = 0; x < total; ++x) leq[x][x] = true;
    for (int x = 0; x < total; ++x) {
        leq[0][x] = true;
        leq[x][total - 1] = true;
    }
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b &&
                std::includes(out.face_bases[b].begin(), out.face_bases[b].end(),
                              out.face_bases[a].begin(), out.face_bases[a].end()))
                leq[a + 1][b + 1] = true;
    out.poset = Poset(leq);
    return out;
}

bool topology_check(const ValidatedSubdivision& s) {
    FacePosetWithTop fp = face_poset(s);
    const Poset& p = fp.poset;
    int bottom = fp.bottom_index(), top = fp.top_index();
    for (int x = 0; x < p.size(); ++x) {
        for (int y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            auto len = p.interval_length(x, y);
            if (!len) return false;  // interval not graded
            long long expected;
            if (x == bottom && y == top) {
                expected = 0;  // reduced Euler characteristic of a ball
            } else if (y == top && x != bottom && x != top && fp.boundary[x - 1]) {
                expected = 0;
            } else {
                expected = (*len % 2 == 0) ? 1 : -1;
            }
            if (p.mobius(x, y) != expected) return false;
        }
    }
    return true;
}

}  // namespace matval
