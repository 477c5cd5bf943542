#include "matval/valuations.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <numeric>
#include <string>

namespace matval {

namespace {

std::string mask_str(uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int e : subset_of(mask)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

VPolytope point_polytope(uint32_t mask, int n) {
    VPolytope p;
    p.n = n;
    QVector v(n, Rational(0));
    for (uint32_t rest = mask; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        v[e] = 1;
    }
    p.vertices.push_back(std::move(v));
    return p;
}

bool pbei_combinatorial(const Matroid& m, uint32_t bm, uint32_t em, uint32_t im) {
    if (m.empty() || !m.is_basis_mask(bm)) return false;
    auto [ext, in] = m.activity_masks(bm);
    bool active_pair = ((em & ~ext) == 0) && ((im & ~in) == 0);
    return !active_pair;
}

void check_pbei_args(const Matroid& m, uint32_t bm, uint32_t em, uint32_t im) {
    (void)m;
    if (em & bm) throw InvalidParameters("E must be disjoint from B");
    if ((im & bm) != im) throw InvalidParameters("I must be contained in B");
}

}  // namespace

int i_x(const Matroid& m, const HPolytope& x) {
    if (m.empty()) return 0;
    if (x.n != m.n()) throw DimensionMismatch("test set lives in the wrong dimension");
    return lp_feasible(intersect_h(matroid_polytope_h(m), x)) ? 1 : 0;
}

int i_x_complement(const Matroid& m, const HPolytope& x) { return 1 - i_x(m, x); }

int rank_indicator(const Matroid& m, const Subset& a, int s) {
    if (s < 0) throw InvalidParameters("rank value must be nonnegative");
    if (m.empty()) return 0;
    uint32_t am = mask_of(a, m.n());
    int comb = (m.rank_mask(am) == s) ? 1 : 0;
    if (m.n() <= kDualRouteMaxN) {
        int geo = i_x(m, p_as_polytope(a, s, m.n())) -
                  i_x(m, p_as_polytope(a, s + 1, m.n()));
        if (geo != comb)
            throw InternalDisagreement("rank indicator mismatch at A=" + mask_str(am) +
                                       ", s=" + std::to_string(s));
    }
    return comb;
}

RankValuationValue f_rank(const Matroid& m) {
    RankValuationValue v;
    if (m.empty()) return v;
    int n = m.n();
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        v.add_term({subset_of(mask), m.rank_mask(mask)}, 1);
    return v;
}

ActivityValuationValue f_activities(const Matroid& m) {
    ActivityValuationValue v;
    if (m.empty()) return v;
    for (uint32_t b : m.basis_masks()) {
        auto [e, i] = m.activity_masks(b);
        v.add_term({subset_of(b), subset_of(e), subset_of(i)}, 1);
    }
    return v;
}

Polynomial2 tutte(const Matroid& m, TutteMethod method) {
    if (m.empty()) throw EmptyMatroid("Tutte polynomial of the empty matroid");
    Polynomial2 out;
    int n = m.n();
    if (method == TutteMethod::Activities) {
        for (uint32_t b : m.basis_masks()) {
            auto [e, i] = m.activity_masks(b);
            out.add_term(std::popcount(i), std::popcount(e), 1);
        }
        return out;
    }
    int r = m.rank();
    Polynomial2 xm1 = Polynomial2::monomial(1, 0) - Polynomial2::constant(1);
    Polynomial2 ym1 = Polynomial2::monomial(0, 1) - Polynomial2::constant(1);
    std::vector<Polynomial2> xpow{Polynomial2::constant(1)}, ypow{Polynomial2::constant(1)};
    for (int k = 1; k <= r; ++k) xpow.push_back(xpow.back() * xm1);
    for (int k = 1; k <= n; ++k) ypow.push_back(ypow.back() * ym1);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int rk = m.rank_mask(mask);
        out += xpow[r - rk] * ypow[std::popcount(mask) - rk];
    }
    return out;
}

bool pbei_intersects(const Matroid& m, const Subset& b, const Subset& e, const Subset& i) {
    int n = m.n();
    uint32_t bm = mask_of(b, n), em = mask_of(e, n), im = mask_of(i, n);
    check_pbei_args(m, bm, em, im);
    bool comb = pbei_combinatorial(m, bm, em, im);
    if (!m.empty() && n <= kDualRouteMaxN) {
        bool geo = convex_hulls_intersect(matroid_polytope_vertices(m),
                                          pbei_polytope(b, e, i, n));
        if (geo != comb)
            throw InternalDisagreement("P(B,E,I) intersection mismatch at B=" + mask_str(bm) +
                                       ", E=" + mask_str(em) + ", I=" + mask_str(im));
    }
    return comb;
}

namespace {

// Complementary indicators for the decomposition of g: ibar(P(B,X,Y)) and
// ibar({e_B}), both decided geometrically.
struct GDecompositionCache {
    const Matroid& m;
    VPolytope q;
    int ibar_point;
    std::map<std::pair<uint32_t, uint32_t>, int> ibar_pbei;

    explicit GDecompositionCache(const Matroid& mat, uint32_t bm)
        : m(mat), q(matroid_polytope_vertices(mat)) {
        ibar_point = convex_hulls_intersect(q, point_polytope(bm, mat.n())) ? 0 : 1;
    }

    int ibar(uint32_t bm, uint32_t xm, uint32_t ym) {
        auto key = std::make_pair(xm, ym);
        auto it = ibar_pbei.find(key);
        if (it != ibar_pbei.end()) return it->second;
        VPolytope p = pbei_polytope(subset_of(bm), subset_of(xm), subset_of(ym), m.n());
        int val = convex_hulls_intersect(q, p) ? 0 : 1;
        ibar_pbei.emplace(key, val);
        return val;
    }
};

int g_direct(const Matroid& m, uint32_t bm, uint32_t em, uint32_t im) {
    if (m.empty() || !m.is_basis_mask(bm)) return 0;
    auto [ext, in] = m.activity_masks(bm);
    return (ext == em && in == im) ? 1 : 0;
}

int g_decomposed(GDecompositionCache& cache, int n, uint32_t bm, uint32_t em, uint32_t im) {
    uint32_t full = (1u << n) - 1;
    uint32_t outside = full & ~bm;
    long long total = 0;
    // X runs over supersets of E disjoint from B, Y over supersets of I in B.
    uint32_t xfree = outside & ~em;
    uint32_t yfree = bm & ~im;
    for (uint32_t xs = xfree;; xs = (xs - 1) & xfree) {
        uint32_t xm = em | xs;
        for (uint32_t ys = yfree;; ys = (ys - 1) & yfree) {
            uint32_t ym = im | ys;
            int term = cache.ibar(bm, xm, ym) - cache.ibar_point;
            if (term != 0) {
                int sign = (std::popcount(xm) + std::popcount(ym)) % 2 ? -1 : 1;
                total += sign * term;
            }
            if (ys == 0) break;
        }
        if (xs == 0) break;
    }
    int outer = (std::popcount(em) + std::popcount(im)) % 2 ? -1 : 1;
    long long value = outer * total;
    assert(value == 0 || value == 1);
    return static_cast<int>(value);
}

}  // namespace

int g_bei(const Matroid& m, const Subset& b, const Subset& e, const Subset& i) {
    int n = m.n();
    uint32_t bm = mask_of(b, n), em = mask_of(e, n), im = mask_of(i, n);
    check_pbei_args(m, bm, em, im);
    int direct = g_direct(m, bm, em, im);
    if (!m.empty() && n <= kDualRouteMaxN) {
        GDecompositionCache cache(m, bm);
        int decomposed = g_decomposed(cache, n, bm, em, im);
        if (decomposed != direct)
            throw InternalDisagreement("g decomposition mismatch at B=" + mask_str(bm) +
                                       ", E=" + mask_str(em) + ", I=" + mask_str(im));
    }
    return direct;
}

std::vector<std::tuple<uint32_t, uint32_t, int, int>> g_bei_audit(const Matroid& m,
                                                                  const Subset& b) {
    int n = m.n();
    uint32_t bm = mask_of(b, n);
    uint32_t full = (1u << n) - 1;
    uint32_t outside = full & ~bm;
    GDecompositionCache cache(m, bm);
    std::vector<std::tuple<uint32_t, uint32_t, int, int>> rows;
    for (uint32_t em = outside;; em = (em - 1) & outside) {
        for (uint32_t im = bm;; im = (im - 1) & bm) {
            rows.emplace_back(em, im, g_direct(m, bm, em, im),
                              g_decomposed(cache, n, bm, em, im));
            if (im == 0) break;
        }
        if (em == 0) break;
    }
    return rows;
}

FlagValuationValue h_flags(const Matroid& m) {
    FlagValuationValue v;
    if (m.empty()) return v;
    int n = m.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        FlagKey key;
        key.reserve(n);
        uint32_t acc = 0;
        for (int e : perm) {
            acc |= 1u << (e - 1);
            key.push_back({subset_of(acc), m.rank_mask(acc)});
        }
        v.add_term(key, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return v;
}

JumpSequenceValue g_derksen(const Matroid& m) {
    JumpSequenceValue v;
    if (m.empty()) return v;
    int n = m.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        JumpSequence seq;
        seq.bits.reserve(n);
        uint32_t acc = 0;
        int prev = 0;
        for (int e : perm) {
            acc |= 1u << (e - 1);
            int r = m.rank_mask(acc);
            seq.bits.push_back(r - prev);
            prev = r;
        }
        v.add_term(seq, 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return v;
}

QuasiSymValue qs_bjr(const Matroid& m) {
    QuasiSymValue v;
    if (m.empty()) return v;
    int n = m.n();
    const auto& bases = m.basis_masks();
    // Ordered set partitions as surjections onto {1..k}; genericity of a
    // weighting depends only on this data, by matroid greedy optimality.
    std::vector<int> block(n, 1);
    auto rec = [&](auto&& self, int pos, uint32_t used) -> void {
        if (pos == n) {
            int k = 32 - std::countl_zero(used);
            if (used != (k == 32 ? ~0u : (1u << k) - 1)) return;  // not onto {1..k}
            // minimum basis weight, uniqueness
            long long best = -1;
            int count = 0;
            for (uint32_t b : bases) {
                long long w = 0;
                for (uint32_t rest = b; rest;) {
                    int e = std::countr_zero(rest);
                    rest &= rest - 1;
                    w += block[e];
                }
                if (best < 0 || w < best) {
                    best = w;
                    count = 1;
                } else if (w == best) {
                    ++count;
                }
            }
            if (count == 1) {
                Composition comp;
                comp.parts.assign(k, 0);
                for (int e = 0; e < n; ++e) ++comp.parts[block[e] - 1];
                v.add_term(comp, 1);
            }
            return;
        }
        for (int k = 1; k <= n; ++k) {
            block[pos] = k;
            self(self, pos + 1, used | (1u << (k - 1)));
        }
    };
    rec(rec, 0, 0);
    return v;
}

Rational volume_valuation(const Matroid& m) {
    if (m.empty()) return 0;
    VPolytope p = matroid_polytope_vertices(m);
    if (affine_dimension(p) != m.n() - 1) return 0;
    return normalized_volume(p);
}

Integer basis_count_valuation(const Matroid& m) {
    return Integer(m.basis_count());
}

Integer constant_valuation(const Matroid& m) { return m.empty() ? 0 : 1; }

UniPoly ehrhart_valuation(const Matroid& m) {
    if (m.empty()) return UniPoly();
    return ehrhart_polynomial(m);
}

Polynomial2 activities_to_tutte(const ActivityValuationValue& v) {
    Polynomial2 out;
    for (const auto& [key, coeff] : v.terms())
        out.add_term(static_cast<int>(key.internal.size()),
                     static_cast<int>(key.external.size()), coeff);
    return out;
}

JumpSequenceValue flags_to_jumps(const FlagValuationValue& v) {
    JumpSequenceValue out;
    for (const auto& [key, coeff] : v.terms()) {
        JumpSequence seq;
        int prev = 0;
        for (const auto& step : key) {
            seq.bits.push_back(step.rank - prev);
            prev = step.rank;
        }
        out.add_term(seq, coeff);
    }
    return out;
}

}  // namespace matval
