#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "matval/formal_sum.hpp"
#include "matval/geometry.hpp"
#include "matval/matroid.hpp"
#include "matval/polynomial.hpp"

namespace matval {

/// 0/1 rank-jump sequence of a maximal flag.
struct JumpSequence {
    std::vector<int> bits;
    auto operator<=>(const JumpSequence&) const = default;
};

/// Integer composition (positive parts), indexing the monomial
/// quasi-symmetric basis.
struct Composition {
    std::vector<int> parts;
    auto operator<=>(const Composition&) const = default;
};

using RankValuationValue = FormalSum<SubsetRankPair>;
using ActivityValuationValue = FormalSum<ActivityRecord>;
using FlagKey = std::vector<SubsetRankPair>;
using FlagValuationValue = FormalSum<FlagKey>;
using JumpSequenceValue = FormalSum<JumpSequence>;
using QuasiSymValue = FormalSum<Composition>;

/// Ground sets up to this size run the geometric route alongside the
/// combinatorial one in rank_indicator, pbei_intersects and g_bei.
constexpr int kDualRouteMaxN = 6;

/// 1 iff Q(M) meets X; the empty matroid contributes 0.
int i_x(const Matroid& m, const HPolytope& x);
int i_x_complement(const Matroid& m, const HPolytope& x);

/// [r_M(A) = s], computed combinatorially and (below the guard) as
/// i_{P_{A,s}} - i_{P_{A,s+1}}; disagreement raises InternalDisagreement.
int rank_indicator(const Matroid& m, const Subset& a, int s);

/// sum over all A of the symbol (A, r(A)); zero sum for the empty matroid.
RankValuationValue f_rank(const Matroid& m);

/// sum over bases of the symbol (B, E(B), I(B)); zero for the empty matroid.
ActivityValuationValue f_activities(const Matroid& m);

enum class TutteMethod { CorankNullity, Activities };
Polynomial2 tutte(const Matroid& m, TutteMethod method);

/// Whether Q(M) meets P(B,E,I): decided by the joint convex-combination LP
/// and by the basis-activity criterion, which must agree.
bool pbei_intersects(const Matroid& m, const Subset& b, const Subset& e, const Subset& i);

/// [B basis, E = E(B), I = I(B)], directly and through the inclusion-
/// exclusion decomposition into complementary indicators.
int g_bei(const Matroid& m, const Subset& b, const Subset& e, const Subset& i);

/// Direct and decomposed g values for every admissible (E, I) at a fixed B,
/// sharing one indicator cache; rows are (E mask, I mask, direct, decomposed).
std::vector<std::tuple<uint32_t, uint32_t, int, int>> g_bei_audit(
    const Matroid& m, const Subset& b);

/// sum over maximal flags of ((A_1, r(A_1)), ..., (A_n, r(A_n))).
FlagValuationValue h_flags(const Matroid& m);

/// sum over maximal flags of the 0/1 rank-jump sequence.
JumpSequenceValue g_derksen(const Matroid& m);

/// sum of monomial quasi-symmetric generators over the ordered set
/// partitions whose induced weighting has a unique minimum-weight basis.
QuasiSymValue qs_bjr(const Matroid& m);

/// Top-dimensional normalized volume: 0 unless dim Q(M) = n - 1.
Rational volume_valuation(const Matroid& m);
Integer basis_count_valuation(const Matroid& m);
Integer constant_valuation(const Matroid& m);
UniPoly ehrhart_valuation(const Matroid& m);

/// Specializations used by the cross-checks: activities to the Tutte
/// polynomial ((B,E,I) -> x^|I| y^|E|) and flags to jump sequences.
Polynomial2 activities_to_tutte(const ActivityValuationValue& v);
JumpSequenceValue flags_to_jumps(const FlagValuationValue& v);

}  // namespace matval
