#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "matval/errors.hpp"

namespace matval {

/// Subsets of the ground set [n] = {1..n} are sorted 1-based element lists.
using Subset = std::vector<int>;

uint32_t mask_of(const Subset& s, int n);
Subset subset_of(uint32_t mask);

/// (A, r(A)) symbol; also the (A, s) argument pair of the rank indicators.
struct SubsetRankPair {
    Subset subset;
    int rank = 0;
    auto operator<=>(const SubsetRankPair&) const = default;
};

/// (B, E, I) symbol: a basis with its externally / internally active sets.
struct ActivityRecord {
    Subset basis;
    Subset external;  // subset of [n] \ basis
    Subset internal;  // subset of basis
    auto operator<=>(const ActivityRecord&) const = default;
};

struct ExchangeWitness {
    uint32_t basis1, basis2;
    int element;  // element of basis1 \ basis2 with no exchange partner
};

/// Brute-force basis exchange scan; nullopt when the collection is a matroid.
std::optional<ExchangeWitness> find_exchange_violation(const std::vector<uint32_t>& masks);

/// Matroid on ground set [n] in basis representation. Immutable after
/// construction; the basis list is kept in lexicographic order of the sorted
/// element lists so everything downstream is deterministic. The empty
/// collection is permitted; such a matroid carries no rank.
class Matroid {
public:
    /// Placeholder: the empty matroid on an empty ground set.
    Matroid() = default;

    /// Validates range, equal cardinality and the exchange axiom.
    /// Duplicates are dropped; an empty list yields the empty matroid.
    static Matroid from_bases(int n, const std::vector<Subset>& bases);

    static Matroid uniform(int k, int n);

    /// Bases are the sets {a_1 < ... < a_r} with a_i <= s_i.
    static Matroid schubert(int n, const Subset& s);

    /// Image matroid under a permutation of the ground set (sigma[i-1] is the
    /// image of element i). The exchange axiom is preserved, no re-validation.
    Matroid relabel(const std::vector<int>& sigma) const;

    int n() const { return n_; }
    bool empty() const { return masks_.empty(); }
    int rank() const;
    int rank(const Subset& a) const;
    int rank_mask(uint32_t a) const;

    bool is_basis_mask(uint32_t m) const;
    bool is_basis(const Subset& b) const { return is_basis_mask(mask_of(b, n_)); }
    size_t basis_count() const { return masks_.size(); }
    const std::vector<uint32_t>& basis_masks() const { return masks_; }
    std::vector<Subset> bases() const;

    ActivityRecord activities(const Subset& basis) const;
    /// (external mask, internal mask); basis must belong to the matroid.
    std::pair<uint32_t, uint32_t> activity_masks(uint32_t basis) const;

    /// All unordered pairs of bases differing in one element; by the
    /// Gelfand-Serganova correspondence these are the edges of the polytope.
    std::vector<std::pair<Subset, Subset>> adjacent_basis_pairs() const;

    bool operator==(const Matroid&) const = default;
    bool operator<(const Matroid& o) const;

    /// Trusted constructor for callers that already know the exchange axiom
    /// holds (relabeling, faces of validated subdivisions, generators).
    static Matroid from_valid_masks(int n, std::vector<uint32_t> masks);

private:
    int n_ = 0;
    std::vector<uint32_t> masks_;         // canonical (element-list lex) order
    std::vector<uint32_t> sorted_masks_;  // numeric order, for membership tests
    int rank_ = -1;
};

/// True iff every edge of conv{e_B : B in collection} is parallel to some
/// e_i - e_j. Agrees with the exchange-axiom test. Defined with the geometry
/// module since it enumerates faces.
bool gelfand_serganova_check(int n, const std::vector<Subset>& collection);

}  // namespace matval
