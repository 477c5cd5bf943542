#include <doctest.h>

#include <set>

#include "matval/matroid.hpp"
#include "support.hpp"

using namespace matval;

TEST_CASE("uniform matroids") {
    CHECK(Matroid::uniform(3, 6).basis_count() == 20);
    Matroid z = Matroid::uniform(0, 3);
    CHECK(z.basis_count() == 1);
    CHECK(z.rank() == 0);
    Matroid u24 = Matroid::uniform(2, 4);
    std::vector<Subset> expected{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(u24.bases() == expected);
    CHECK_THROWS_AS(Matroid::uniform(5, 4), InvalidParameters);
}

TEST_CASE("from_bases validation and canonical order") {
    std::vector<Subset> all2;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) all2.push_back({a, b});
    CHECK(Matroid::from_bases(4, all2) == Matroid::uniform(2, 4));

    // brute-force oracle over the single offending pair: {1,2},{3,4} has no
    // exchange for element 1
    bool violation = false;
    for (int b2 : {3, 4}) {
        Subset swapped{2, b2};
        std::sort(swapped.begin(), swapped.end());
        if (swapped == Subset{1, 2} || swapped == Subset{3, 4}) violation = true;
    }
    CHECK_FALSE(violation);
    CHECK_THROWS_AS(Matroid::from_bases(4, {{1, 2}, {3, 4}}), ExchangeViolation);

    Matroid empty = Matroid::from_bases(3, {});
    CHECK(empty.empty());
    CHECK(empty.n() == 3);
    CHECK_THROWS_AS(empty.rank(), EmptyMatroid);

    CHECK_THROWS_AS(Matroid::from_bases(4, {{1, 2}, {3}}), CardinalityMismatch);
    CHECK_THROWS_AS(Matroid::from_bases(6, {{1, 7}}), ElementOutOfRange);
    // duplicates collapse
    CHECK(Matroid::from_bases(2, {{1}, {1}, {2}}).basis_count() == 2);
}

TEST_CASE("schubert matroids") {
    Matroid sm = Matroid::schubert(6, {2, 4, 6});
    // exhaustive enumeration oracle: triples a<=2, b<=4, c<=6
    int count = 0;
    for (int a = 1; a <= 2; ++a)
        for (int b = a + 1; b <= 4; ++b)
            for (int c = b + 1; c <= 6; ++c) ++count;
    CHECK(count == 14);
    CHECK(sm.basis_count() == 14);
    CHECK(sm.is_basis({1, 2, 3}));
    CHECK_FALSE(sm.is_basis({3, 4, 5}));
    // vacuous bounds give the uniform matroid
    CHECK(Matroid::schubert(6, {4, 5, 6}) == Matroid::uniform(3, 6));
    CHECK_THROWS_AS(Matroid::schubert(6, {4, 2}), InvalidParameters);
    CHECK_THROWS_AS(Matroid::schubert(6, {}), InvalidParameters);
    CHECK_THROWS_AS(Matroid::schubert(6, {7}), InvalidParameters);
}

TEST_CASE("relabel") {
    Matroid sm = Matroid::schubert(6, {2, 4, 6});
    std::vector<int> sigma{3, 4, 5, 6, 1, 2};
    Matroid m2 = sm.relabel(sigma);
    CHECK(m2.basis_count() == 14);
    CHECK(m2.is_basis({3, 4, 5}));  // image of {1,2,3}
    // identity
    CHECK(sm.relabel({1, 2, 3, 4, 5, 6}) == sm);
    // sigma^3 = id
    CHECK(sm.relabel(sigma).relabel(sigma).relabel(sigma) == sm);
    // inverse roundtrip
    std::vector<int> inv(6);
    for (int i = 0; i < 6; ++i) inv[sigma[i] - 1] = i + 1;
    CHECK(m2.relabel(inv) == sm);
    CHECK_THROWS_AS(sm.relabel({1, 1, 3, 4, 5, 6}), InvalidPermutation);
}

TEST_CASE("rank function") {
    Matroid u24 = Matroid::uniform(2, 4);
    CHECK(u24.rank({1}) == 1);
    CHECK(u24.rank({}) == 0);
    CHECK(u24.rank({1, 2, 3, 4}) == 2);
    // matroid with bases {13,14}: loops 2, and {3,4} parallel
    Matroid m6 = Matroid::from_bases(4, {{1, 3}, {1, 4}});
    CHECK(m6.rank({1, 4}) == 2);
    CHECK(m6.rank({2}) == 0);
    CHECK(m6.rank({3, 4}) == 1);
}

TEST_CASE("rank is monotone and submodular (exhaustive n <= 4, sampled n <= 6)") {
    std::vector<Matroid> corpus;
    for (int n = 1; n <= 4; ++n)
        for (const Matroid& m : testing::all_matroids(n)) corpus.push_back(m);
    testing::Rng rng(5150);
    for (int t = 0; t < 25; ++t) corpus.push_back(testing::random_matroid(5 + t % 2, rng));
    for (const Matroid& m : corpus) {
        int full = (1 << m.n()) - 1;
        CHECK(m.rank_mask(full) == m.rank());
        for (uint32_t a = 0; a <= static_cast<uint32_t>(full); ++a) {
            for (uint32_t b = 0; b <= static_cast<uint32_t>(full); ++b) {
                if ((a & ~b) == 0) CHECK(m.rank_mask(a) <= m.rank_mask(b));
                CHECK(m.rank_mask(a | b) + m.rank_mask(a & b) <=
                      m.rank_mask(a) + m.rank_mask(b));
            }
        }
    }
}

TEST_CASE("activities") {
    Matroid m1 = Matroid::schubert(6, {2, 4, 6});
    ActivityRecord rec = m1.activities({1, 2, 6});
    CHECK(rec.external == Subset{5});
    CHECK(rec.internal == Subset{1, 2});

    ActivityRecord u = Matroid::uniform(3, 6).activities({4, 5, 6});
    CHECK(u.external == Subset{1, 2, 3});
    CHECK(u.internal.empty());

    // bases {13,14,34}: 2 is externally active w.r.t. {1,3}; both 1 and 3
    // are internally active (the only exchanges bring in the larger 4)
    Matroid m = Matroid::from_bases(4, {{1, 3}, {1, 4}, {3, 4}});
    ActivityRecord r2 = m.activities({1, 3});
    CHECK(r2.external == Subset{2});
    CHECK(r2.internal == Subset{1, 3});

    CHECK_THROWS_AS(m.activities({1, 2}), NotABasis);

    // recomputation is pure
    CHECK(m.activities({1, 3}) == r2);
}

TEST_CASE("adjacent basis pairs") {
    CHECK(Matroid::uniform(1, 2).adjacent_basis_pairs().size() == 1);
    // octahedron edge count, against a brute-force pair scan
    Matroid u24 = Matroid::uniform(2, 4);
    int expected = 0;
    auto bs = u24.bases();
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j) {
            std::set<int> diff(bs[i].begin(), bs[i].end());
            for (int e : bs[j]) diff.erase(e);
            if (diff.size() == 1) ++expected;
        }
    CHECK(expected == 12);
    CHECK(u24.adjacent_basis_pairs().size() == 12);
    CHECK_THROWS_AS(Matroid::from_bases(2, {}).adjacent_basis_pairs(), EmptyMatroid);
}
