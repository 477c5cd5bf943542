#include <doctest.h>

#include "matval/generators.hpp"
#include "matval/json_io.hpp"
#include "matval/tables.hpp"
#include "support.hpp"

using namespace matval;

TEST_CASE("matroid JSON round trip") {
    Matroid m = Matroid::schubert(6, {2, 4, 6});
    Json j = matroid_to_json(m);
    CHECK(j["n"] == 6);
    CHECK(j["bases"].size() == 14);
    CHECK(matroid_from_json(j) == m);
    // the emitted outer list is lexicographically sorted with sorted inner lists
    CHECK(j["bases"][0] == Json::array({1, 2, 3}));

    // unsorted input is accepted and canonicalized
    Json shuffled = Json::parse(R"({"n": 4, "bases": [[4,3],[1,2],[3,1],[1,4],[2,3],[2,4]]})");
    CHECK(matroid_from_json(shuffled) == Matroid::uniform(2, 4));

    CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"n": 6})")), ParseError);
    CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"n": 6, "bases": [[1,7]]})")),
                    ElementOutOfRange);
    CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"n": 4, "bases": [[1,2],[3,4]]})")),
                    ExchangeViolation);
}

TEST_CASE("subdivision JSON round trip") {
    Subdivision s = octahedron_subdivision();
    Json j = subdivision_to_json(s);
    Subdivision back = subdivision_from_json(j);
    CHECK(back.ambient == s.ambient);
    CHECK(back.cells == s.cells);
}

TEST_CASE("formal sum serialization round trips bit-exactly") {
    Matroid m = Matroid::uniform(2, 4);
    auto sum = f_rank(m);
    Json j = formal_sum_to_json(sum);
    auto back = formal_sum_from_json<SubsetRankPair>(j);
    CHECK(back == sum);
    CHECK(formal_sum_to_json(back).dump() == j.dump());

    auto acts = f_activities(m);
    CHECK(formal_sum_from_json<ActivityRecord>(formal_sum_to_json(acts)) == acts);

    auto flags = h_flags(Matroid::uniform(1, 2));
    CHECK(formal_sum_from_json<FlagKey>(formal_sum_to_json(flags)) == flags);

    auto jumps = g_derksen(m);
    CHECK(formal_sum_from_json<JumpSequence>(formal_sum_to_json(jumps)) == jumps);

    auto qs = qs_bjr(m);
    CHECK(formal_sum_from_json<Composition>(formal_sum_to_json(qs)) == qs);

    // random sums over jump keys
    testing::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        JumpSequenceValue v;
        int terms = rng.below(6);
        for (int t = 0; t < terms; ++t) {
            JumpSequence k;
            for (int i = 0; i < 3; ++i) k.bits.push_back(rng.below(2));
            v.add_term(k, Integer(rng.below(9)) - 4);
        }
        CHECK(formal_sum_from_json<JumpSequence>(formal_sum_to_json(v)) == v);
    }
}

TEST_CASE("rationals as p/q strings") {
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(-8, 2)) == "-4");
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-4") == Rational(-4));
    CHECK(rational_from_string("6/8") == Rational(3, 4));
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("x"), ParseError);
}

TEST_CASE("polynomial serialization") {
    Polynomial2 p;
    p.add_term(2, 0, 1);
    p.add_term(0, 1, 2);
    Json j = polynomial2_to_json(p);
    CHECK(j.size() == 2);
    CHECK(j["x^2 y^0"] == 1);
    CHECK(j["x^0 y^1"] == 2);

    UniPoly e(QVector{Rational(1), Rational(1, 2)});
    Json ej = unipoly_to_json(e);
    CHECK(ej == Json::array({"1", "1/2"}));
}

TEST_CASE("activity table and parity") {
    Subdivision sub = u36_subdivision();
    ValidatedSubdivision s(sub.ambient, sub.cells);
    ActivityTable t = activity_table(s);
    CHECK(t.row_bases.size() == 20);
    CHECK(t.columns.size() == 8);
    CHECK(t.columns[0].empty());
    CHECK(t.columns[3] == std::vector<int>{1, 2});
    CHECK(activity_parity_holds(t));

    std::string tsv = activity_table_tsv(t);
    CHECK(tsv.find("B\tM:E\tM:I\tM1:E\tM1:I\tM2:E\tM2:I\tM12:E") == 0);
    // row 123 appears only in M and M1
    CHECK(tsv.find("\n123\t-\t123\t-\t123\t\t\t\t\t\t\t\t\t\t\t\t\n") != std::string::npos);

    std::string faces = interior_faces_tsv(s);
    CHECK(faces.find("A\tbases\tdim\n") == 0);
    // triple intersection: product of three segments, so dimension 3
    CHECK(faces.find("123\t8\t3") != std::string::npos);
}

TEST_CASE("validation report serialization") {
    Subdivision oct = octahedron_subdivision();
    Json j = validation_report_to_json(validate_subdivision(oct.ambient, oct.cells));
    CHECK(j["valid"] == true);
    CHECK(j["ambient_volume"] == "4");
    CHECK(j["cell_volumes"] == Json::array({"2", "2"}));
}
