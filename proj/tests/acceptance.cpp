// Acceptance suite: runs every acceptance criterion and prints one PASS/FAIL
// line per criterion. Exit code is the number of failed criteria.

#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matval/generators.hpp"
#include "matval/json_io.hpp"
#include "matval/tables.hpp"
#include "matval/valuations.hpp"
#include "support.hpp"

using namespace matval;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_data_dir;
std::string g_tool_path;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string run_tool(const std::string& args) {
    std::string cmd = g_tool_path + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

bool verify_all_valuations(const ValidatedSubdivision& s, std::string& detail) {
    struct Entry {
        const char* name;
        bool ok;
    };
    std::vector<Entry> results{
        {"rank", verify_valuation<RankValuationValue>(
                     [](const Matroid& m) { return f_rank(m); }, s)},
        {"activities", verify_valuation<ActivityValuationValue>(
                           [](const Matroid& m) { return f_activities(m); }, s)},
        {"tutte", verify_valuation<Polynomial2>(
                      [](const Matroid& m) { return tutte(m, TutteMethod::CorankNullity); }, s)},
        {"flags", verify_valuation<FlagValuationValue>(
                      [](const Matroid& m) { return h_flags(m); }, s)},
        {"derksen", verify_valuation<JumpSequenceValue>(
                        [](const Matroid& m) { return g_derksen(m); }, s)},
        {"qs", verify_valuation<QuasiSymValue>(
                   [](const Matroid& m) { return qs_bjr(m); }, s)},
        {"volume", verify_valuation<Rational>(
                       [](const Matroid& m) { return volume_valuation(m); }, s)},
        {"ehrhart", verify_valuation<UniPoly>(
                        [](const Matroid& m) { return ehrhart_valuation(m); }, s)},
        {"count", verify_valuation<Integer>(
                      [](const Matroid& m) { return basis_count_valuation(m); }, s)},
        {"const", verify_valuation<Integer>(
                      [](const Matroid& m) { return constant_valuation(m); }, s)},
    };
    bool all = true;
    for (const auto& r : results) {
        if (!r.ok) {
            all = false;
            detail += std::string(" ") + r.name + "=FAIL";
        }
    }
    return all;
}

// Paper activity table for the three-cell split of U(3,6): per basis row, 16
// cells in column order M, M1, M2, M12, M3, M13, M23, M123 (E then I); "-"
// is the empty set, "" an absent entry.
struct Table1Row {
    const char* basis;
    std::array<const char*, 16> cells;
};

const std::vector<Table1Row>& table1_reference() {
    static const std::vector<Table1Row> rows{
        {"123", {"-","123","-","123","","","","","","","","","","","",""}},
        {"124", {"-","12","-","12","","","","","","","","","","","",""}},
        {"125", {"-","12","-","12","","","","","-","125","-","125","","","",""}},
        {"126", {"-","12","5","12","","","","","-","12","5","12","","","",""}},
        {"134", {"-","1","-","1","-","134","-","134","","","","","","","",""}},
        {"135", {"-","1","-","1","-","13","-","13","-","15","-","15","-","135","-","135"}},
        {"136", {"-","1","5","1","-","13","5","13","-","1","5","1","-","13","5","13"}},
        {"145", {"-","1","3","1","-","1","3","1","3","15","3","15","3","15","3","15"}},
        {"146", {"-","1","35","1","-","1","35","1","3","1","35","1","3","1","35","1"}},
        {"156", {"-","1","","","","","","","-","1","","","","","",""}},
        {"234", {"1","-","1","-","1","34","1","34","","","","","","","",""}},
        {"235", {"1","-","1","-","1","3","1","3","1","5","1","5","1","35","1","35"}},
        {"236", {"1","-","15","-","1","3","15","3","1","-","15","-","1","3","15","3"}},
        {"245", {"1","-","13","-","1","-","13","-","13","5","13","5","13","5","13","5"}},
        {"246", {"1","-","135","-","1","-","135","-","13","-","135","-","13","-","135","-"}},
        {"256", {"1","-","","","","","","","1","-","","","","","",""}},
        {"345", {"12","-","","","12","-","","","","","","","","","",""}},
        {"346", {"12","-","","","12","-","","","","","","","","","",""}},
        {"356", {"12","-","","","12","3","","","12","-","","","12","3","",""}},
        {"456", {"123","-","","","123","-","","","123","-","","","123","-","",""}},
    };
    return rows;
}

std::string table1_reference_tsv() {
    std::string out = "B";
    const char* labels[] = {"M", "M1", "M2", "M12", "M3", "M13", "M23", "M123"};
    for (const char* l : labels) out += std::string("\t") + l + ":E\t" + l + ":I";
    out += "\n";
    for (const auto& row : table1_reference()) {
        out += row.basis;
        for (const auto& cell : row.cells) out += std::string("\t") + cell;
        out += "\n";
    }
    return out;
}

// -------------------------------------------------------------------------

bool criterion1(std::string& detail) {
    auto start = Clock::now();
    Subdivision sub = octahedron_subdivision();
    auto report = validate_subdivision(sub.ambient, sub.cells);
    if (!report.valid()) {
        detail = "validation failed";
        return false;
    }
    if (!(report.ambient_volume == 4 && report.cell_volumes == std::vector<Rational>{2, 2})) {
        detail = "volumes differ from 4 = 2 + 2";
        return false;
    }
    ValidatedSubdivision s(sub.ambient, sub.cells);
    Integer interior_counts = interior_face_sum<Integer>(
        [](const Matroid& m) { return basis_count_valuation(m); }, s);
    if (interior_counts != 6) {
        detail = "basis counts differ from 6 = 5 + 5 - 4";
        return false;
    }
    bool ok = verify_all_valuations(s, detail);
    double t = seconds_since(start);
    detail += " (" + std::to_string(t) + " s)";
    if (t >= 1.0) {
        detail += " over the 1 s budget";
        return false;
    }
    return ok;
}

bool criterion2(std::string& detail) {
    auto start = Clock::now();
    Subdivision sub = u36_subdivision();
    auto report = validate_subdivision(sub.ambient, sub.cells);
    if (!report.valid()) {
        detail = "validation failed";
        return false;
    }
    ValidatedSubdivision s(sub.ambient, sub.cells);
    bool ok = verify_all_valuations(s, detail);
    double t = seconds_since(start);
    detail += " (" + std::to_string(t) + " s)";
    if (t >= 30.0) {
        detail += " over the 30 s budget";
        return false;
    }
    return ok;
}

bool criterion3(std::string& detail) {
    Subdivision sub = u36_subdivision();
    ValidatedSubdivision s(sub.ambient, sub.cells);
    ActivityTable t = activity_table(s);
    const auto& ref = table1_reference();
    if (t.row_bases.size() != ref.size() || t.columns.size() != 8) {
        detail = "table shape mismatch";
        return false;
    }
    int mismatches = 0;
    for (size_t r = 0; r < ref.size(); ++r) {
        for (size_t c = 0; c < 8; ++c) {
            const auto& cell = t.cells[r][c];
            std::string e = cell ? (cell->first.empty() ? "-" : [&] {
                std::string x;
                for (int v : cell->first) x += std::to_string(v);
                return x;
            }()) : "";
            std::string i = cell ? (cell->second.empty() ? "-" : [&] {
                std::string x;
                for (int v : cell->second) x += std::to_string(v);
                return x;
            }()) : "";
            if (e != ref[r].cells[2 * c] || i != ref[r].cells[2 * c + 1]) ++mismatches;
        }
    }
    if (mismatches > 0) {
        detail = std::to_string(mismatches) + " cell mismatches against the printed table";
        return false;
    }
    std::string rendered = activity_table_tsv(t);
    if (rendered != table1_reference_tsv()) {
        detail = "TSV rendering differs from the reference rendering";
        return false;
    }
    std::string golden = read_file(g_data_dir + "/golden/table1.tsv");
    if (golden.empty()) {
        detail = "golden file missing";
        return false;
    }
    if (rendered != golden) {
        detail = "TSV differs from the committed golden file";
        return false;
    }
    if (!g_tool_path.empty()) {
        std::string emitted = run_tool("reproduce table1");
        if (emitted != golden) {
            detail = "CLI emission differs from the golden file";
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& detail) {
    Subdivision sub = u36_subdivision();
    ValidatedSubdivision s(sub.ambient, sub.cells);
    if (!activity_parity_holds(activity_table(s))) {
        detail = "an (E,I) value appears unequally often on the even and odd sides";
        return false;
    }
    return true;
}

bool criterion5(std::string& detail) {
    const SyzygyData& data = syzygy_data();
    std::vector<Matroid> ms;
    for (const auto& row : data.rank_rows) {
        try {
            ms.push_back(matroid_from_rank_table(4, std::vector<int>(row.begin(), row.end())));
        } catch (const Error& e) {
            detail = std::string("rank table recovery failed: ") + e.what();
            return false;
        }
    }
    RankValuationValue f_total;
    JumpSequenceValue g_total;
    QuasiSymValue qs_total;
    FlagValuationValue h_total;
    for (size_t i = 0; i < ms.size(); ++i) {
        Integer c = data.coefficients[i];
        f_total += f_rank(ms[i]).scaled(c);
        g_total += g_derksen(ms[i]).scaled(c);
        qs_total += qs_bjr(ms[i]).scaled(c);
        h_total += h_flags(ms[i]).scaled(c);
    }
    if (!f_total.is_zero()) { detail = "sum c_i F(M_i) is nonzero"; return false; }
    if (g_total.is_zero()) { detail = "sum c_i G(M_i) vanishes"; return false; }
    if (qs_total.is_zero()) { detail = "sum c_i QS(M_i) vanishes"; return false; }
    if (h_total.is_zero()) { detail = "sum c_i H(M_i) vanishes"; return false; }
    return true;
}

bool criterion6(std::string& detail) {
    std::vector<Matroid> corpus;
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) corpus.push_back(Matroid::uniform(k, n));
    for (int n = 1; n <= 6; ++n)
        for (uint32_t mask = 1; mask < (1u << n); ++mask)
            corpus.push_back(Matroid::schubert(n, subset_of(mask)));
    testing::Rng rng(2024);
    for (int t = 0; t < 200; ++t)
        corpus.push_back(testing::random_matroid(1 + rng.below(6), rng));

    for (const Matroid& m : corpus) {
        if (tutte(m, TutteMethod::CorankNullity) != tutte(m, TutteMethod::Activities)) {
            detail = "methods disagree on a corpus matroid";
            return false;
        }
    }
    Polynomial2 expected;
    expected.add_term(2, 0, 1);
    expected.add_term(1, 0, 2);
    expected.add_term(0, 1, 2);
    expected.add_term(0, 2, 1);
    Polynomial2 got = tutte(Matroid::uniform(2, 4), TutteMethod::CorankNullity);
    if (got != expected) { detail = "U(2,4) Tutte polynomial is wrong"; return false; }
    if (got.eval(1, 1) != 6) { detail = "T(1,1) differs from the basis count"; return false; }
    detail = std::to_string(corpus.size()) + " matroids";
    return true;
}

bool criterion7(std::string& detail) {
    long long cases = 0;
    int matroids = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const Matroid& m : testing::all_matroids(n)) {
            ++matroids;
            uint32_t full = (1u << n) - 1;
            for (uint32_t bm = 0; bm <= full; ++bm) {
                uint32_t rest = full & ~bm;
                for (uint32_t em = rest;; em = (em - 1) & rest) {
                    for (uint32_t im = bm;; im = (im - 1) & bm) {
                        try {
                            pbei_intersects(m, subset_of(bm), subset_of(em), subset_of(im));
                        } catch (const InternalDisagreement&) {
                            detail = "LP and combinatorial criteria disagree";
                            return false;
                        }
                        ++cases;
                        if (im == 0) break;
                    }
                    if (em == 0) break;
                }
            }
        }
    }
    detail = std::to_string(matroids) + " matroids, " + std::to_string(cases) +
             " (B,E,I) cases, zero disagreements";
    return true;
}

bool criterion8(std::string& detail) {
    std::vector<Matroid> corpus{
        Matroid::from_bases(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}),
        Matroid::from_bases(4, {{1, 3}, {1, 4}, {3, 4}}),
        Matroid::from_bases(4, {{1, 3}, {2, 3}, {3, 4}}),
    };
    testing::Rng rng(509);
    for (int t = 0; t < 50; ++t) corpus.push_back(testing::random_matroid(1 + rng.below(5), rng));

    long long cases = 0;
    for (const Matroid& m : corpus) {
        uint32_t full = (1u << m.n()) - 1;
        for (uint32_t bm = 0; bm <= full; ++bm) {
            for (const auto& [em, im, direct, decomposed] : g_bei_audit(m, subset_of(bm))) {
                (void)em;
                (void)im;
                if (direct != decomposed) {
                    detail = "direct and decomposed g differ";
                    return false;
                }
                ++cases;
            }
        }
    }
    detail = std::to_string(corpus.size()) + " matroids, " + std::to_string(cases) +
             " (B,E,I) cases, zero disagreements";
    return true;
}

bool criterion9(std::string& detail) {
    for (const Subdivision& sub : {octahedron_subdivision(), u36_subdivision()}) {
        ValidatedSubdivision s(sub.ambient, sub.cells);
        FacePosetWithTop fp = face_poset(s);
        const Poset& p = fp.poset;

        // both recursions agree on the face poset
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y)
                if (p.leq(x, y) && p.mobius(x, y) != p.mobius_dual(x, y)) {
                    detail = "dual Mobius recursion disagrees";
                    return false;
                }

        // crosscut on the upside-down face lattice
        Poset flipped = p.flipped();
        if (!flipped.is_lattice()) {
            detail = "flipped face poset is not a lattice";
            return false;
        }
        for (int x = 0; x < flipped.size(); ++x)
            if (!crosscut_check(flipped, x)) {
                detail = "crosscut identity fails";
                return false;
            }

        // ball pattern including mu(bottom, top) = 0 and boundary vanishing
        if (p.mobius(fp.bottom_index(), fp.top_index()) != 0) {
            detail = "mu(bottom, top) is nonzero";
            return false;
        }
        for (int i = 0; i < fp.face_count(); ++i)
            if (fp.boundary[i] && p.mobius(i + 1, fp.top_index()) != 0) {
                detail = "mu(boundary face, top) is nonzero";
                return false;
            }
        if (!topology_check(s)) {
            detail = "topology check fails";
            return false;
        }
    }
    return true;
}

bool criterion10(std::string& detail) {
    long long matroids = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const Matroid& m : testing::all_matroids(n)) {
            ++matroids;
            std::vector<int> rk(1 << n, 0);
            for (uint32_t mask = 1; mask < (1u << n); ++mask) rk[mask] = m.rank_mask(mask);
            for (uint32_t pt = 0; pt < (1u << n); ++pt) {
                bool inside = std::popcount(pt) == m.rank();
                for (uint32_t mask = 1; inside && mask < (1u << n); ++mask)
                    if (std::popcount(pt & mask) > rk[mask]) inside = false;
                if (inside != m.is_basis_mask(pt)) {
                    detail = "a 0/1 point of the H-description is not a basis indicator";
                    return false;
                }
            }
            if (ehrhart_polynomial(m).eval(1) != Rational(Integer(m.basis_count()))) {
                detail = "E(1) differs from the basis count";
                return false;
            }
        }
    }
    detail = std::to_string(matroids) + " matroids";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--data") g_data_dir = argv[i + 1];
        else if (flag == "--tool") g_tool_path = argv[i + 1];
    }

    struct Criterion {
        int id;
        const char* name;
        bool (*run)(std::string&);
    };
    const std::vector<Criterion> criteria{
        {1, "octahedron subdivision: validation and all valuations", criterion1},
        {2, "U(3,6) subdivision: validation and all valuations", criterion2},
        {3, "activity table matches the printed table cell-for-cell", criterion3},
        {4, "activity table even/odd parity in every row", criterion4},
        {5, "rank-table syzygy: F vanishes, G/QS/H do not", criterion5},
        {6, "Tutte corank-nullity equals activities across the corpus", criterion6},
        {7, "P(B,E,I) LP test equals the activity criterion (n <= 4)", criterion7},
        {8, "g decomposition equals the direct indicator", criterion8},
        {9, "Mobius, crosscut and ball-topology suite", criterion9},
        {10, "H-description soundness and E(1) (n <= 5)", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("%s  %2d  %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
