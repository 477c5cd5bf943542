#include "matval/tables.hpp"

#include <bit>
#include <map>

namespace matval {

namespace {

std::string set_label(const Subset& s) {
    if (s.empty()) return "-";
    std::string out;
    bool digits_ok = true;
    for (int e : s)
        if (e > 9) digits_ok = false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i && !digits_ok) out += ",";
        out += std::to_string(s[i]);
    }
    return out;
}

std::string column_label(const std::vector<int>& a) {
    std::string out = "M";
    for (int i : a) out += std::to_string(i);
    return out;
}

}  // namespace

ActivityTable activity_table(const ValidatedSubdivision& s) {
    const IntersectionLattice& lat = s.lattice();
    ActivityTable t;
    t.row_bases = s.ambient().basis_masks();
    for (uint32_t bits = 0; bits < (1u << lat.num_cells); ++bits) {
        std::vector<int> key;
        for (int i = 0; i < lat.num_cells; ++i)
            if (bits & (1u << i)) key.push_back(i + 1);
        if (!lat.entries.count(key)) continue;
        t.columns.push_back(std::move(key));
    }
    for (uint32_t basis : t.row_bases) {
        std::vector<std::optional<std::pair<Subset, Subset>>> row;
        for (const auto& key : t.columns) {
            const Matroid& ma = lat.entries.at(key);
            if (!ma.is_basis_mask(basis)) {
                row.emplace_back(std::nullopt);
                continue;
            }
            auto [e, i] = ma.activity_masks(basis);
            row.emplace_back(std::make_pair(subset_of(e), subset_of(i)));
        }
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string activity_table_tsv(const ActivityTable& t) {
    std::string out = "B";
    for (const auto& a : t.columns) {
        std::string label = column_label(a);
        out += "\t" + label + ":E\t" + label + ":I";
    }
    out += "\n";
    for (size_t r = 0; r < t.row_bases.size(); ++r) {
        out += set_label(subset_of(t.row_bases[r]));
        for (const auto& cell : t.cells[r]) {
            if (cell)
                out += "\t" + set_label(cell->first) + "\t" + set_label(cell->second);
            else
                out += "\t\t";
        }
        out += "\n";
    }
    return out;
}

bool activity_parity_holds(const ActivityTable& t) {
    for (size_t r = 0; r < t.row_bases.size(); ++r) {
        std::map<std::pair<Subset, Subset>, int> balance;
        for (size_t c = 0; c < t.columns.size(); ++c) {
            const auto& cell = t.cells[r][c];
            if (!cell) continue;
            balance[*cell] += (t.columns[c].size() % 2 == 0) ? 1 : -1;
        }
        for (const auto& [key, value] : balance)
            if (value != 0) return false;
    }
    return true;
}

std::string interior_faces_tsv(const ValidatedSubdivision& s) {
    std::string out = "A\tbases\tdim\n";
    for (const InteriorFace& f : s.interior()) {
        std::string a;
        for (int i : f.witness) a += std::to_string(i);
        out += a + "\t" + std::to_string(f.matroid.basis_count()) + "\t" +
               std::to_string(f.dim) + "\n";
    }
    return out;
}

}  // namespace matval
