#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matval/subdivision.hpp"

namespace matval {

/// Activity table of a subdivision: one row per basis of the ambient
/// matroid, one (E, I) column pair per intersection-lattice entry A, the
/// entries ordered by binary subset counting (empty set, {1}, {2}, {1,2},
/// {3}, ...). Cells are blank when the basis is absent from M_A.
struct ActivityTable {
    std::vector<uint32_t> row_bases;                 // ambient bases, canonical order
    std::vector<std::vector<int>> columns;           // lattice keys A
    std::vector<std::vector<std::optional<std::pair<Subset, Subset>>>> cells;
};

ActivityTable activity_table(const ValidatedSubdivision& s);

/// TSV rendering: header "B" then label:E / label:I per column (label M for
/// the empty A, M12 for A = {1,2}, ...); sets as concatenated digits, the
/// empty set as "-", absent entries as empty fields. LF line endings.
std::string activity_table_tsv(const ActivityTable& t);

/// In every row, each (E, I) value must occur as often under even-|A|
/// entries as under odd-|A| ones.
bool activity_parity_holds(const ActivityTable& t);

/// TSV with columns A, bases-count, dim for the interior faces.
std::string interior_faces_tsv(const ValidatedSubdivision& s);

}  // namespace matval
