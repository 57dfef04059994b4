#pragma once

#include <string>
#include <vector>

#include "cochad/group.hpp"

namespace cochad {

/// One reference row: t, the final coboundary support, and the reported
/// descriptors (col is empty for the dihedral table).
struct TableRow {
    int t = 0;
    std::vector<int> col;
    std::vector<int> dist;
    std::vector<int> cob;
};

/// Z_t x Z_2^2 supports (t = 3..31).
const std::vector<TableRow>& table2();
/// D_4t supports (t = 1..33).
const std::vector<TableRow>& table3();

std::vector<TableRow> parse_table_csv(const std::string& csv, bool has_col);

struct TableCheck {
    int t = 0;
    std::size_t order = 0;
    bool pass = false;
    std::string method;  // "verify" or "enumerate"
};

/// Verifies every row of table 2 (family z) or table 3 (family d). Rows
/// below the family-basis range (d, t < 3) are checked against the
/// exhaustive list of Hadamard cocycles instead.
std::vector<TableCheck> check_table(int which);

}  // namespace cochad
