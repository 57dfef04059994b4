#include "cochad/tables.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>

#include "cochad/basis.hpp"
#include "cochad/cocycle.hpp"
#include "cochad/error.hpp"
#include "cochad/hadamard.hpp"
#include "cochad/search.hpp"

namespace cochad {

namespace detail {
extern const std::string_view kTable2Csv;
extern const std::string_view kTable3Csv;
}  // namespace detail

namespace {

std::vector<int> split_ints(const std::string& field) {
    std::istringstream in(field);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    return out;
}

/// Classical product rho * prod d_i must be one of the enumerated Hadamard
/// cocycles, and its generalized form must pass the orthogonality test.
bool check_by_enumeration(Family family, int t, const std::vector<int>& support) {
    const GroupTable g = make_group(family, t);
    SignMatrix classical = representative_product(family, t);
    SignMatrix generalized = classical;
    for (int d : support) {
        classical *= elementary_coboundary(g, d);
        generalized *= generalized_coboundary(g, d);
    }
    const EnumerationResult all = enumerate_hadamard_cocycles(g, false);
    const CocycleVector target = CocycleVector::from_matrix(classical);
    return is_hadamard(generalized) &&
           std::find(all.cocycles.begin(), all.cocycles.end(), target) != all.cocycles.end();
}

}  // namespace

std::vector<TableRow> parse_table_csv(const std::string& csv, bool has_col) {
    std::istringstream in(csv);
    std::string line;
    std::vector<TableRow> rows;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        const std::size_t expected = has_col ? 4 : 3;
        if (fields.size() != expected) throw ParseError("table row has " + std::to_string(fields.size()) + " fields: " + line);
        TableRow r;
        r.t = std::stoi(fields[0]);
        std::size_t k = 1;
        if (has_col) r.col = split_ints(fields[k++]);
        r.dist = split_ints(fields[k++]);
        r.cob = split_ints(fields[k]);
        rows.push_back(std::move(r));
    }
    return rows;
}

const std::vector<TableRow>& table2() {
    static const std::vector<TableRow> rows = parse_table_csv(std::string(detail::kTable2Csv), true);
    return rows;
}

const std::vector<TableRow>& table3() {
    static const std::vector<TableRow> rows = parse_table_csv(std::string(detail::kTable3Csv), false);
    return rows;
}

std::vector<TableCheck> check_table(int which) {
    if (which != 2 && which != 3) throw InvalidParameter("table must be 2 or 3");
    const Family family = which == 2 ? Family::Z : Family::D;
    const auto& rows = which == 2 ? table2() : table3();
    std::vector<TableCheck> out;
    for (const TableRow& r : rows) {
        TableCheck c{r.t, static_cast<std::size_t>(4 * r.t), false, "verify"};
        if (family == Family::D && r.t < 3) {
            c.method = "enumerate";
            c.pass = check_by_enumeration(family, r.t, r.cob);
        } else {
            c.pass = verify_support(family, r.t, r.cob).hadamard;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace cochad
