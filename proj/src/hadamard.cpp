#include "cochad/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "cochad/error.hpp"

namespace cochad {

bool row_sum_test(const SignMatrix& m, const std::vector<std::size_t>& rows) {
    for (std::size_t r : rows) {
        if (r == 1) throw InvalidParameter("row 1 of a normalized matrix cannot be a Hadamard row");
        if (r < 1 || r > m.size()) throw InvalidParameter("row index out of range");
    }
    return std::all_of(rows.begin(), rows.end(), [&](std::size_t r) { return m.row_sum(r) == 0; });
}

bool is_hadamard(const SignMatrix& m) {
    const std::size_t n = m.size();
    if (n <= 1) return true;
    if (n % 2 != 0) return false;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    const auto& e = m.entries();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (e[i * n + j] < 0) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            std::size_t differ = 0;
            for (std::size_t w = 0; w < words; ++w)
                differ += static_cast<std::size_t>(std::popcount(bits[a * words + w] ^ bits[b * words + w]));
            if (2 * differ != n) return false;
        }
    return true;
}

int Diagram::column_sum(int k) const {
    const auto& c = columns[k - 1];
    return c[0] + c[1] + c[2] + c[3];
}

std::string Diagram::to_text() const {
    std::string s;
    for (int j = 1; j <= 4; ++j) {
        for (int k = 1; k <= t; ++k) s.push_back(cell(j, k) ? '1' : '0');
        s.push_back('\n');
    }
    return s;
}

Diagram diagram_of(int t, const std::vector<int>& support) {
    if (t < 1) throw InvalidParameter("t must be positive");
    Diagram d;
    d.t = t;
    d.columns.assign(static_cast<std::size_t>(t), {0, 0, 0, 0});
    for (int i : support) {
        if (i < 2 || i > 4 * t - 2)
            throw InvalidParameter("coboundary index " + std::to_string(i) + " outside 2.." + std::to_string(4 * t - 2));
        d.columns[(i - 1) / 4][(i - 1) % 4] = 1;
    }
    for (int k = 2; k <= (t + 2) / 2; ++k) d.col.push_back(d.column_sum(k));
    for (int j = 1; j <= 4; ++j) {
        int r = 0;
        for (int k = 2; k <= t; ++k) r += d.cell(j, k) | d.cell(j, t + 2 - k);
        d.dist[j - 1] = r;
    }
    return d;
}

bool satisfies_column_parity(const Diagram& d) {
    const int c1 = d.column_sum(1);
    for (int k = 2; k <= d.t; ++k)
        if ((c1 - d.column_sum(k)) % 2 == 0) return false;
    return true;
}

bool satisfies_restricted_symmetry(int t, const std::vector<int>& support) {
    const std::set<int> in(support.begin(), support.end());
    for (int k = 1; k <= (t - 1) / 2; ++k)
        for (int j = 1; j <= 4; ++j) {
            const int lo = 4 * k + j, hi = 4 * t - 4 * k + j;
            if (lo < 2 || hi > 4 * t - 2) continue;
            if (in.count(lo) != in.count(hi)) return false;
        }
    return true;
}

}  // namespace cochad
