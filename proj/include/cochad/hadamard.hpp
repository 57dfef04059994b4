#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cochad/sign_matrix.hpp"

namespace cochad {

/// True iff every listed row (1-based, each >= 2) sums to zero.
bool row_sum_test(const SignMatrix& m, const std::vector<std::size_t>& rows);

/// True iff all distinct row pairs are orthogonal (H H^T = n I).
bool is_hadamard(const SignMatrix& m);

/// 4 x t incidence picture of a coboundary support for the Z_t x Z_2^2
/// family: cell (j,k) is set iff 4(k-1)+j is in the support.
struct Diagram {
    int t = 0;
    std::vector<std::array<int, 4>> columns;  // columns[k-1][j-1]

    int cell(int j, int k) const { return columns[k - 1][j - 1]; }
    int column_sum(int k) const;

    /// (c_2, ..., c_ceil((t+1)/2)).
    std::vector<int> col;
    /// Row sums over columns 2..t of the mirror-completed diagram, where
    /// column k is OR-ed with column t+2-k.
    std::array<int, 4> dist{};

    /// Four lines of t characters '0'/'1'.
    std::string to_text() const;
};

/// Support indices must lie in 2..4t-2.
Diagram diagram_of(int t, const std::vector<int>& support);

/// c_1 - c_k is odd for every k in 2..t.
bool satisfies_column_parity(const Diagram& d);

/// 4k+j in I <=> 4t-4k+j in I for 1 <= k <= (t-1)/2, 1 <= j <= 4, whenever
/// both indices lie in 2..4t-2.
bool satisfies_restricted_symmetry(int t, const std::vector<int>& support);

}  // namespace cochad
