#pragma once

#include <cstddef>
#include <vector>

#include "cochad/group.hpp"
#include "cochad/sign_matrix.hpp"

namespace cochad {

/// Cocycle basis context for one of the two built-in families: the
/// coboundaries d_2..d_{4t-2}, the fixed product M_rho of the three
/// representative cocycles, and the rows whose sums must vanish.
struct BasisDescriptor {
    GroupTable group;
    std::vector<int> cob_indices;         // coordinate position q (0-based) <-> coboundary cob_indices[q] = q + 2
    SignMatrix m_rho;
    std::vector<std::size_t> required_rows;
    std::size_t k = 0;                    // basis size
    std::size_t m = 0;                    // representative cocycles folded into m_rho

    Family family() const { return group.family(); }
    int t() const { return group.t(); }
    std::size_t num_vars() const { return cob_indices.size(); }
    std::size_t order() const { return group.order(); }
};

/// M_rho for the family, defined for every t >= 1:
///   Z: (t x t all-ones) (x) K4 with K4 rows ++++, +-+-, +--+, ++--;
///   D: (A A; B -B), A(i,j) = +1 iff i+j <= 2t+1, B(i,j) = +1 iff j <= i.
SignMatrix representative_product(Family family, int t);

/// Z requires odd t >= 1, D requires t >= 3.
BasisDescriptor family_basis(Family family, int t);

/// The coboundary index d != c whose generalized coboundary shares the -1
/// at (s,c) with that of c, from the closed forms. Valid rows are
/// 5..2t+2 for Z and 2..t for D.
int j_index(Family family, int t, int s, int c);

/// 1 iff d_i is one of the basis coboundaries.
int chi(const BasisDescriptor& b, int i);

}  // namespace cochad
