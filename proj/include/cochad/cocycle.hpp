#pragma once

#include <cstdint>
#include <vector>

#include "cochad/group.hpp"
#include "cochad/sign_matrix.hpp"

namespace cochad {

/// Entry (i,j) = delta(g_i) delta(g_j) delta(g_i g_j), delta = -1 exactly at g_d.
SignMatrix elementary_coboundary(const GroupTable& g, int d);

/// The elementary coboundary with row d negated; requires d >= 2.
SignMatrix generalized_coboundary(const GroupTable& g, int d);

/// psi(i,j) psi(ij,k) = psi(j,k) psi(i,jk) for all triples.
bool is_cocycle(const GroupTable& g, const SignMatrix& m);

/// A binary cocycle over F_2: bits[(i-1)*n + (j-1)] = 1 iff psi(g_i,g_j) = -1.
struct CocycleVector {
    std::size_t n = 0;
    std::vector<std::uint8_t> bits;

    bool is_normalized() const;
    SignMatrix to_matrix() const;
    static CocycleVector from_matrix(const SignMatrix& m);
    bool operator==(const CocycleVector&) const = default;
};

struct CocycleSpaceBasis {
    std::size_t dim = 0;
    std::vector<CocycleVector> basis;
};

/// Null space of the additive cocycle system restricted to normalized
/// vectors. Elimination pivots on the lowest unknown first and the null
/// vectors are listed by ascending free unknown, so the result is
/// reproducible.
CocycleSpaceBasis cocycle_space_basis(const GroupTable& g);

struct EnumerationOptions {
    /// Refuse when the cocycle space has more than 2^budget_log2 elements.
    int budget_log2 = 30;
    unsigned threads = 1;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    std::size_t dim = 0;
    /// Hadamard cocycles ordered lexicographically by their coefficient
    /// vector over the basis (first coefficient most significant).
    std::vector<CocycleVector> cocycles;
};

/// Every normalized cocycle whose matrix is Hadamard, found by walking the
/// whole cocycle space. Requires order <= 64.
EnumerationResult enumerate_hadamard_cocycles(const GroupTable& g, bool count_only,
                                              const EnumerationOptions& opts = {});

}  // namespace cochad
