#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cochad/basis.hpp"
#include "cochad/sign_matrix.hpp"

namespace cochad {

/// 0/1 coordinates over the basis coboundaries. bits[q] = 1 means the
/// coboundary d_{q+2} is used.
struct CoordinateVector {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }
    bool operator==(const CoordinateVector&) const = default;
    auto operator<=>(const CoordinateVector&) const = default;
};

/// Indicator vector of a coboundary support (indices in 2..4t-2).
CoordinateVector coordinates_from_support(const BasisDescriptor& b, const std::vector<int>& support);
std::vector<int> support_from_coordinates(const BasisDescriptor& b, const CoordinateVector& x);

/// One summand r (1-2x_a)(1-2x_b) of a row-sum equation. An absent variable
/// contributes the factor 1. Variables are 0-based coordinate positions.
struct Term {
    int sign = 1;
    std::optional<std::size_t> var_a;  // from the column's own coboundary
    std::optional<std::size_t> var_b;  // from the partner coboundary j(s,h)
};

struct Equation {
    std::size_t row = 0;  // matrix row whose sum this equation expresses
    std::vector<Term> terms;
};

struct MonomialSystem {
    std::size_t num_vars = 0;
    std::vector<Equation> equations;
};

enum class CoboundaryMode { Generalized, Classical };

MonomialSystem build_system(const BasisDescriptor& b);

/// residual[l] = sum of the terms of equation l at x.
std::vector<long> eval_system(const MonomialSystem& ms, const CoordinateVector& x);

/// m_rho times the selected coboundary matrices, entrywise.
SignMatrix assemble_matrix(const BasisDescriptor& b, const CoordinateVector& x,
                           CoboundaryMode mode = CoboundaryMode::Generalized);

}  // namespace cochad
