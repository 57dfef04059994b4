#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cochad/basis.hpp"
#include "cochad/equations.hpp"
#include "cochad/sign_matrix.hpp"

namespace cochad {

enum class Fix : std::uint8_t { Zero, One, Free };

/// Per-coordinate directive: coboundary fixed unused, fixed used, or free.
struct FixMask {
    std::vector<Fix> states;

    static FixMask all_free(const BasisDescriptor& b);
    /// Fixes every coordinate to the value in x.
    static FixMask fixed(const CoordinateVector& x);
    /// "i=0,j=1,..." over coboundary indices; unlisted indices stay free.
    static FixMask parse(const BasisDescriptor& b, std::string_view spec);

    std::size_t free_count() const;
};

/// Opt-in pruning filters. The unfiltered search is the reference semantics.
struct SearchFilters {
    bool symmetry = false;  // Z only: 4k+j in I <=> 4t-4k+j in I (indices inside the basis)
    bool parity = false;    // Z only: c_1 - c_k odd for every k >= 2
    /// Z: (r1..r4) of the mirror-completed diagram. D: (d_1..d_t), only
    /// with experimental_d_dist set.
    std::optional<std::vector<int>> dist_target;
    std::optional<std::vector<int>> col_target;  // Z only: (c_2, ..., c_{(t+1)/2})
    bool experimental_d_dist = false;
};

struct SearchOptions {
    int budget_free = 30;  // maximum number of free coordinates
    unsigned threads = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;     // assignments with all residuals zero and filters passed
    std::uint64_t verified = 0;   // leaves re-checked by is_hadamard
    std::uint64_t rejected = 0;   // leaves that failed the re-check
    double seconds = 0.0;
};

struct SolutionSet {
    std::vector<CoordinateVector> solutions;  // lexicographic, empty when count_only
    std::uint64_t count = 0;
    SearchStats stats;
};

/// Backtracking over the coordinates in ascending position. A partial
/// assignment is cut when some equation's partial sum exceeds the number of
/// its still-undetermined terms in absolute value. Every reported solution
/// is re-checked with is_hadamard on the assembled generalized matrix; with
/// count_only only every 1024th solution of each subtree is re-checked
/// (all of them when the system has no equations).
SolutionSet search(const BasisDescriptor& b, const FixMask& mask, const SearchFilters& filters, bool count_only,
                   const SearchOptions& opts = {});

/// The D-family distribution tuple (d_1..d_t) as written for the dihedral
/// search, with x_1 := 0 (d_1 is not a basis coboundary). Experimental.
std::vector<int> dihedral_dist(int t, const std::vector<int>& support);

struct VerifyResult {
    bool hadamard = false;
    SignMatrix matrix;
};

/// Assembles the generalized matrix for support I (indices in 2..4t-2).
VerifyResult verify_support(Family family, int t, const std::vector<int>& support);

}  // namespace cochad
