#include "cochad/equations.hpp"

#include <algorithm>

#include "cochad/cocycle.hpp"
#include "cochad/error.hpp"

namespace cochad {

namespace {

std::size_t position_of(const BasisDescriptor& b, int cob) {
    const auto it = std::lower_bound(b.cob_indices.begin(), b.cob_indices.end(), cob);
    if (it == b.cob_indices.end() || *it != cob)
        throw InvalidParameter("coboundary index " + std::to_string(cob) + " is not in the basis (valid: " +
                               std::to_string(b.cob_indices.front()) + ".." + std::to_string(b.cob_indices.back()) +
                               ")");
    return static_cast<std::size_t>(it - b.cob_indices.begin());
}

void check_length(std::size_t expected, const CoordinateVector& x) {
    if (x.size() != expected)
        throw InvalidParameter("coordinate vector has length " + std::to_string(x.size()) + ", expected " +
                               std::to_string(expected));
}

}  // namespace

CoordinateVector coordinates_from_support(const BasisDescriptor& b, const std::vector<int>& support) {
    CoordinateVector x{std::vector<std::uint8_t>(b.num_vars(), 0)};
    for (int i : support) x.bits[position_of(b, i)] = 1;
    return x;
}

std::vector<int> support_from_coordinates(const BasisDescriptor& b, const CoordinateVector& x) {
    check_length(b.num_vars(), x);
    std::vector<int> out;
    for (std::size_t q = 0; q < x.size(); ++q)
        if (x.bits[q]) out.push_back(b.cob_indices[q]);
    return out;
}

MonomialSystem build_system(const BasisDescriptor& b) {
    MonomialSystem ms;
    ms.num_vars = b.num_vars();
    const int n = static_cast<int>(b.order());
    auto var_of = [&](int cob) -> std::optional<std::size_t> {
        if (!chi(b, cob)) return std::nullopt;
        return position_of(b, cob);
    };
    for (std::size_t s : b.required_rows) {
        Equation eq{s, {}};
        eq.terms.reserve(static_cast<std::size_t>(n));
        for (int h = 1; h <= n; ++h) {
            const int j = j_index(b.family(), b.t(), static_cast<int>(s), h);
            eq.terms.push_back(Term{b.m_rho(s, static_cast<std::size_t>(h)), var_of(h), var_of(j)});
        }
        ms.equations.push_back(std::move(eq));
    }
    return ms;
}

std::vector<long> eval_system(const MonomialSystem& ms, const CoordinateVector& x) {
    check_length(ms.num_vars, x);
    std::vector<long> out;
    out.reserve(ms.equations.size());
    auto factor = [&](const std::optional<std::size_t>& v) { return v && x.bits[*v] ? -1 : 1; };
    for (const Equation& eq : ms.equations) {
        long r = 0;
        for (const Term& term : eq.terms) r += term.sign * factor(term.var_a) * factor(term.var_b);
        out.push_back(r);
    }
    return out;
}

SignMatrix assemble_matrix(const BasisDescriptor& b, const CoordinateVector& x, CoboundaryMode mode) {
    check_length(b.num_vars(), x);
    SignMatrix m = b.m_rho;
    for (std::size_t q = 0; q < x.size(); ++q) {
        if (!x.bits[q]) continue;
        const int d = b.cob_indices[q];
        m *= mode == CoboundaryMode::Generalized ? generalized_coboundary(b.group, d)
                                                 : elementary_coboundary(b.group, d);
    }
    return m;
}

}  // namespace cochad
