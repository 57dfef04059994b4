#include "cochad/basis.hpp"

#include <algorithm>
#include <numeric>

#include "cochad/error.hpp"

namespace cochad {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

SignMatrix k4() {
    return SignMatrix::from_text("++++\n+-+-\n+--+\n++--\n");
}

}  // namespace

SignMatrix representative_product(Family family, int t) {
    if (t < 1) throw InvalidParameter("t must be positive");
    if (family == Family::Z) return kron_ones(static_cast<std::size_t>(t), k4());
    if (family != Family::D) throw InvalidParameter("representative product is defined for the z and d families only");

    const std::size_t h = 2 * static_cast<std::size_t>(t);
    SignMatrix m(2 * h);
    for (std::size_t i = 1; i <= h; ++i)
        for (std::size_t j = 1; j <= h; ++j) {
            const int a = (i + j <= h + 1) ? 1 : -1;
            const int b = (j <= i) ? 1 : -1;
            m.set(i, j, a);
            m.set(i, j + h, a);
            m.set(i + h, j, b);
            m.set(i + h, j + h, -b);
        }
    return m;
}

BasisDescriptor family_basis(Family family, int t) {
    if (family == Family::Z) {
        if (t < 1 || t % 2 == 0) throw InvalidParameter("Z_t x Z_2^2 basis requires odd t >= 1");
    } else if (family == Family::D) {
        if (t < 3) throw InvalidParameter("D_4t basis requires t > 2; use enumeration for t <= 2");
    } else {
        throw InvalidParameter("family basis is available for the z and d families only");
    }

    BasisDescriptor b{make_group(family, t), {}, representative_product(family, t), {}, 0, 3};
    b.cob_indices.resize(static_cast<std::size_t>(4 * t - 3));
    std::iota(b.cob_indices.begin(), b.cob_indices.end(), 2);
    b.k = b.cob_indices.size() + b.m;
    if (family == Family::Z) {
        for (int s = 5; s <= 2 * t + 2; ++s) b.required_rows.push_back(static_cast<std::size_t>(s));
    } else {
        for (int s = 2; s <= t; ++s) b.required_rows.push_back(static_cast<std::size_t>(s));
    }
    return b;
}

int j_index(Family family, int t, int s, int c) {
    if (c < 1 || c > 4 * t) throw InvalidParameter("column index outside 1..4t");
    if (family == Family::Z) {
        if (t < 1 || t % 2 == 0) throw InvalidParameter("Z family requires odd t");
        if (s < 5 || s > 2 * t + 2) throw InvalidParameter("Z family closed form covers rows 5..2t+2");
        return 1 + 4 * mod((s - 1) / 4 + (c - 1) / 4, t) + 2 * mod(((s - 1) % 4) / 2 + ((c - 1) % 4) / 2, 2) +
               mod(s + c, 2);
    }
    if (family == Family::D) {
        if (t < 1) throw InvalidParameter("t must be positive");
        if (s < 2 || s > t) throw InvalidParameter("D family closed form covers rows 2..t");
        const int u = c + s - 1;
        if (c <= 2 * t) return u == 2 * t ? 2 * t : u % (2 * t);
        return u <= 4 * t ? u : 2 * t + u % (2 * t);
    }
    throw InvalidParameter("j_index is defined for the z and d families only");
}

int chi(const BasisDescriptor& b, int i) {
    if (i < 1 || i > static_cast<int>(b.order())) throw InvalidParameter("element index out of range");
    return std::binary_search(b.cob_indices.begin(), b.cob_indices.end(), i) ? 1 : 0;
}

}  // namespace cochad
