#include "cochad/cocycle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "cochad/error.hpp"

namespace cochad {

namespace {

void check_index(const GroupTable& g, int d) {
    if (d < 1 || d > static_cast<int>(g.order()))
        throw InvalidParameter("coboundary index " + std::to_string(d) + " outside 1.." + std::to_string(g.order()));
}

using Words = std::vector<std::uint64_t>;

bool test_bit(const Words& w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }
void flip_bit(Words& w, std::size_t i) { w[i / 64] ^= std::uint64_t{1} << (i % 64); }

std::size_t lowest_bit(const Words& w) {
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
    return static_cast<std::size_t>(-1);
}

void xor_into(Words& a, const Words& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
}

}  // namespace

SignMatrix elementary_coboundary(const GroupTable& g, int d) {
    check_index(g, d);
    const int n = static_cast<int>(g.order());
    const int d0 = d - 1;
    auto delta = [d0](int x) { return x == d0 ? -1 : 1; };
    SignMatrix m(g.order());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i + 1, j + 1, delta(i) * delta(j) * delta(g.mul0(i, j)));
    return m;
}

SignMatrix generalized_coboundary(const GroupTable& g, int d) {
    check_index(g, d);
    if (d == 1) throw InvalidParameter("the coboundary of the identity is not normalized; d must be >= 2");
    SignMatrix m = elementary_coboundary(g, d);
    m.negate_row(static_cast<std::size_t>(d));
    return m;
}

bool is_cocycle(const GroupTable& g, const SignMatrix& m) {
    if (m.size() != g.order()) throw InvalidParameter("matrix size does not match group order");
    const int n = static_cast<int>(g.order());
    const auto& e = m.entries();
    auto psi = [&](int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int ij = g.mul0(i, j);
            for (int k = 0; k < n; ++k)
                if (psi(i, j) * psi(ij, k) != psi(j, k) * psi(i, g.mul0(j, k))) return false;
        }
    return true;
}

bool CocycleVector::is_normalized() const {
    for (std::size_t k = 0; k < n; ++k)
        if (bits[k] || bits[k * n]) return false;
    return true;
}

SignMatrix CocycleVector::to_matrix() const {
    SignMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bits[i * n + j]) m.set(i + 1, j + 1, -1);
    return m;
}

CocycleVector CocycleVector::from_matrix(const SignMatrix& m) {
    CocycleVector v{m.size(), std::vector<std::uint8_t>(m.size() * m.size())};
    for (std::size_t k = 0; k < v.bits.size(); ++k) v.bits[k] = m.entries()[k] < 0;
    return v;
}

CocycleSpaceBasis cocycle_space_basis(const GroupTable& g) {
    const std::size_t n = g.order();
    const std::size_t m = n - 1;
    const std::size_t unknowns = m * m;
    const std::size_t words = (unknowns + 63) / 64;
    // Unknown u(i,j) for 0-based i,j >= 1; entries in row/column 0 are fixed to zero.
    auto unknown = [m](std::size_t i, std::size_t j) { return (i - 1) * m + (j - 1); };

    std::vector<Words> pivot_row(unknowns);
    std::vector<char> has_pivot(unknowns, 0);

    Words eq(words);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(eq.begin(), eq.end(), 0);
                const std::size_t ij = static_cast<std::size_t>(g.mul0(static_cast<int>(i), static_cast<int>(j)));
                const std::size_t jk = static_cast<std::size_t>(g.mul0(static_cast<int>(j), static_cast<int>(k)));
                const std::pair<std::size_t, std::size_t> terms[4] = {{i, j}, {ij, k}, {j, k}, {i, jk}};
                for (auto [a, b] : terms)
                    if (a != 0 && b != 0) flip_bit(eq, unknown(a, b));
                for (std::size_t p = lowest_bit(eq); p != static_cast<std::size_t>(-1); p = lowest_bit(eq)) {
                    if (!has_pivot[p]) {
                        pivot_row[p] = eq;
                        has_pivot[p] = 1;
                        break;
                    }
                    xor_into(eq, pivot_row[p]);
                }
            }

    // Back-substitute to reduced echelon form.
    for (std::size_t p = unknowns; p-- > 0;) {
        if (!has_pivot[p]) continue;
        for (std::size_t q = 0; q < p; ++q)
            if (has_pivot[q] && test_bit(pivot_row[q], p)) xor_into(pivot_row[q], pivot_row[p]);
    }

    CocycleSpaceBasis out;
    for (std::size_t f = 0; f < unknowns; ++f) {
        if (has_pivot[f]) continue;
        CocycleVector v{n, std::vector<std::uint8_t>(n * n, 0)};
        auto set_unknown = [&](std::size_t u) { v.bits[(u / m + 1) * n + (u % m + 1)] = 1; };
        set_unknown(f);
        for (std::size_t p = 0; p < f; ++p)
            if (has_pivot[p] && test_bit(pivot_row[p], f)) set_unknown(p);
        out.basis.push_back(std::move(v));
    }
    out.dim = out.basis.size();
    return out;
}

namespace {

/// Gray-code walk over one slice of the coefficient hypercube with rows
/// stored as 64-bit masks (bit j set iff entry j is -1).
class HadamardWalker {
public:
    HadamardWalker(std::size_t n, const std::vector<std::vector<std::uint64_t>>& basis_rows)
        : n_(n), half_(static_cast<int>(n / 2)), basis_rows_(basis_rows) {}

    /// Visits every mask whose bits above `low_bits` equal `prefix`.
    void walk(std::uint64_t prefix, std::size_t low_bits, std::vector<std::uint64_t>& hits) const {
        std::vector<std::uint64_t> rows(n_, 0);
        for (std::size_t p = low_bits; p < basis_rows_.size(); ++p)
            if ((prefix >> p) & 1u) apply(rows, p);
        std::uint64_t mask = prefix;
        if (accept(rows)) hits.push_back(mask);
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t s = 1; s < steps; ++s) {
            const auto p = static_cast<std::size_t>(std::countr_zero(s));
            apply(rows, p);
            mask ^= std::uint64_t{1} << p;
            if (accept(rows)) hits.push_back(mask);
        }
    }

private:
    void apply(std::vector<std::uint64_t>& rows, std::size_t p) const {
        const auto& b = basis_rows_[p];
        for (std::size_t i = 1; i < n_; ++i) rows[i] ^= b[i];
    }

    bool accept(const std::vector<std::uint64_t>& rows) const {
        // Zero row sums are necessary for orthogonality against the all-ones
        // first row; the full pairwise check follows.
        for (std::size_t i = 1; i < n_; ++i)
            if (std::popcount(rows[i]) != half_) return false;
        for (std::size_t a = 1; a < n_; ++a)
            for (std::size_t b = a + 1; b < n_; ++b)
                if (std::popcount(rows[a] ^ rows[b]) != half_) return false;
        return true;
    }

    std::size_t n_;
    int half_;
    const std::vector<std::vector<std::uint64_t>>& basis_rows_;
};

std::uint64_t lex_key(std::uint64_t mask, std::size_t dim) {
    std::uint64_t key = 0;
    for (std::size_t p = 0; p < dim; ++p)
        if ((mask >> p) & 1u) key |= std::uint64_t{1} << (dim - 1 - p);
    return key;
}

}  // namespace

EnumerationResult enumerate_hadamard_cocycles(const GroupTable& g, bool count_only, const EnumerationOptions& opts) {
    const std::size_t n = g.order();
    if (n > 64) throw ResourceLimit("enumeration supports group orders up to 64; use the family search instead");
    const CocycleSpaceBasis space = cocycle_space_basis(g);
    const std::size_t dim = space.dim;
    if (static_cast<long>(dim) > opts.budget_log2 || dim >= 63)
        throw ResourceLimit("cocycle space has 2^" + std::to_string(dim) + " elements, above the budget 2^" +
                            std::to_string(opts.budget_log2) + "; use --count-only with a larger budget or the family search");

    std::vector<std::vector<std::uint64_t>> basis_rows(dim, std::vector<std::uint64_t>(n, 0));
    for (std::size_t p = 0; p < dim; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (space.basis[p].bits[i * n + j]) basis_rows[p][i] |= std::uint64_t{1} << j;

    const HadamardWalker walker(n, basis_rows);
    const unsigned threads = std::max(1u, opts.threads);
    std::size_t split = 0;
    while (split < dim && (std::size_t{1} << split) < 8 * static_cast<std::size_t>(threads) && threads > 1) ++split;
    const std::size_t low_bits = dim - split;
    const std::uint64_t chunks = std::uint64_t{1} << split;

    std::vector<std::uint64_t> hits;
    std::mutex sink;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        std::vector<std::uint64_t> local;
        for (std::uint64_t c = next++; c < chunks; c = next++) walker.walk(c << low_bits, low_bits, local);
        std::lock_guard lock(sink);
        hits.insert(hits.end(), local.begin(), local.end());
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    std::sort(hits.begin(), hits.end(),
              [dim](std::uint64_t a, std::uint64_t b) { return lex_key(a, dim) < lex_key(b, dim); });

    EnumerationResult out;
    out.dim = dim;
    out.count = hits.size();
    if (!count_only) {
        out.cocycles.reserve(hits.size());
        for (std::uint64_t mask : hits) {
            CocycleVector v{n, std::vector<std::uint8_t>(n * n, 0)};
            for (std::size_t p = 0; p < dim; ++p)
                if ((mask >> p) & 1u)
                    for (std::size_t k = 0; k < n * n; ++k) v.bits[k] ^= space.basis[p].bits[k];
            out.cocycles.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace cochad
