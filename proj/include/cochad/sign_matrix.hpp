#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cochad {

/// Square matrix with entries in {+1, -1}. Indices are 1-based.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(std::size_t n) : n_(n), e_(n * n, 1) {}

    static SignMatrix ones(std::size_t n) { return SignMatrix(n); }

    std::size_t size() const { return n_; }

    int operator()(std::size_t i, std::size_t j) const { return e_[(i - 1) * n_ + (j - 1)]; }
    void set(std::size_t i, std::size_t j, int v) { e_[(i - 1) * n_ + (j - 1)] = v < 0 ? -1 : 1; }
    void flip(std::size_t i, std::size_t j) { e_[(i - 1) * n_ + (j - 1)] *= -1; }

    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    long row_sum(std::size_t i) const;

    /// Entrywise (Hadamard) product.
    SignMatrix& operator*=(const SignMatrix& o);
    friend SignMatrix operator*(SignMatrix a, const SignMatrix& b) { return a *= b; }

    bool operator==(const SignMatrix& o) const = default;

    /// One line per row of '+' and '-'.
    std::string to_text() const;
    static SignMatrix from_text(std::string_view text);

    const std::vector<std::int8_t>& entries() const { return e_; }

private:
    std::size_t n_ = 0;
    std::vector<std::int8_t> e_;
};

/// t x t all-ones Kronecker block: result(i,j) = block((i-1) mod b + 1, (j-1) mod b + 1).
SignMatrix kron_ones(std::size_t t, const SignMatrix& block);

}  // namespace cochad
