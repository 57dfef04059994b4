#include "cochad/sign_matrix.hpp"

#include <sstream>

#include "cochad/error.hpp"

namespace cochad {

void SignMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < n_; ++j) e_[(i - 1) * n_ + j] *= -1;
}

void SignMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < n_; ++i) e_[i * n_ + (j - 1)] *= -1;
}

long SignMatrix::row_sum(std::size_t i) const {
    long s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += e_[(i - 1) * n_ + j];
    return s;
}

SignMatrix& SignMatrix::operator*=(const SignMatrix& o) {
    if (o.n_ != n_) throw InvalidParameter("matrix size mismatch in entrywise product");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] = static_cast<std::int8_t>(e_[k] * o.e_[k]);
    return *this;
}

std::string SignMatrix::to_text() const {
    std::string s;
    s.reserve(n_ * (n_ + 1));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) s.push_back(e_[i * n_ + j] > 0 ? '+' : '-');
        s.push_back('\n');
    }
    return s;
}

SignMatrix SignMatrix::from_text(std::string_view text) {
    std::vector<std::string> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        rows.push_back(line);
    }
    SignMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ParseError("matrix text is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const char c = rows[i][j];
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "' in matrix");
            m.set(i + 1, j + 1, c == '+' ? 1 : -1);
        }
    }
    return m;
}

SignMatrix kron_ones(std::size_t t, const SignMatrix& block) {
    const std::size_t b = block.size();
    SignMatrix m(t * b);
    for (std::size_t i = 1; i <= t * b; ++i)
        for (std::size_t j = 1; j <= t * b; ++j) m.set(i, j, block((i - 1) % b + 1, (j - 1) % b + 1));
    return m;
}

}  // namespace cochad
