#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cochad {

using Rational = boost::rational<long long>;

/// Sorted (variable, exponent) pairs; exponents are positive.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t degree(const Monomial& m);

/// Graded order: higher total degree first, then lexicographic with x_0 > x_1 > ...
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with integer coefficients, terms kept in canonical
/// (descending) order with zero coefficients removed.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(long long c);
    static Polynomial variable(std::uint32_t v);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(long long c, const Polynomial& p);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, long long, MonomialOrder>& terms() const { return terms_; }
    void add_term(const Monomial& m, long long c);

    Rational evaluate(const std::vector<Rational>& point) const;

    /// "c*xA^e*xB" terms joined by explicit signs, no spaces.
    std::string render(const std::vector<std::string>& names) const;

    bool operator==(const Polynomial&) const = default;

private:
    std::map<Monomial, long long, MonomialOrder> terms_;
};

}  // namespace cochad
