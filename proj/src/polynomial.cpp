#include "cochad/polynomial.hpp"

#include "cochad/error.hpp"

namespace cochad {

std::uint32_t degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da > db;
    // Compare exponent vectors from x_0 upward; a larger exponent on the
    // smaller variable sorts first.
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first != b[j].first) return a[i].first < b[j].first;
        if (a[i].second != b[j].second) return a[i].second > b[j].second;
        ++i;
        ++j;
    }
    return i < a.size() && j == b.size();
}

Polynomial Polynomial::constant(long long c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(std::uint32_t v) {
    Polynomial p;
    p.add_term({{v, 1}}, 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

Polynomial operator*(long long c, const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, k] : p.terms_) out.add_term(m, c * k);
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m) {
            if (v >= point.size()) throw InvalidParameter("evaluation point is too short");
            for (std::uint32_t k = 0; k < e; ++k) term *= point[v];
        }
        sum += term;
    }
    return sum;
}

std::string Polynomial::render(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const long long mag = c < 0 ? -c : c;
        if (c < 0) s += '-';
        else if (!first) s += '+';
        first = false;
        std::string body;
        for (const auto& [v, e] : m) {
            if (!body.empty()) body += '*';
            body += names.at(v);
            if (e > 1) body += '^' + std::to_string(e);
        }
        if (body.empty()) s += std::to_string(mag);
        else if (mag == 1) s += body;
        else s += std::to_string(mag) + '*' + body;
    }
    return s;
}

}  // namespace cochad
