#include "cochad/ideal.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "cochad/error.hpp"

namespace cochad {

Syntax parse_syntax(std::string_view s) {
    if (s == "plain") return Syntax::Plain;
    if (s == "singular") return Syntax::Singular;
    throw InvalidParameter("unknown syntax '" + std::string(s) + "' (expected plain or singular)");
}

PolynomialText emit_IG(const GroupTable& g) {
    const auto n = static_cast<std::uint32_t>(g.order());
    PolynomialText out;
    out.var_names.reserve(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j) out.var_names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
    // 0-based element indices.
    auto x = [n](std::uint32_t i, std::uint32_t j) { return Polynomial::variable(i * n + j); };
    const Polynomial one = Polynomial::constant(1);

    auto& gens = out.generators;
    for (std::uint32_t i = 1; i < n; ++i)
        for (std::uint32_t j = 1; j < n; ++j) gens.push_back(x(i, j) * x(i, j) - one);
    for (std::uint32_t j = 1; j < n; ++j) gens.push_back(x(0, j) - one);
    for (std::uint32_t i = 1; i < n; ++i) gens.push_back(x(i, 0) - one);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto ij = static_cast<std::uint32_t>(g.mul0(static_cast<int>(i), static_cast<int>(j)));
            for (std::uint32_t k = 0; k < n; ++k) {
                const auto jk = static_cast<std::uint32_t>(g.mul0(static_cast<int>(j), static_cast<int>(k)));
                gens.push_back(x(i, j) - x(ij, k) * x(j, k) * x(i, jk));
            }
        }
    for (std::uint32_t i = 1; i < n; ++i) {
        Polynomial row;
        for (std::uint32_t j = 0; j < n; ++j) row += x(i, j);
        gens.push_back(std::move(row));
    }
    return out;
}

PolynomialText emit_JG(const BasisDescriptor& b, const MonomialSystem& ms) {
    if (ms.num_vars != b.num_vars()) throw InvalidParameter("monomial system does not match the basis");
    PolynomialText out;
    const auto nv = static_cast<std::uint32_t>(ms.num_vars);
    for (std::uint32_t q = 1; q <= nv; ++q) out.var_names.push_back("x" + std::to_string(q));
    for (std::uint32_t q = 0; q < nv; ++q) {
        const Polynomial v = Polynomial::variable(q);
        out.generators.push_back(v * v - v);
    }
    const Polynomial one = Polynomial::constant(1);
    auto factor = [&](const std::optional<std::size_t>& var) {
        return var ? one - 2 * Polynomial::variable(static_cast<std::uint32_t>(*var)) : one;
    };
    for (const Equation& eq : ms.equations) {
        Polynomial s;
        for (const Term& term : eq.terms) s += term.sign * (factor(term.var_a) * factor(term.var_b));
        // An identically vanishing row sum carries no constraint.
        if (!s.is_zero()) out.generators.push_back(std::move(s));
    }
    return out;
}

std::string render(const PolynomialText& p, Syntax syntax, std::string_view ideal_name) {
    std::ostringstream out;
    if (syntax == Syntax::Plain) {
        out << "ring QQ vars ";
        for (std::size_t v = 0; v < p.var_names.size(); ++v) out << (v ? "," : "") << p.var_names[v];
        out << '\n';
        for (const Polynomial& g : p.generators) out << "gen " << g.render(p.var_names) << '\n';
        return out.str();
    }
    out << "ring R = 0, (";
    for (std::size_t v = 0; v < p.var_names.size(); ++v) out << (v ? "," : "") << p.var_names[v];
    out << "), dp;\n";
    out << "ideal " << ideal_name << " =";
    for (std::size_t k = 0; k < p.generators.size(); ++k)
        out << (k ? ",\n  " : "\n  ") << p.generators[k].render(p.var_names);
    out << ";\n";
    return out.str();
}

namespace {

class PolyReader {
public:
    PolyReader(std::string_view s, const std::unordered_map<std::string, std::uint32_t>& vars)
        : s_(s), vars_(vars) {}

    Polynomial read() {
        Polynomial p;
        if (s_.empty()) throw ParseError("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            long long sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            first = false;
            read_term(p, sign);
        }
        return p;
    }

private:
    void read_term(Polynomial& p, long long sign) {
        long long coeff = 1;
        Polynomial term = Polynomial::constant(1);
        bool expect_factor = true;
        while (expect_factor) {
            if (pos_ >= s_.size()) throw error("unexpected end of polynomial");
            if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                coeff *= read_int();
            } else if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') {
                const std::size_t start = pos_;
                while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
                const std::string name(s_.substr(start, pos_ - start));
                const auto it = vars_.find(name);
                if (it == vars_.end()) throw error("undeclared variable '" + name + "'");
                long long e = 1;
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    e = read_int();
                }
                for (long long k = 0; k < e; ++k) term = term * Polynomial::variable(it->second);
            } else {
                throw error(std::string("unexpected character '") + s_[pos_] + "'");
            }
            expect_factor = pos_ < s_.size() && s_[pos_] == '*';
            if (expect_factor) ++pos_;
        }
        p += (sign * coeff) * term;
    }

    long long read_int() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw error("expected an integer");
        return std::stoll(std::string(s_.substr(start, pos_ - start)));
    }

    ParseError error(const std::string& what) const {
        return ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    const std::unordered_map<std::string, std::uint32_t>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

PolynomialText parse_plain(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    PolynomialText out;
    std::unordered_map<std::string, std::uint32_t> vars;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!have_header) {
            const std::string prefix = "ring QQ vars ";
            if (line.rfind(prefix, 0) != 0) throw ParseError("expected header 'ring QQ vars ...'");
            std::stringstream names(line.substr(prefix.size()));
            std::string name;
            while (std::getline(names, name, ',')) {
                if (name.empty() || vars.count(name)) throw ParseError("bad or duplicate variable name '" + name + "'");
                vars.emplace(name, static_cast<std::uint32_t>(out.var_names.size()));
                out.var_names.push_back(name);
            }
            have_header = true;
            continue;
        }
        if (line.rfind("gen ", 0) != 0) throw ParseError("expected 'gen <polynomial>', got '" + line + "'");
        out.generators.push_back(PolyReader(std::string_view(line).substr(4), vars).read());
    }
    if (!have_header) throw ParseError("missing ring header");
    return out;
}

std::vector<Rational> eval_generators(const PolynomialText& p, const std::vector<Rational>& point) {
    if (point.size() != p.var_names.size())
        throw InvalidParameter("point has " + std::to_string(point.size()) + " coordinates, expected " +
                               std::to_string(p.var_names.size()));
    std::vector<Rational> out;
    out.reserve(p.generators.size());
    for (const Polynomial& g : p.generators) out.push_back(g.evaluate(point));
    return out;
}

}  // namespace cochad
