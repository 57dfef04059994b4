#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cochad/basis.hpp"
#include "cochad/equations.hpp"
#include "cochad/group.hpp"
#include "cochad/polynomial.hpp"

namespace cochad {

enum class Syntax { Plain, Singular };

Syntax parse_syntax(std::string_view s);

/// Generators of an ideal over QQ with named variables.
struct PolynomialText {
    std::vector<std::string> var_names;
    std::vector<Polynomial> generators;
};

/// Hadamard-cocycle ideal over the full table: variables x_i_j, generators
/// x_i_j^2-1, x_1_j-1, x_i_1-1 (i,j != 1), the cocycle relations
/// x_i_j - x_{ij}_k * x_j_k * x_i_{jk} for all triples, and the row sums
/// of rows 2..n, in that order.
PolynomialText emit_IG(const GroupTable& g);

/// Coordinate ideal: x_q^2-x_q for each coordinate, then each row-sum
/// equation expanded.
PolynomialText emit_JG(const BasisDescriptor& b, const MonomialSystem& ms);

/// PLAIN: "ring QQ vars a,b,..." then one "gen <poly>" per line.
/// SINGULAR: a ring over characteristic 0 with dp ordering and one ideal.
std::string render(const PolynomialText& p, Syntax syntax, std::string_view ideal_name = "I");

/// Reader for the PLAIN format.
PolynomialText parse_plain(std::string_view text);

std::vector<Rational> eval_generators(const PolynomialText& p, const std::vector<Rational>& point);

}  // namespace cochad
