#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cochad {

enum class Family { Z, D, Custom };

std::string_view family_name(Family f);  // "z", "d", "custom"
Family parse_family(std::string_view s);

/// A finite group given by its multiplication table.
///
/// Element indices in the public interface are 1-based and element 1 is the
/// identity. The table is stored 0-based; the `*0` accessors expose it for
/// inner loops.
class GroupTable {
public:
    /// Validates all group laws; throws ParseError naming the first failure.
    GroupTable(std::size_t order, std::vector<int> table, Family family, int t);

    std::size_t order() const { return n_; }
    Family family() const { return family_; }
    int t() const { return t_; }

    int mul(int i, int j) const;
    int inv(int i) const;
    static constexpr int identity() { return 1; }

    int mul0(int i, int j) const { return mul_[static_cast<std::size_t>(i) * n_ + j]; }
    int inv0(int i) const { return inv_[i]; }

    bool is_commutative() const;
    bool operator==(const GroupTable& o) const { return n_ == o.n_ && mul_ == o.mul_; }

private:
    std::size_t n_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    Family family_;
    int t_;
};

/// Z_t x Z_2^2 (t odd, or t = 1) and D_4t in the fixed element orderings:
///   Z: (a,b,c) has index 4a+2b+c+1;
///   D: index i in 1..2t is a^(i-1), index 2t+i is a^(i-1) b.
GroupTable make_group(Family family, int t);

/// Parses the group-table text format: "order n" then n rows of n 1-based
/// indices. The result is tagged Family::Custom.
GroupTable load_custom_group(std::string_view text);

std::string format_group_table(const GroupTable& g);

}  // namespace cochad
