#include "cochad/group.hpp"

#include <sstream>

#include "cochad/error.hpp"

namespace cochad {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Z: return "z";
        case Family::D: return "d";
        case Family::Custom: return "custom";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    if (s == "z" || s == "Z") return Family::Z;
    if (s == "d" || s == "D") return Family::D;
    throw InvalidParameter("unknown group family '" + std::string(s) + "' (expected z or d)");
}

GroupTable::GroupTable(std::size_t order, std::vector<int> table, Family family, int t)
    : n_(order), mul_(std::move(table)), inv_(order, -1), family_(family), t_(t) {
    const int n = static_cast<int>(n_);
    if (n_ == 0 || mul_.size() != n_ * n_) throw ParseError("group table is not square");
    for (int v : mul_)
        if (v < 0 || v >= n) throw ParseError("group table entry out of range 1.." + std::to_string(n));

    for (int i = 0; i < n; ++i)
        if (mul0(0, i) != i || mul0(i, 0) != i)
            throw ParseError("identity law fails: element 1 is not the identity (index " +
                             std::to_string(i + 1) + ")");

    for (int i = 0; i < n; ++i) {
        std::vector<char> row_seen(n_, 0), col_seen(n_, 0);
        for (int j = 0; j < n; ++j) {
            row_seen[mul0(i, j)] = 1;
            col_seen[mul0(j, i)] = 1;
        }
        for (int j = 0; j < n; ++j)
            if (!row_seen[j] || !col_seen[j])
                throw ParseError("latin square law fails at row/column " + std::to_string(i + 1));
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (mul0(i, j) == 0) inv_[i] = j;
        if (inv_[i] < 0 || mul0(inv_[i], i) != 0)
            throw ParseError("inverse law fails for element " + std::to_string(i + 1));
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int ij = mul0(i, j);
            for (int k = 0; k < n; ++k)
                if (mul0(ij, k) != mul0(i, mul0(j, k)))
                    throw ParseError("associativity law fails at (" + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
        }
}

int GroupTable::mul(int i, int j) const {
    const int n = static_cast<int>(n_);
    if (i < 1 || i > n || j < 1 || j > n) throw InvalidParameter("element index out of range");
    return mul0(i - 1, j - 1) + 1;
}

int GroupTable::inv(int i) const {
    if (i < 1 || i > static_cast<int>(n_)) throw InvalidParameter("element index out of range");
    return inv_[i - 1] + 1;
}

bool GroupTable::is_commutative() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (mul_[i * n_ + j] != mul_[j * n_ + i]) return false;
    return true;
}

GroupTable make_group(Family family, int t) {
    if (t <= 0) throw InvalidParameter("t must be positive");
    const int n = 4 * t;
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    if (family == Family::Z) {
        if (t > 1 && t % 2 == 0) throw InvalidParameter("Z_t x Z_2^2 family requires odd t");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int a = (x / 4 + y / 4) % t;
                const int b = ((x / 2) % 2 + (y / 2) % 2) % 2;
                const int c = (x % 2 + y % 2) % 2;
                mul[static_cast<std::size_t>(x) * n + y] = 4 * a + 2 * b + c;
            }
    } else if (family == Family::D) {
        // Element x <-> a^r b^f with r = x mod 2t, f = x / 2t.
        // a^r b^f * a^s b^g = a^(r + (-1)^f s) b^(f+g).
        const int m = 2 * t;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                const int r = x % m, f = x / m, s = y % m, g = y / m;
                const int e = ((f ? r - s : r + s) % m + m) % m;
                mul[static_cast<std::size_t>(x) * n + y] = ((f + g) % 2) * m + e;
            }
    } else {
        throw InvalidParameter("make_group supports only the z and d families");
    }
    return GroupTable(static_cast<std::size_t>(n), std::move(mul), family, t);
}

GroupTable load_custom_group(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string keyword;
    long long n = 0;
    if (!(in >> keyword >> n) || keyword != "order")
        throw ParseError("group table must start with 'order <n>'");
    if (n <= 0) throw ParseError("group order must be positive");
    if (n % 4 != 0) throw ParseError("group order " + std::to_string(n) + " is not a multiple of 4");

    std::vector<int> mul;
    mul.reserve(static_cast<std::size_t>(n * n));
    std::string line;
    std::getline(in, line);  // rest of header line
    long long rows = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> vals;
        long long v;
        while (row >> v) {
            if (v < 1 || v > n) throw ParseError("group table entry " + std::to_string(v) + " out of range");
            vals.push_back(static_cast<int>(v - 1));
        }
        if (!row.eof()) throw ParseError("non-integer token in group table row " + std::to_string(rows + 1));
        if (vals.empty()) continue;
        if (static_cast<long long>(vals.size()) != n)
            throw ParseError("group table is not square: row " + std::to_string(rows + 1) + " has " +
                             std::to_string(vals.size()) + " entries");
        mul.insert(mul.end(), vals.begin(), vals.end());
        ++rows;
    }
    if (rows != n)
        throw ParseError("group table is not square: expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows));
    return GroupTable(static_cast<std::size_t>(n), std::move(mul), Family::Custom, static_cast<int>(n / 4));
}

std::string format_group_table(const GroupTable& g) {
    std::ostringstream out;
    const int n = static_cast<int>(g.order());
    out << "order " << n << '\n';
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out << (j ? " " : "") << g.mul0(i, j) + 1;
        out << '\n';
    }
    return out.str();
}

}  // namespace cochad
