#include "cochad/search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <sstream>
#include <thread>

#include "cochad/error.hpp"
#include "cochad/hadamard.hpp"

namespace cochad {

FixMask FixMask::all_free(const BasisDescriptor& b) { return FixMask{std::vector<Fix>(b.num_vars(), Fix::Free)}; }

FixMask FixMask::fixed(const CoordinateVector& x) {
    FixMask m;
    m.states.reserve(x.size());
    for (auto v : x.bits) m.states.push_back(v ? Fix::One : Fix::Zero);
    return m;
}

FixMask FixMask::parse(const BasisDescriptor& b, std::string_view spec) {
    FixMask m = all_free(b);
    std::stringstream in{std::string(spec)};
    std::string token;
    while (std::getline(in, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        const auto eq = token.find('=');
        int idx = 0;
        std::string value;
        try {
            if (eq == std::string::npos) throw std::invalid_argument(token);
            std::size_t used = 0;
            idx = std::stoi(token.substr(0, eq), &used);
            if (used != eq) throw std::invalid_argument(token);
            value = token.substr(eq + 1);
        } catch (const std::exception&) {
            throw InvalidParameter("malformed fix token '" + token + "' (expected i=0 or i=1)");
        }
        if (value != "0" && value != "1" && value != "2")
            throw InvalidParameter("fix value in '" + token + "' must be 0, 1 or 2");
        if (idx < b.cob_indices.front() || idx > b.cob_indices.back())
            throw InvalidParameter("fix index " + std::to_string(idx) + " outside " +
                                   std::to_string(b.cob_indices.front()) + ".." + std::to_string(b.cob_indices.back()));
        m.states[static_cast<std::size_t>(idx - b.cob_indices.front())] =
            value == "0" ? Fix::Zero : value == "1" ? Fix::One : Fix::Free;
    }
    return m;
}

std::size_t FixMask::free_count() const { return static_cast<std::size_t>(std::count(states.begin(), states.end(), Fix::Free)); }

std::vector<int> dihedral_dist(int t, const std::vector<int>& support) {
    if (t < 3) throw InvalidParameter("dihedral distribution requires t >= 3");
    std::vector<int> x(static_cast<std::size_t>(4 * t + 1), 0);
    for (int i : support) {
        if (i < 2 || i > 4 * t - 2) throw InvalidParameter("coboundary index outside 2..4t-2");
        x[static_cast<std::size_t>(i)] = 1;
    }
    x[1] = 0;
    std::vector<int> d(static_cast<std::size_t>(t));
    d[0] = x[1] + x[2 * t - 2] + x[2 * t + 1];
    for (int i = 2; i <= t - 1; ++i) d[i - 1] = x[i] + x[2 * t - i + 1] + x[2 * t + i] + x[4 * t - i - 1];
    d[t - 1] = x[2 * t - 1] + x[2 * t];
    return d;
}

VerifyResult verify_support(Family family, int t, const std::vector<int>& support) {
    const BasisDescriptor b = family_basis(family, t);
    for (int i : support)
        if (i < 2 || i > 4 * t - 2)
            throw InvalidParameter("coboundary index " + std::to_string(i) + " outside 2.." + std::to_string(4 * t - 2));
    VerifyResult r;
    r.matrix = assemble_matrix(b, coordinates_from_support(b, support), CoboundaryMode::Generalized);
    r.hadamard = is_hadamard(r.matrix);
    return r;
}

namespace {

struct FlatTerm {
    int eq;
    int sign;
    int a;  // -1 when absent
    int b;
};

/// Everything the backtracking needs, precomputed once per search.
struct Plan {
    std::size_t nv = 0;
    std::vector<Fix> states;
    std::vector<long> base;                                  // constant terms per equation
    std::vector<std::vector<FlatTerm>> completing;           // terms whose last variable is p
    std::vector<std::vector<std::pair<int, long>>> checks;   // (eq, undetermined terms after p)
    bool has_equations = false;

    // Z-family filters.
    std::vector<int> sym_partner;                   // lower partner position, or -1
    std::vector<std::vector<int>> columns;          // positions of diagram column k (0-based k)
    std::vector<std::vector<int>> columns_done_at;  // columns completing at position p
    bool parity = false;
    std::optional<std::vector<int>> col_target;
    std::optional<std::vector<int>> dist_target;
    bool d_dist = false;
    int t = 0;
    Family family = Family::Z;
};

Plan make_plan(const BasisDescriptor& b, const FixMask& mask, const SearchFilters& f) {
    Plan p;
    p.nv = b.num_vars();
    p.states = mask.states;
    p.t = b.t();
    p.family = b.family();
    const MonomialSystem ms = build_system(b);
    const auto ne = ms.equations.size();
    p.has_equations = ne > 0;
    p.base.assign(ne, 0);
    p.completing.assign(p.nv, {});
    p.checks.assign(p.nv, {});
    std::vector<std::vector<long>> complete_count(ne, std::vector<long>(p.nv, 0));
    for (std::size_t e = 0; e < ne; ++e) {
        for (const Term& term : ms.equations[e].terms) {
            const int a = term.var_a ? static_cast<int>(*term.var_a) : -1;
            const int c = term.var_b ? static_cast<int>(*term.var_b) : -1;
            const int level = std::max(a, c);
            if (level < 0) {
                p.base[e] += term.sign;
            } else {
                p.completing[static_cast<std::size_t>(level)].push_back({static_cast<int>(e), term.sign, a, c});
                ++complete_count[e][static_cast<std::size_t>(level)];
            }
        }
        long open = static_cast<long>(ms.equations[e].terms.size());
        open -= std::count_if(ms.equations[e].terms.begin(), ms.equations[e].terms.end(),
                              [](const Term& t) { return !t.var_a && !t.var_b; });
        for (std::size_t q = 0; q < p.nv; ++q) {
            open -= complete_count[e][q];
            if (complete_count[e][q] > 0) p.checks[q].push_back({static_cast<int>(e), open});
        }
    }

    p.sym_partner.assign(p.nv, -1);
    p.columns_done_at.assign(p.nv, {});
    const int t = b.t();
    if (b.family() == Family::Z) {
        auto pos = [&](int idx) { return idx - b.cob_indices.front(); };
        auto in_basis = [&](int idx) { return idx >= b.cob_indices.front() && idx <= b.cob_indices.back(); };
        if (f.symmetry)
            for (int k = 1; k <= (t - 1) / 2; ++k)
                for (int j = 1; j <= 4; ++j) {
                    const int lo = 4 * k + j, hi = 4 * t - 4 * k + j;
                    if (in_basis(lo) && in_basis(hi)) p.sym_partner[static_cast<std::size_t>(pos(hi))] = pos(lo);
                }
        p.columns.assign(static_cast<std::size_t>(t), {});
        for (int k = 1; k <= t; ++k) {
            for (int j = 1; j <= 4; ++j)
                if (in_basis(4 * (k - 1) + j)) p.columns[static_cast<std::size_t>(k - 1)].push_back(pos(4 * (k - 1) + j));
            if (!p.columns[static_cast<std::size_t>(k - 1)].empty())
                p.columns_done_at[static_cast<std::size_t>(p.columns[static_cast<std::size_t>(k - 1)].back())].push_back(k - 1);
        }
        p.parity = f.parity;
        p.col_target = f.col_target;
    }
    p.dist_target = f.dist_target;
    p.d_dist = f.experimental_d_dist;
    return p;
}

void validate_filters(const BasisDescriptor& b, const FixMask& mask, const SearchFilters& f) {
    if (mask.states.size() != b.num_vars())
        throw InvalidParameter("fix mask length " + std::to_string(mask.states.size()) + " does not match " +
                               std::to_string(b.num_vars()) + " basis coboundaries");
    const int t = b.t();
    if (b.family() == Family::D) {
        if (f.symmetry || f.parity || f.col_target)
            throw InvalidParameter("symmetry, parity and col filters apply to the z family only");
        if (f.dist_target && !f.experimental_d_dist)
            throw InvalidParameter("dist filter on the d family requires the experimental dihedral-dist flag");
        if (f.dist_target && f.dist_target->size() != static_cast<std::size_t>(t))
            throw InvalidParameter("d family dist target must have t entries");
    } else {
        if (f.experimental_d_dist) throw InvalidParameter("the dihedral-dist flag applies to the d family only");
        if (f.dist_target && f.dist_target->size() != 4)
            throw InvalidParameter("z family dist target must have 4 entries");
        if (f.col_target && f.col_target->size() != static_cast<std::size_t>((t - 1) / 2))
            throw InvalidParameter("z family col target must have (t-1)/2 entries");
    }
}

class Explorer {
public:
    Explorer(const Plan& plan, const BasisDescriptor& b, bool count_only)
        : plan_(plan), basis_(b), count_only_(count_only), x_(plan.nv, 0), forced_(plan.nv, -1), sums_(plan.base) {}

    void force(std::size_t pos, int v) { forced_[pos] = static_cast<std::int8_t>(v); }

    void run() { dfs(0); }

    std::vector<CoordinateVector> solutions;
    std::uint64_t count = 0;
    SearchStats stats;

private:
    void dfs(std::size_t p) {
        ++stats.nodes;
        if (p == plan_.nv) {
            leaf();
            return;
        }
        int lo = 0, hi = 1;
        if (plan_.states[p] == Fix::Zero) hi = 0;
        if (plan_.states[p] == Fix::One) lo = 1;
        if (forced_[p] >= 0) lo = hi = forced_[p];
        for (int v = lo; v <= hi; ++v) {
            if (plan_.sym_partner[p] >= 0 && x_[static_cast<std::size_t>(plan_.sym_partner[p])] != v) continue;
            x_[p] = static_cast<std::uint8_t>(v);
            apply(p, +1);
            if (feasible(p)) dfs(p + 1);
            apply(p, -1);
        }
        x_[p] = 0;
    }

    int factor(int var) const { return var >= 0 && x_[static_cast<std::size_t>(var)] ? -1 : 1; }

    void apply(std::size_t p, int dir) {
        for (const FlatTerm& term : plan_.completing[p]) sums_[static_cast<std::size_t>(term.eq)] += dir * term.sign * factor(term.a) * factor(term.b);
    }

    int column_sum(std::size_t k) const {
        int s = 0;
        for (int q : plan_.columns[k]) s += x_[static_cast<std::size_t>(q)];
        return s;
    }

    bool feasible(std::size_t p) const {
        for (const auto& [e, open] : plan_.checks[p])
            if (std::labs(sums_[static_cast<std::size_t>(e)]) > open) return false;
        for (int k : plan_.columns_done_at[p]) {
            if (k == 0) continue;
            const int ck = column_sum(static_cast<std::size_t>(k));
            if (plan_.parity && (column_sum(0) - ck) % 2 == 0) return false;
            if (plan_.col_target && k <= static_cast<int>(plan_.col_target->size()) &&
                (*plan_.col_target)[static_cast<std::size_t>(k - 1)] != ck)
                return false;
        }
        return true;
    }

    void leaf() {
        for (long s : sums_)
            if (s != 0) return;
        if (plan_.dist_target) {
            std::vector<int> support;
            for (std::size_t q = 0; q < plan_.nv; ++q)
                if (x_[q]) support.push_back(basis_.cob_indices[q]);
            if (plan_.family == Family::Z) {
                const Diagram d = diagram_of(plan_.t, support);
                if (!std::equal(d.dist.begin(), d.dist.end(), plan_.dist_target->begin())) return;
            } else if (dihedral_dist(plan_.t, support) != *plan_.dist_target) {
                return;
            }
        }
        const std::uint64_t index = stats.leaves++;
        const CoordinateVector x{x_};
        if (!count_only_ || !plan_.has_equations || index % 1024 == 0) {
            ++stats.verified;
            if (!is_hadamard(assemble_matrix(basis_, x, CoboundaryMode::Generalized))) {
                ++stats.rejected;
                return;
            }
        }
        ++count;
        if (!count_only_) solutions.push_back(x);
    }

    const Plan& plan_;
    const BasisDescriptor& basis_;
    bool count_only_;
    std::vector<std::uint8_t> x_;
    std::vector<std::int8_t> forced_;
    std::vector<long> sums_;
};

}  // namespace

SolutionSet search(const BasisDescriptor& b, const FixMask& mask, const SearchFilters& filters, bool count_only,
                   const SearchOptions& opts) {
    validate_filters(b, mask, filters);
    const std::size_t free = mask.free_count();
    if (static_cast<long>(free) > opts.budget_free)
        throw ResourceLimit(std::to_string(free) + " free coboundaries exceed the search budget of " +
                            std::to_string(opts.budget_free) + "; fix more coordinates");

    const auto start = std::chrono::steady_clock::now();
    const Plan plan = make_plan(b, mask, filters);

    std::vector<std::size_t> free_positions;
    for (std::size_t q = 0; q < mask.states.size(); ++q)
        if (mask.states[q] == Fix::Free) free_positions.push_back(q);
    const unsigned threads = std::max(1u, opts.threads);
    std::size_t split = 0;
    if (threads > 1)
        while (split < free_positions.size() && (std::size_t{1} << split) < 8 * static_cast<std::size_t>(threads)) ++split;
    const std::size_t tasks = std::size_t{1} << split;

    std::vector<Explorer> results;
    results.reserve(tasks);
    for (std::size_t c = 0; c < tasks; ++c) {
        results.emplace_back(plan, b, count_only);
        // First free position takes the most significant bit so task order is lexicographic.
        for (std::size_t i = 0; i < split; ++i) results.back().force(free_positions[i], static_cast<int>((c >> (split - 1 - i)) & 1u));
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < tasks; c = next++) results[c].run();
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < std::min<std::size_t>(threads, tasks); ++k) pool.emplace_back(worker);
    }

    SolutionSet out;
    for (Explorer& r : results) {
        out.count += r.count;
        out.stats.nodes += r.stats.nodes;
        out.stats.leaves += r.stats.leaves;
        out.stats.verified += r.stats.verified;
        out.stats.rejected += r.stats.rejected;
        out.solutions.insert(out.solutions.end(), std::make_move_iterator(r.solutions.begin()),
                             std::make_move_iterator(r.solutions.end()));
    }
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace cochad
