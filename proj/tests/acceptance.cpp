// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run criterion N only
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "cochad/basis.hpp"
#include "cochad/cocycle.hpp"
#include "cochad/equations.hpp"
#include "cochad/hadamard.hpp"
#include "cochad/ideal.hpp"
#include "cochad/search.hpp"
#include "cochad/tables.hpp"

using namespace cochad;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

CoordinateVector from_index(std::size_t nv, std::uint64_t v) {
    CoordinateVector x;
    x.bits.resize(nv);
    for (std::size_t q = 0; q < nv; ++q) x.bits[q] = (v >> q) & 1u;
    return x;
}

void criterion_1(Outcome& o) {
    struct Case {
        Family family;
        int t;
        std::uint64_t expected;
        double limit;
    };
    const Case cases[] = {{Family::Z, 1, 6, 60},   {Family::D, 1, 6, 60},    {Family::Z, 3, 24, 60},
                          {Family::D, 3, 72, 60},  {Family::Z, 5, 120, 60},  {Family::D, 5, 1400, 600},
                          {Family::D, 7, 7488, 7200}};
    for (const Case& c : cases) {
        const auto start = Clock::now();
        const GroupTable g = make_group(c.family, c.t);
        const EnumerationResult r = enumerate_hadamard_cocycles(g, false);
        const double secs = since(start);
        // Sanity: the list really consists of distinct Hadamard cocycles.
        bool sound = r.cocycles.size() == r.count;
        for (std::size_t k = 0; k < r.cocycles.size() && sound; ++k) {
            const SignMatrix m = r.cocycles[k].to_matrix();
            sound = is_cocycle(g, m) && is_hadamard(m) && (k == 0 || !(r.cocycles[k] == r.cocycles[k - 1]));
        }
        const bool ok = sound && r.count == c.expected && secs <= c.limit;
        o.pass &= ok;
        o.detail << "\n  " << family_name(c.family) << " t=" << c.t << " dim=" << r.dim << " count=" << r.count
                 << " expected=" << c.expected << " sound=" << (sound ? "yes" : "no") << " time=" << secs << "s "
                 << (ok ? "ok" : "MISMATCH");
        if (c.t >= 3) {
            const BasisDescriptor b = family_basis(c.family, c.t);
            const SolutionSet s = search(b, FixMask::all_free(b), {}, true);
            o.detail << " (rho-restricted search count=" << s.count << ")";
        }
    }
}

void criterion_2(Outcome& o) {
    for (int which : {2, 3}) {
        const auto start = Clock::now();
        const std::vector<TableCheck> checks = check_table(which);
        const double secs = since(start);
        std::size_t passed = 0;
        for (const TableCheck& c : checks) {
            passed += c.pass;
            if (!c.pass) o.detail << "\n  table " << which << " t=" << c.t << " FAILED";
        }
        const bool ok = passed == checks.size() && secs <= 10.0;
        o.pass &= ok;
        o.detail << "\n  table " << which << ": " << passed << '/' << checks.size() << " rows verified in " << secs
                 << "s";
    }
}

void criterion_3(Outcome& o) {
    for (auto [f, t] : {std::pair{Family::Z, 3}, {Family::D, 3}, {Family::Z, 5}, {Family::D, 5}}) {
        const auto start = Clock::now();
        const BasisDescriptor b = family_basis(f, t);
        const MonomialSystem ms = build_system(b);
        const std::size_t nv = b.num_vars();
        std::uint64_t mismatches = 0, zeros = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << nv); ++v) {
            const CoordinateVector x = from_index(nv, v);
            bool all_zero = true;
            for (long r : eval_system(ms, x)) all_zero &= r == 0;
            zeros += all_zero;
            mismatches += all_zero != is_hadamard(assemble_matrix(b, x));
        }
        const double secs = since(start);
        const bool ok = mismatches == 0 && secs <= 300.0;
        o.pass &= ok;
        o.detail << "\n  " << family_name(f) << " t=" << t << ": 2^" << nv << " vectors, " << zeros
                 << " solutions, " << mismatches << " mismatches, " << secs << "s";
    }
}

void criterion_4(Outcome& o) {
    const auto start = Clock::now();
    std::uint64_t checked = 0, mismatches = 0;
    for (int t = 1; t <= 25; ++t) {
        if (t % 2 == 1) {
            const GroupTable g = make_group(Family::Z, t);
            for (int s = 5; s <= 2 * t + 2; ++s)
                for (int c = 1; c <= 4 * t; ++c, ++checked) mismatches += j_index(Family::Z, t, s, c) != g.mul(s, c);
        }
        if (t >= 3) {
            const GroupTable g = make_group(Family::D, t);
            for (int s = 2; s <= t; ++s)
                for (int c = 1; c <= 4 * t; ++c, ++checked) mismatches += j_index(Family::D, t, s, c) != g.mul(s, c);
        }
    }
    const double secs = since(start);
    o.pass = mismatches == 0 && secs <= 10.0;
    o.detail << "\n  " << checked << " positions, " << mismatches << " mismatches, " << secs << "s";
}

void criterion_5(Outcome& o) {
    const auto start = Clock::now();
    for (int t : {3, 5, 7}) {
        for (Family f : {Family::Z, Family::D}) {
            const GroupTable g = make_group(f, t);
            const int n = static_cast<int>(g.order());
            std::vector<SignMatrix> gen(n + 1);
            for (int d = 2; d <= n; ++d) gen[d] = generalized_coboundary(g, d);
            std::uint64_t bad_a = 0, bad_b = 0, bad_c = 0;
            for (int d = 2; d <= n; ++d)
                for (int s = 2; s <= n; ++s) {
                    std::set<int> neg;
                    for (int j = 1; j <= n; ++j)
                        if (gen[d](s, j) < 0) neg.insert(j);
                    bad_a += neg != std::set<int>{d, g.mul(g.inv(s), d)};
                }
            for (int s = 2; s <= n; ++s) {
                for (int c = 1; c <= n; ++c) {
                    std::set<int> which, expected;
                    for (int d = 2; d <= n; ++d)
                        if (gen[d](s, c) < 0) which.insert(d);
                    for (int d : {c, g.mul(s, c)})
                        if (d >= 2) expected.insert(d);
                    bad_b += which != expected;
                }
                bool shared = false;
                for (int d = 2; d <= n && !shared; ++d)
                    for (int e = d + 1; e <= n && !shared; ++e) {
                        bool same = true;
                        for (int j = 1; j <= n && same; ++j) same = (gen[d](s, j) < 0) == (gen[e](s, j) < 0);
                        shared = same;
                    }
                bad_c += shared != (g.mul(s, s) == 1);
            }
            o.pass &= bad_a + bad_b + bad_c == 0;
            o.detail << "\n  " << family_name(f) << " t=" << t << ": a) " << bad_a << " b) " << bad_b << " c) "
                     << bad_c << " violations";
        }
    }
    const double secs = since(start);
    o.pass &= secs <= 30.0;
    o.detail << "\n  " << secs << "s";
}

void criterion_6(Outcome& o) {
    const auto start = Clock::now();
    for (Family f : {Family::Z, Family::D}) {
        const BasisDescriptor b = family_basis(f, 3);
        const PolynomialText jg = emit_JG(b, build_system(b));
        std::vector<CoordinateVector> zeros;
        for (std::uint64_t v = 0; v < 512; ++v) {
            const CoordinateVector x = from_index(9, v);
            const std::vector<Rational> point(x.bits.begin(), x.bits.end());
            bool all_zero = true;
            for (const Rational& r : eval_generators(jg, point)) all_zero &= r.numerator() == 0;
            if (all_zero) zeros.push_back(x);
        }
        std::sort(zeros.begin(), zeros.end());
        const SolutionSet s = search(b, FixMask::all_free(b), {}, false);
        const bool ok = zeros == s.solutions;
        o.pass &= ok;
        o.detail << "\n  J_G " << family_name(f) << " t=3: " << zeros.size() << " zeros, search " << s.count << ' '
                 << (ok ? "equal" : "DIFFERENT");
    }
    for (auto [f, t] : {std::pair{Family::Z, 1}, {Family::D, 1}, {Family::Z, 3}}) {
        const GroupTable g = make_group(f, t);
        const PolynomialText ig = emit_IG(g);
        const EnumerationResult all = enumerate_hadamard_cocycles(g, false);
        std::size_t failing = 0;
        for (const CocycleVector& c : all.cocycles) {
            const SignMatrix m = c.to_matrix();
            std::vector<Rational> point;
            for (std::size_t i = 1; i <= g.order(); ++i)
                for (std::size_t j = 1; j <= g.order(); ++j) point.emplace_back(m(i, j));
            bool all_zero = true;
            for (const Rational& r : eval_generators(ig, point)) all_zero &= r.numerator() == 0;
            failing += !all_zero;
        }
        o.pass &= failing == 0;
        o.detail << "\n  I_G " << family_name(f) << " t=" << t << ": " << all.cocycles.size() << " cocycles, "
                 << failing << " not in the zero set";
    }
    const double secs = since(start);
    o.pass &= secs <= 300.0;
    o.detail << "\n  " << secs << "s";
}

void criterion_7(Outcome& o) {
    for (const TableRow& r : table2()) {
        if (r.t > 7) continue;
        const Diagram d = diagram_of(r.t, r.cob);
        const std::vector<int> dist(d.dist.begin(), d.dist.end());
        const bool parity = satisfies_column_parity(d);
        const bool ok = d.col == r.col && dist == r.dist && parity;
        o.pass &= ok;
        auto list = [](const std::vector<int>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        o.detail << "\n  t=" << r.t << ": col=(" << list(d.col) << ") expected (" << list(r.col) << "), dist=("
                 << list(dist) << ") expected (" << list(r.dist) << "), parity " << (parity ? "holds" : "FAILS");
    }
}

void criterion_8(Outcome& o) {
    const BasisDescriptor b = family_basis(Family::Z, 5);
    SearchOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    const SolutionSet a = search(b, FixMask::all_free(b), {}, false, one);
    const SolutionSet c = search(b, FixMask::all_free(b), {}, false, eight);
    o.pass = a.solutions == c.solutions && a.count == c.count;
    o.detail << "\n  threads=1: " << a.count << " solutions, threads=8: " << c.count << " solutions, lists "
             << (a.solutions == c.solutions ? "identical" : "DIFFER");
}

const char* const kTitles[] = {
    "",
    "cocycle enumeration counts",
    "reference supports verify",
    "reduced system equals the orthogonality test",
    "closed-form partner index equals the group product",
    "generalized coboundary properties a) b) c)",
    "ideal zero sets",
    "diagram descriptors and parity",
    "search determinism across thread counts",
};

const std::function<void(Outcome&)> kCriteria[] = {nullptr,     criterion_1, criterion_2, criterion_3, criterion_4,
                                                   criterion_5, criterion_6, criterion_7, criterion_8};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--criterion N]...\n";
            return 2;
        }
    }
    if (selected.empty())
        for (int c = 1; c <= 8; ++c) selected.push_back(c);

    int failures = 0;
    for (int c : selected) {
        if (c < 1 || c > 8) {
            std::cerr << "unknown criterion " << c << '\n';
            return 2;
        }
        Outcome o;
        const auto start = Clock::now();
        try {
            kCriteria[c](o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "\n  exception: " << e.what();
        }
        std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL") << " - " << kTitles[c] << " ("
                  << since(start) << "s)" << o.detail.str() << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
