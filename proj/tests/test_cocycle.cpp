#include <doctest.h>

#include <set>

#include "cochad/basis.hpp"
#include "cochad/cocycle.hpp"
#include "cochad/error.hpp"
#include "cochad/hadamard.hpp"

using namespace cochad;

TEST_CASE("elementary coboundary on the Klein group") {
    const GroupTable g = make_group(Family::Z, 1);
    const SignMatrix m = elementary_coboundary(g, 2);
    CHECK(m(2, 1) == 1);
    CHECK(m(2, 2) == 1);
    CHECK(m(2, 3) == -1);
    CHECK(m(2, 4) == -1);
    for (std::size_t j = 1; j <= 4; ++j) CHECK(m(1, j) == 1);
    CHECK(is_cocycle(g, m));
    CHECK_THROWS_AS(elementary_coboundary(g, 0), InvalidParameter);
    CHECK_THROWS_AS(elementary_coboundary(g, 5), InvalidParameter);
}

TEST_CASE("generalized coboundary") {
    const GroupTable g = make_group(Family::Z, 1);
    const SignMatrix m = generalized_coboundary(g, 2);
    CHECK(m.to_text() == "++++\n--++\n+-+-\n+--+\n");
    CHECK_THROWS_AS(generalized_coboundary(g, 1), InvalidParameter);

    const GroupTable d12 = make_group(Family::D, 3);
    CHECK(is_cocycle(d12, elementary_coboundary(d12, 5)));
    const SignMatrix r = generalized_coboundary(d12, 3);
    int negatives = 0;
    for (std::size_t j = 1; j <= 12; ++j) {
        CHECK(r(1, j) == 1);
        negatives += r(5, j) < 0;
    }
    CHECK(negatives == 2);
}

TEST_CASE("is_cocycle") {
    const GroupTable g = make_group(Family::Z, 1);
    SignMatrix ones(4);
    CHECK(is_cocycle(g, ones));
    ones.flip(2, 2);
    CHECK_FALSE(is_cocycle(g, ones));
    CHECK_THROWS_AS(is_cocycle(g, SignMatrix(5)), InvalidParameter);
    for (int t : {1, 3, 5, 7}) CHECK(is_cocycle(make_group(Family::Z, t), representative_product(Family::Z, t)));
}

TEST_CASE("properties of generalized coboundaries on small groups") {
    std::vector<GroupTable> groups;
    for (int t = 1; t <= 7; ++t) {
        groups.push_back(make_group(Family::D, t));
        if (t % 2 == 1) groups.push_back(make_group(Family::Z, t));
    }
    for (const GroupTable& g : groups) {
        const int n = static_cast<int>(g.order());
        CAPTURE(n);
        std::vector<SignMatrix> gen(n + 1);
        for (int d = 2; d <= n; ++d) gen[d] = generalized_coboundary(g, d);
        bool a_ok = true, b_ok = true, c_ok = true;
        for (int d = 2; d <= n; ++d)
            for (int s = 2; s <= n; ++s) {
                std::set<int> neg;
                for (int j = 1; j <= n; ++j)
                    if (gen[d](s, j) < 0) neg.insert(j);
                const int e = g.mul(g.inv(s), d);
                a_ok &= neg == std::set<int>{d, e} || (d == e && neg.empty());
            }
        for (int s = 2; s <= n; ++s) {
            for (int c = 1; c <= n; ++c) {
                std::set<int> which;
                for (int d = 2; d <= n; ++d)
                    if (gen[d](s, c) < 0) which.insert(d);
                std::set<int> expected;
                for (int d : {c, g.mul(s, c)})
                    if (d >= 2) expected.insert(d);
                b_ok &= which == expected;
            }
            bool shared = false;
            for (int d = 2; d <= n && !shared; ++d)
                for (int e = d + 1; e <= n && !shared; ++e) {
                    bool same = true;
                    for (int j = 1; j <= n; ++j) same &= (gen[d](s, j) < 0) == (gen[e](s, j) < 0);
                    int count = 0;
                    for (int j = 1; j <= n; ++j) count += gen[d](s, j) < 0;
                    shared = same && count == 2;
                }
            c_ok &= shared == (g.mul(s, s) == 1);
        }
        CHECK(a_ok);
        CHECK(b_ok);
        CHECK(c_ok);
    }
}

TEST_CASE("cocycle space dimension") {
    CHECK(cocycle_space_basis(make_group(Family::Z, 1)).dim == 4);
    CHECK(cocycle_space_basis(make_group(Family::Z, 3)).dim == 12);
    CHECK(cocycle_space_basis(make_group(Family::D, 3)).dim == 12);
    const GroupTable d5 = make_group(Family::D, 5);
    const CocycleSpaceBasis b = cocycle_space_basis(d5);
    for (const CocycleVector& v : b.basis) {
        CHECK(v.is_normalized());
        CHECK(is_cocycle(d5, v.to_matrix()));
    }
}

TEST_CASE("dimension agrees with a sweep over all normalized functions on order 4") {
    const std::vector<GroupTable> groups = {
        make_group(Family::Z, 1),
        load_custom_group("order 4\n1 2 3 4\n2 3 4 1\n3 4 1 2\n4 1 2 3\n"),
    };
    for (const GroupTable& g : groups) {
        std::size_t cocycles = 0;
        for (unsigned f = 0; f < (1u << 9); ++f) {
            SignMatrix m(4);
            for (unsigned bit = 0; bit < 9; ++bit)
                if (f >> bit & 1u) m.set(bit / 3 + 2, bit % 3 + 2, -1);
            cocycles += is_cocycle(g, m);
        }
        CHECK(cocycles == (std::size_t{1} << cocycle_space_basis(g).dim));
    }
}

TEST_CASE("enumeration of small groups") {
    auto count = [](Family f, int t) { return enumerate_hadamard_cocycles(make_group(f, t), true).count; };
    CHECK(count(Family::Z, 1) == 6);
    CHECK(count(Family::D, 1) == 6);
    CHECK(count(Family::Z, 3) == 24);
    CHECK(count(Family::D, 3) == 72);

    const GroupTable g = make_group(Family::D, 3);
    const EnumerationResult all = enumerate_hadamard_cocycles(g, false);
    REQUIRE(all.cocycles.size() == 72);
    for (const CocycleVector& v : all.cocycles) {
        CHECK(v.is_normalized());
        const SignMatrix m = v.to_matrix();
        CHECK(is_cocycle(g, m));
        CHECK(is_hadamard(m));
        CHECK(CocycleVector::from_matrix(m) == v);
    }
    EnumerationOptions four;
    four.threads = 4;
    CHECK(enumerate_hadamard_cocycles(g, false, four).cocycles == all.cocycles);

    EnumerationOptions tight;
    tight.budget_log2 = 4;
    CHECK_THROWS_AS(enumerate_hadamard_cocycles(g, true, tight), ResourceLimit);
}
