#include <catch2/catch_amalgamated.hpp>

#include "logder/families.hpp"
#include "logder/invariants.hpp"
#include "logder/syzygy.hpp"

using namespace logder;

TEST_CASE("d0 dimensions of the triangle") {
    Arrangement tri = generate_family("triangle");
    CHECK(d0_dimension(tri, 0) == 0);
    CHECK(d0_dimension(tri, 1) == 2);  // x dx - y dy and y dy - z dz
    CHECK(mdr(tri) == 1);
}

TEST_CASE("d0 dimensions of the ziegler pair") {
    Arrangement z1 = generate_family("ziegler:1");
    CHECK(d0_dimension(z1, 4) == 0);
    CHECK(d0_dimension(z1, 5) == 1);
    Arrangement z2 = generate_family("ziegler:2");
    CHECK(d0_dimension(z2, 5) == 0);
    CHECK(mdr(z1) == 5);
    CHECK(mdr(z2) == 6);
}

TEST_CASE("mdr on the named families") {
    CHECK(mdr(generate_family("a223")) == 2);
    CHECK(mdr(generate_family("ex10a")) == 4);
    CHECK(mdr(generate_family("ex10b")) == 5);
    CHECK(mdr(generate_family("b7")) == 3);
    for (long d = 4; d <= 7; ++d) {
        CHECK(mdr(generate_family("generic", {{"d", d}, {"seed", 2}})) == d - 2);
    }
}

TEST_CASE("mdr witness annihilates Q and is nonzero") {
    for (const char* name : {"triangle", "a223", "ziegler:1", "ex10a"}) {
        Arrangement a = generate_family(name);
        MdrResult res = mdr_with_witness(a);
        CHECK_FALSE(res.witness.is_zero());
        CHECK(res.witness.apply(a.defining_polynomial()).is_zero());
        CHECK(res.witness.degree == res.r);
    }
}

TEST_CASE("mdr of a non-essential arrangement can be zero") {
    Arrangement pencil = parse_arrangement("1 0 0\n0 1 0\n1 1 0\n");
    REQUIRE_FALSE(pencil.is_essential());
    MdrResult res = mdr_with_witness(pencil);
    CHECK(res.r == 0);
}

TEST_CASE("deletion monotonicity r' <= r <= r'+1") {
    for (const char* name : {"a223", "ex10a", "ziegler:1"}) {
        Arrangement a = generate_family(name);
        int r = mdr(a);
        for (int h = 0; h < a.size(); ++h) {
            Arrangement del = a.without(h);
            if (!del.is_essential()) continue;
            int rp = mdr(del);
            CHECK(rp <= r);
            CHECK(r <= rp + 1);
        }
    }
}

TEST_CASE("multiplicity bound r <= d - m") {
    for (const char* name : {"triangle", "a223", "b7", "ex10a", "ex10b", "ziegler:1", "ziegler:2"}) {
        Arrangement a = generate_family(name);
        CHECK(mdr(a) <= a.size() - max_multiplicity(a).first);
    }
}

TEST_CASE("dimension table is monotone past mdr") {
    for (const char* name : {"a223", "ziegler:1"}) {
        Arrangement a = generate_family(name);
        JacobianSystem sys(a);
        int prev = 0;
        for (int r = 0; r <= a.size() - 1; ++r) {
            int cur = sys.dimension(r);
            if (prev > 0) CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("minimal generator degrees") {
    CHECK(minimal_generator_degrees(generate_family("triangle")) == std::map<int, int>{{1, 2}});
    CHECK(minimal_generator_degrees(generate_family("a223")) == std::map<int, int>{{2, 1}, {3, 1}});
    std::map<int, int> z1 = minimal_generator_degrees(generate_family("ziegler:1"));
    REQUIRE_FALSE(z1.empty());
    CHECK(z1.begin()->first == 5);
    int total = 0;
    for (const auto& [deg, cnt] : z1) total += cnt;
    CHECK(total >= 3);  // not free
    CHECK_THROWS_AS(minimal_generator_degrees(generate_family("a223"), 3), InputError);
}

TEST_CASE("free product rule ties generators to tau") {
    // when the generator multiset is {r, d-1-r}, tau = (d-1)(d-r-1) + r^2
    for (const char* name : {"triangle", "a223"}) {
        Arrangement a = generate_family(name);
        int d = a.size();
        int r = mdr(a);
        std::map<int, int> gens = minimal_generator_degrees(a, d);
        std::map<int, int> free_pattern;
        free_pattern[r] += 1;
        free_pattern[d - 1 - r] += 1;
        REQUIRE(gens == free_pattern);
        long long tau = tjurina(intersection_points(a).n);
        CHECK(tau == static_cast<long long>(d - 1) * (d - r - 1) + static_cast<long long>(r) * r);
    }
    Arrangement t4 = generate_family("thm100", {{"k", 4}});
    std::map<int, int> gens = minimal_generator_degrees(t4, t4.size());
    CHECK(gens == std::map<int, int>{{3, 2}});  // exponents (1,3,3)
}

TEST_CASE("multi exponents") {
    Multiarrangement1D simple{{{{1, 0}, 1}, {{0, 1}, 1}}};
    CHECK(multi_exponents(simple) == MultiExponents{1, 1});

    Multiarrangement1D weighted{{{{1, 0}, 2}, {{0, 1}, 1}}};
    CHECK(multi_exponents(weighted) == MultiExponents{1, 2});

    Multiarrangement1D three{{{{1, 0}, 1}, {{0, 1}, 2}, {{1, -1}, 2}}};
    CHECK(multi_exponents(three) == MultiExponents{2, 3});

    // one point: exponents (0, mu)
    for (int mu = 1; mu <= 4; ++mu) {
        Multiarrangement1D one{{{{1, 0}, mu}}};
        CHECK(multi_exponents(one) == MultiExponents{0, mu});
    }
    CHECK_THROWS_AS(multi_exponents(Multiarrangement1D{}), InputError);
}

TEST_CASE("multi exponents sum to the total multiplicity") {
    // the a223 Ziegler restriction onto x-y realizes the (2,3) case
    Arrangement a = generate_family("a223");
    int h = a.find(Hyperplane({1, -1, 0}));
    Multiarrangement1D zr = ziegler_restriction(a, h);
    MultiExponents e = multi_exponents(zr);
    CHECK(e == MultiExponents{2, 3});
    CHECK(e.e1 + e.e2 == zr.total_multiplicity());

    for (const char* name : {"ziegler:1", "ex10a", "b7"}) {
        Arrangement arr = generate_family(name);
        for (int i = 0; i < arr.size(); ++i) {
            Multiarrangement1D m = ziegler_restriction(arr, i);
            MultiExponents me = multi_exponents(m);
            CHECK(me.e1 <= me.e2);
            CHECK(me.e1 + me.e2 == m.total_multiplicity());
        }
    }
}

TEST_CASE("syzygy profile collects the pieces") {
    SyzygyProfile p = compute_syzygy_profile(generate_family("ziegler:1"));
    CHECK(p.d == 9);
    CHECK(p.mdr == 5);
    CHECK(p.essential);
    CHECK(p.dims.at(4) == 0);
    CHECK(p.dims.at(5) == 1);
    CHECK(p.basis_at_mdr.size() == 1);
    CHECK(p.mingen_bound == 18);
    CHECK(p.mingen_degrees.begin()->first == 5);
}

TEST_CASE("mdr search reports an assembly bug instead of passing the cap") {
    // a valid arrangement always terminates; exercise the happy path here
    Arrangement two(2, {{1, 0}, {0, 1}});
    CHECK(mdr(two) == 1);  // l=2: exponents (1, d-1)
}
