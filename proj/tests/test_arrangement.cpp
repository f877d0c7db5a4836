#include <catch2/catch_amalgamated.hpp>

#include "logder/arrangement.hpp"
#include "logder/families.hpp"

using namespace logder;

TEST_CASE("hyperplane canonical form") {
    Hyperplane h({-2, 4, -6});
    CHECK(h.coeffs == std::vector<Int>{1, -2, 3});
    CHECK_THROWS_AS(Hyperplane({0, 0, 0}), InputError);
    CHECK(Hyperplane::from_rationals({Rational(1, 2), Rational(0), Rational(-1, 3)}).coeffs ==
          std::vector<Int>{3, 0, -2});
}

TEST_CASE("parsing the triangle") {
    Arrangement a = parse_arrangement("1 0 0\n0 1 0\n0 0 1\n");
    CHECK(a.size() == 3);
    CHECK(a.nvars() == 3);
    CHECK(a.is_essential());
    CHECK(a == generate_family("triangle"));
}

TEST_CASE("parser rejects duplicates after canonicalization") {
    CHECK_THROWS_AS(parse_arrangement("1 0 0\n2 0 0\n"), InputError);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_arrangement("1 0\n"), InputError);           // wrong arity
    CHECK_THROWS_AS(parse_arrangement("1 0 zebra\n"), InputError);     // bad token
    CHECK_THROWS_AS(parse_arrangement("0 0 0\n1 0 0\n"), InputError);  // zero form
    CHECK_THROWS_AS(parse_arrangement("vars 1\n"), InputError);
}

TEST_CASE("parser accepts comments, header, and rationals") {
    Arrangement a = parse_arrangement("# a comment\nvars 3\n1/2 0 0 # trailing\n0 1/3 -1/3\n");
    CHECK(a.size() == 2);
    CHECK(a.line(0).coeffs == std::vector<Int>{1, 0, 0});
    CHECK(a.line(1).coeffs == std::vector<Int>{0, 1, -1});
}

TEST_CASE("non-essential input is accepted and flagged") {
    Arrangement a = parse_arrangement("1 0 0\n0 1 0\n1 1 0\n");
    CHECK(a.size() == 3);
    CHECK_FALSE(a.is_essential());
}

TEST_CASE("writer round-trips exactly") {
    for (const char* name : {"ziegler:1", "a223", "b7", "ex10b"}) {
        Arrangement a = generate_family(name);
        Arrangement back = parse_arrangement(write_arrangement(a));
        CHECK(a == back);
        CHECK(write_arrangement(a) == write_arrangement(back));
    }
}

TEST_CASE("add rejects duplicates and arity mismatches") {
    Arrangement a = generate_family("triangle");
    CHECK_THROWS_AS(a.add(Hyperplane({3, 0, 0})), InputError);
    CHECK_THROWS_AS(a.add(Hyperplane({1, 1})), InputError);
}

TEST_CASE("family ziegler equations") {
    Arrangement z1 = generate_family("ziegler:1");
    REQUIRE(z1.size() == 9);
    CHECK(z1.line(0).coeffs == std::vector<Int>{1, 0, 0});
    CHECK(z1.line(1).coeffs == std::vector<Int>{0, 1, 0});
    CHECK(z1.line(2).coeffs == std::vector<Int>{1, -1, -1});
    Arrangement z2 = generate_family("ziegler:2");
    REQUIRE(z2.size() == 9);
    CHECK(z2.line(2).coeffs == std::vector<Int>{4, -5, -5});
    CHECK_THROWS_AS(generate_family("ziegler:3"), InputError);
}

TEST_CASE("family thm100 line counts and members") {
    Arrangement a = generate_family("thm100", {{"k", 3}, {"j", 0}});
    REQUIRE(a.size() == 5);
    CHECK(a.contains(Hyperplane({1, 0, 0})));
    CHECK(a.contains(Hyperplane({1, 0, -1})));
    CHECK(a.contains(Hyperplane({0, 1, 0})));
    CHECK(a.contains(Hyperplane({0, 1, -1})));
    CHECK(a.contains(Hyperplane({0, 0, 1})));
    for (long k = 2; k <= 6; ++k) {
        for (long j = 0; j <= k - 1; ++j) {
            CHECK(generate_family("thm100", {{"k", k}, {"j", j}}).size() == 2 * k - 1 + j);
        }
    }
    CHECK_THROWS_AS(generate_family("thm100", {{"k", 3}, {"j", 3}}), InputError);
    CHECK_THROWS_AS(generate_family("thm100", {{"j", 1}}), InputError);
}

TEST_CASE("family dminus3 and dminus4 members") {
    Arrangement b7 = generate_family("dminus3", {{"d", 7}});
    REQUIRE(b7.size() == 7);
    CHECK(b7.contains(Hyperplane({27, 8, -216})));  // x/8 + y/27 - z cleared
    CHECK(b7.contains(Hyperplane({3, 2, -6})));
    Arrangement b6_plus = generate_family("dminus3", {{"d", 8}});
    CHECK(b6_plus.size() == 8);
    CHECK_THROWS_AS(generate_family("dminus3", {{"d", 6}}), InputError);

    for (long d = 8; d <= 14; ++d) {
        CHECK(generate_family("dminus4", {{"d", d}}).size() == d);
    }
    Arrangement a10 = generate_family("dminus4", {{"d", 10}});
    CHECK(a10.contains(Hyperplane({27, -8, 0})));
    CHECK(a10.contains(Hyperplane({1, -1, 0})));
    CHECK_THROWS_AS(generate_family("dminus4", {{"d", 7}}), InputError);
}

TEST_CASE("family prop101 extends thm100 by x+y-cz lines") {
    Arrangement a7 = generate_family("prop101", {{"k", 7}, {"j", 7}});
    CHECK(a7.size() == 20);
    CHECK(a7.contains(Hyperplane({1, 1, -9})));
    CHECK_FALSE(a7.contains(Hyperplane({1, 1, -10})));
    Arrangement a8 = generate_family("prop101", {{"k", 7}, {"j", 8}});
    CHECK(a8.contains(Hyperplane({1, 1, -10})));
    Arrangement a12 = generate_family("prop101", {{"k", 7}, {"j", 12}});
    CHECK(a12.size() == 25);
    for (long c : {9, 10, 11, 13, 15, 17}) {
        CHECK(a12.contains(Hyperplane({1, 1, -Int(c)})));
    }
    CHECK_THROWS_AS(generate_family("prop101", {{"k", 4}, {"j", 0}}), InputError);
    CHECK_THROWS_AS(generate_family("prop101", {{"k", 5}, {"j", 9}}), InputError);
}

TEST_CASE("boolean and generic families") {
    Arrangement b4 = generate_family("boolean:4");
    CHECK(b4.size() == 4);
    CHECK(b4.nvars() == 4);
    CHECK(b4.is_essential());

    Arrangement g1 = generate_family("generic", {{"d", 6}, {"seed", 9}});
    Arrangement g2 = generate_family("generic", {{"d", 6}, {"seed", 9}});
    CHECK(write_arrangement(g1) == write_arrangement(g2));
    Arrangement g3 = generate_family("generic", {{"d", 6}, {"seed", 10}});
    CHECK(g1.size() == g3.size());

    CHECK_THROWS_AS(generate_family("nosuch"), InputError);
}

TEST_CASE("family spec grammar") {
    FamilySpec spec = parse_family_spec("ziegler:2+genericthrough:double:seed7");
    CHECK(spec.name == "ziegler:2");
    REQUIRE(spec.additions.size() == 1);
    CHECK(spec.additions[0].through);
    CHECK(spec.additions[0].selector == "double");
    CHECK(spec.additions[0].seed == 7);

    FamilySpec spec2 = parse_family_spec("thm100:k=4,j=2");
    CHECK(spec2.name == "thm100");
    CHECK(spec2.params.at("k") == 4);
    CHECK(spec2.params.at("j") == 2);

    Arrangement a = arrangement_from_family_spec("a223+generic:seed3");
    CHECK(a.size() == 7);

    CHECK_THROWS_AS(parse_family_spec("a223+warp:1"), InputError);
    CHECK_THROWS_AS(parse_family_spec("thm100:k=x"), InputError);
}
