#include <catch2/catch_amalgamated.hpp>

#include "logder/verify.hpp"

using namespace logder;

TEST_CASE("fundamental check on the near-pencil") {
    // xyz(x-y): deleting x-y leaves the triangle
    Arrangement a(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}});
    CheckResult res = check_fundamental(a, "xyz(x-y)", 3);
    CHECK(res.status == "verified");
    CHECK(res.details.at("r") == 1);
    CHECK(res.details.at("r_prime") == 1);
    CHECK(res.details.at("restriction_size") == 2);  // d - s = 2 > r forces r = r'
}

TEST_CASE("fundamental check skips degenerate deletions") {
    CheckResult res = check_fundamental(generate_family("triangle"), "triangle", 0);
    CHECK(res.status == "skipped");
}

TEST_CASE("l3 addition theorem on the ziegler pair plus a line through a double point") {
    // ziegler:1 + L: |A^L| = 8 > r'+2 = 7 forces r = 6
    Arrangement z1 = generate_family("ziegler:1");
    AdditionResult a1 = add_generic_line(z1, 7, point_of_multiplicity(z1, 2));
    int h1 = a1.arrangement.size() - 1;
    CheckResult r1 = check_addition_deletion_l3(a1.arrangement, "ziegler:1+L", h1);
    CHECK(r1.status == "verified");
    CHECK(r1.details.at("restriction_size") == 8);
    CHECK(r1.details.at("r_prime") == 5);
    CHECK(r1.details.at("r") == 6);

    // ziegler:2 + L: |A^L| = 8 = r'+2 exactly, forcing r = 7
    Arrangement z2 = generate_family("ziegler:2");
    AdditionResult a2 = add_generic_line(z2, 7, point_of_multiplicity(z2, 2));
    CheckResult r2 = check_addition_deletion_l3(a2.arrangement, "ziegler:2+L", a2.arrangement.size() - 1);
    CHECK(r2.status == "verified");
    CHECK(r2.details.at("restriction_size") == 8);
    CHECK(r2.details.at("r_prime") == 6);
    CHECK(r2.details.at("r") == 7);
}

TEST_CASE("l3 checkers agree with the general checker on shared instances") {
    Arrangement a = generate_family("ex10a");
    for (int h = 0; h < a.size(); ++h) {
        CheckResult l3 = check_addition_deletion_l3(a, "ex10a", h);
        CheckResult gen = check_general_addition(a, "ex10a", h);
        CHECK_FALSE(l3.failed());
        CHECK_FALSE(gen.failed());
        if (l3.status == "skipped") continue;
        // the l=3 restriction has exponents (1, |A^H|-1), so r'' = |A^H| - 1
        if (gen.status != "skipped") {
            CHECK(gen.details.at("r_restriction") == l3.details.at("restriction_size") - 1);
        }
    }
}

TEST_CASE("general addition checker in four variables") {
    Arrangement b4 = generate_family("boolean:4");
    for (int h = 0; h < b4.size(); ++h) {
        CheckResult res = check_general_addition(b4, "boolean:4", h);
        CHECK_FALSE(res.failed());
    }
}

TEST_CASE("free deletion dichotomy on a223") {
    // every line of a223 carries 2 triple points and 1 double point, so all
    // six deletions sit in the |A^H| = 3 != 1 + d3 branch and keep r' = d2
    Arrangement a = generate_family("a223");
    FreenessClassification cls = classify_freeness(a);
    REQUIRE(cls.is_free);
    REQUIRE(cls.exponents == std::vector<int>{1, 2, 3});
    for (int h = 0; h < a.size(); ++h) {
        CheckResult res = check_free_deletion(a, "a223", h, &cls);
        REQUIRE(res.status == "verified");
        CHECK(res.details.at("restriction_size") == 3);
        CHECK(res.details.at("r_prime") == 2);
    }
}

TEST_CASE("free deletion on thm100 and the triangle boundary") {
    Arrangement t4 = generate_family("thm100", {{"k", 4}});
    FreenessClassification cls = classify_freeness(t4);
    REQUIRE(cls.is_free);
    REQUIRE(cls.exponents == std::vector<int>{1, 3, 3});

    // H = x carries 4 = 1 + d3 points, so r drops to d2 - 1
    int x_index = t4.find(Hyperplane({1, 0, 0}));
    CheckResult drop = check_free_deletion(t4, "thm100:k=4", x_index, &cls);
    CHECK(drop.status == "verified");
    CHECK(drop.details.at("restriction_size") == 4);
    CHECK(drop.details.at("r_prime") == 2);

    // H = z carries only the two multiplicity-4 points, so r' = d2
    int z_index = t4.find(Hyperplane({0, 0, 1}));
    CheckResult keep = check_free_deletion(t4, "thm100:k=4", z_index, &cls);
    CHECK(keep.status == "verified");
    CHECK(keep.details.at("restriction_size") == 2);
    CHECK(keep.details.at("r_prime") == 3);

    CheckResult tri = check_free_deletion(generate_family("triangle"), "triangle", 0);
    CHECK(tri.status == "skipped");  // deletion degenerates
}

TEST_CASE("maximal tjurina addition step") {
    // thm100 k=4: A_0 -> A_1 by adding x-y+z; tau goes 27 -> 36
    Arrangement a0 = generate_family("thm100", {{"k", 4}, {"j", 0}});
    CheckResult res = check_maximal_tjurina_addition(a0, "thm100:k=4,step0", Hyperplane({1, -1, 1}));
    CHECK(res.status == "verified");
    CHECK(res.details.at("tau_prime") == 27);
    CHECK(res.details.at("tau") == 36);
    CHECK(res.details.at("meeting_points") == 5);  // r' + 2

    // hypothesis failure: a fully generic line meets in 9 != r'+2 points
    Arrangement z2 = generate_family("ziegler:2");
    Arrangement z2g = add_generic_line(z2, 3).arrangement;
    CheckResult vac = check_maximal_tjurina_addition(z2, "ziegler:2+generic", z2g.line(z2g.size() - 1));
    CHECK(vac.status == "vacuous");

    // a free arrangement with 2r' < d'-1 is outside the preconditions
    CheckResult skip = check_maximal_tjurina_addition(generate_family("a223"), "a223", Hyperplane({1, 1, 1}));
    CHECK(skip.status == "skipped");
}

TEST_CASE("ziegler:2 grows to maximal tjurina type (10,7)") {
    // find a line meeting ziegler:2 in exactly 8 = r'+2 points
    Arrangement z2 = generate_family("ziegler:2");
    AdditionResult through_double = add_generic_line(z2, 11, point_of_multiplicity(z2, 2));
    REQUIRE(through_double.restriction_size == 8);
    CheckResult res = check_maximal_tjurina_addition(z2, "ziegler:2+L",
                                                     through_double.arrangement.line(9));
    CHECK(res.status == "verified");
}

TEST_CASE("generic addition transitions") {
    Arrangement z1 = generate_family("ziegler:1");
    Arrangement z2 = generate_family("ziegler:2");
    CheckResult a = check_generic_addition(z1, "ziegler:1", 5, true);
    CHECK(a.status == "verified");
    CHECK(a.details.at("r_prime") == 5);
    CHECK(a.details.at("r") == 6);
    CheckResult b = check_generic_addition(z2, "ziegler:2", 5, true);
    CHECK(b.status == "verified");
    CHECK(b.details.at("r") == 6);  // r' = d' - m' keeps r
    CheckResult c = check_generic_addition(z1, "ziegler:1", 6, false);
    CHECK(c.status == "verified");
    CHECK(c.details.at("r") == 6);
    CheckResult d = check_generic_addition(z2, "ziegler:2", 6, false);
    CHECK(d.status == "verified");
    CHECK(d.details.at("r") == 7);
}

TEST_CASE("deletion and re-addition give consistent r values") {
    Arrangement a = generate_family("a223");
    for (int h = 0; h < a.size(); ++h) {
        CheckResult direct = check_addition_deletion_l3(a, "a223", h);
        AdditionResult readded = add_line(a.without(h), a.line(h));
        CheckResult roundtrip = check_addition_deletion_l3(readded.arrangement, "a223-readded",
                                                           readded.arrangement.size() - 1);
        REQUIRE_FALSE(direct.failed());
        REQUIRE_FALSE(roundtrip.failed());
        CHECK(direct.details.at("r") == roundtrip.details.at("r"));
        CHECK(direct.details.at("r_prime") == roundtrip.details.at("r_prime"));
        CHECK(direct.details.at("restriction_size") == roundtrip.details.at("restriction_size"));
    }
}

TEST_CASE("predictor suite has no mismatches") {
    SuiteReport report = run_suite("predictor", 0);
    CHECK(report.ok());
    CHECK(report.count("counterexample") == 0);
    CHECK(report.count("verified") > 20);
}

TEST_CASE("suite verdicts are seed-invariant") {
    SuiteReport r1 = run_suite("predictor", 1);
    SuiteReport r2 = run_suite("predictor", 2);
    CHECK(r1.ok() == r2.ok());
    CHECK(r1.count("verified") == r2.count("verified"));
    CHECK(r1.results.size() == r2.results.size());
}

TEST_CASE("unknown suite is an input error") {
    CHECK_THROWS_AS(run_suite("bogus", 0), InputError);
}

TEST_CASE("freeness suite is clean") {
    SuiteReport report = run_suite("freeness", 0);
    CHECK(report.ok());
    CHECK(report.count("verified") > 100);
}
