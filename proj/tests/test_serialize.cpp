#include "doctest.h"

#include "diracint/root_analysis.hpp"
#include "diracint/serialize.hpp"
#include "diracint/solutions.hpp"

#include "json.hpp"

using namespace diracint;

static SolutionDescriptor exact_descriptor() {
    PolySequence seq = generate_sequence(Subcase::S3, 2, 1);
    return build_case1_solution(seq, Rational(1), Rational(3, 8));
}

static SolutionDescriptor boxed_descriptor() {
    PolySequence seq = generate_sequence(Subcase::S3, 2, 1);
    PositiveRootCount count = count_positive_roots_in_m(seq, Rational(0));
    RootBox box = refine(count.positive_boxes.at(0), Rational(1, 1024));
    return build_case1_solution_m_box(seq, box, Rational(0));
}

TEST_CASE("descriptor json round-trips byte for byte") {
    for (const SolutionDescriptor& sol : {exact_descriptor(), boxed_descriptor()}) {
        std::string j1 = descriptor_to_json(sol);
        SolutionDescriptor back = descriptor_from_json(j1);
        std::string j2 = descriptor_to_json(back);
        CHECK(j1 == j2);
        CHECK(back.family == sol.family);
        CHECK(back.liouvillian == sol.liouvillian);
        CHECK(back.prefactor == sol.prefactor);
        CHECK(back.omega == sol.omega);
        CHECK(back.r == sol.r);
        CHECK(back.params == sol.params);
        CHECK(back.cert.kind == sol.cert.kind);
        CHECK(back.cert.bound == sol.cert.bound);
        CHECK(back.cert.energy_e2 == sol.cert.energy_e2);
        CHECK(back.cert.has_box == sol.cert.has_box);
        CHECK(back.cert.box_lo == sol.cert.box_lo);
        CHECK(back.cert.box_hi == sol.cert.box_hi);
    }
}

TEST_CASE("descriptor files hold one object or an array") {
    SolutionDescriptor a = exact_descriptor();
    SolutionDescriptor b = boxed_descriptor();
    std::string arr = descriptors_to_json({a, b});
    auto back = descriptors_from_json(arr);
    REQUIRE(back.size() == 2);
    CHECK(descriptors_to_json(back) == arr);

    auto single = descriptors_from_json(descriptor_to_json(a));
    REQUIRE(single.size() == 1);
    CHECK(descriptor_to_json(single[0]) == descriptor_to_json(a));
}

TEST_CASE("malformed descriptor input is a data error") {
    CHECK_THROWS_AS(descriptor_from_json("not json at all"), std::domain_error);
    CHECK_THROWS_AS(descriptor_from_json("{}"), std::domain_error);
    CHECK_THROWS_AS(descriptors_from_json("[]"), std::domain_error);

    std::string good = descriptor_to_json(exact_descriptor());
    std::string bad_family = good;
    bad_family.replace(bad_family.find("KovacicCase1"), 12, "NoSuchFamily");
    CHECK_THROWS_AS(descriptor_from_json(bad_family), std::domain_error);

    // a coefficient that is not a rational literal
    std::string bad_coeff = good;
    bad_coeff.replace(bad_coeff.find("15/8"), 4, "15/8x");
    CHECK_THROWS_AS(descriptor_from_json(bad_coeff), std::domain_error);
}

TEST_CASE("curve csv format") {
    PolySequence seq = generate_sequence(Subcase::S1, 1, -1);
    CurveScan scan = scan_curve(seq, Rational(-1), Rational(1), Rational(1),
                                Rational(1, 1024), ConditionKind::Full, 1);
    CHECK(curve_to_csv(scan) ==
          "m,alpha_lo,alpha_hi,exact\n"
          "-1,0,0,1\n"
          "0,0,0,1\n"
          "1,0,0,1\n");

    // odd-in-m condition vanishes identically on the m = 0 column
    PolySequence even = generate_sequence(Subcase::S1, 2, -1);
    CurveScan line = scan_curve(even, Rational(0), Rational(0), Rational(1),
                                Rational(1, 1024), ConditionKind::Full, 1);
    CHECK(curve_to_csv(line) == "m,alpha_lo,alpha_hi,exact\n0,line,line,line\n");
}

TEST_CASE("curve json mirrors the scan") {
    PolySequence seq = generate_sequence(Subcase::S3, 2, 1);
    CurveScan scan = scan_curve(seq, Rational(0), Rational(1), Rational(1, 2),
                                Rational(1, 1024), ConditionKind::Full, 1);
    auto j = nlohmann::json::parse(curve_to_json(scan));
    CHECK(j.at("subcase") == "S3");
    CHECK(j.at("d") == 2);
    CHECK(j.at("lambda") == 1);
    CHECK(j.at("condition") == "full");
    CHECK(j.at("eps") == "1/1024");
    REQUIRE(j.at("points").size() == 3);
    for (const auto& pt : j.at("points")) {
        CHECK(pt.contains("m"));
        CHECK(pt.contains("roots"));
        for (const auto& rt : pt.at("roots")) {
            CHECK(rt.contains("lo"));
            CHECK(rt.contains("hi"));
            CHECK(rt.contains("exact"));
        }
    }
}

TEST_CASE("condition kind names") {
    CHECK(std::string(condition_kind_name(ConditionKind::Full)) == "full");
    CHECK(std::string(condition_kind_name(ConditionKind::Effective)) == "effective");
    CHECK(condition_kind_from_name("full") == ConditionKind::Full);
    CHECK(condition_kind_from_name("effective") == ConditionKind::Effective);
    CHECK_THROWS_AS(condition_kind_from_name("partial"), std::domain_error);
}

TEST_CASE("sequence json lists every coefficient") {
    PolySequence seq = generate_sequence(Subcase::S1, 3, -1);
    auto j = nlohmann::json::parse(sequence_to_json(seq));
    CHECK(j.at("subcase") == "S1");
    CHECK(j.at("d") == 3);
    CHECK(j.at("lambda") == -1);
    CHECK(j.at("p").size() == 6);  // l = d+1 .. -1
    CHECK(j.at("p").front().at("l") == 4);
    CHECK(j.at("p").back().at("l") == -1);
    CHECK(j.at("condition_constant") == "-8");
}

TEST_CASE("spectrum json carries exact energies") {
    WhittakerCase wc = build_whittaker_case(Rational(1), Rational(1, 2), 1);
    auto levels = whittaker_levels(wc, 0, 2);
    auto j = nlohmann::json::parse(spectrum_to_json(wc, levels));
    CHECK(j.at("m") == "1");
    CHECK(j.at("alpha") == "1/2");
    CHECK(j.at("mu") == "0");
    CHECK(j.at("kappa_times") == "-3/2");
    REQUIRE(j.at("levels").size() == 6);
    bool found = false;
    for (const auto& lv : j.at("levels"))
        if (lv.at("e2_over_m2") == "16/25") {
            found = true;
            CHECK(lv.at("e2") == "16/25");
            CHECK(lv.at("valid") == true);
        }
    CHECK(found);
}

TEST_CASE("exclusion report json") {
    auto j = nlohmann::json::parse(kovacic_to_json(kovacic_exclusions(Rational(1, 3))));
    CHECK(j.at("alpha") == "1/3");
    CHECK(j.at("e_infinity") == "-2");
    REQUIRE(j.at("candidates").size() == 3);
    CHECK(j.at("case2_excluded") == true);
    CHECK(j.at("order_at_infinity") == -2);
    CHECK(j.at("case3_excluded") == true);
}
