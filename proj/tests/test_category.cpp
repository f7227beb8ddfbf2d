#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/filtration.hpp"
#include "ainfty/fixtures.hpp"

using namespace af;

TEST_CASE("linear quivers pass the core checks") {
    for (std::size_t n = 1; n <= 5; ++n) {
        Category C = linear_quiver_category(n);
        CHECK(verify_ainfty_relations(C, 6).pass());
        CHECK(verify_degree_convention(C).pass());
        CHECK(verify_filtration_subadditivity(C, 4).pass());
    }
}

TEST_CASE("quiver composition law") {
    Category C = linear_quiver_category(4);
    Word w{C.gen("p0_1"), C.gen("p1_2")};  // internal order: p0_1 applied first
    CHECK(evaluate_mu(C, w) == Chain{C.gen("p0_2")});
    CHECK(evaluate_mu(C, {C.gen("p0_2"), C.gen("p2_3")}) == Chain{C.gen("p0_3")});
    CHECK(evaluate_mu(C, {C.gen("e0"), C.gen("p0_3")}) == Chain{C.gen("p0_3")});
    // non-composable word is rejected in strict mode
    CHECK_THROWS_WITH_AS(evaluate_mu(C, {C.gen("p1_2"), C.gen("p0_1")}, true),
                         doctest::Contains("NotComposable"), af_error);
}

TEST_CASE("unit category homology and homology units") {
    Category C = linear_quiver_category(1);
    auto h = hom_homology(C, 0, 0, {-2, 1});
    CHECK(h[0] == 1);
    CHECK(h[-1] == 0);
    CHECK(h[-2] == 0);
    CHECK(h[1] == 0);
    CHECK(is_homology_unit(C, C.gen("e0"), 0));
}

TEST_CASE("a corrupted unit composition breaks exactly one relation word") {
    Category C = linear_quiver_category(3);
    C.mu.erase({C.gen("e1"), C.gen("p1_2")});
    Report rep = verify_ainfty_relations(C, 6);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].location ==
          word_str(C, {C.gen("p0_1"), C.gen("e1"), C.gen("p1_2")}));
}

TEST_CASE("degree-illegal gauge data is rejected") {
    Category C = linear_quiver_category(3);
    GaugeFamily g;
    g.components[{C.gen("p0_1"), C.gen("p1_2")}] = {C.gen("p0_2")};  // degree 0, needs -1
    g.max_arity = 2;
    CHECK_THROWS_WITH_AS(gauge_transform(C, g, 4), doctest::Contains("DegreeMismatch"),
                         af_error);
}

TEST_CASE("gauge fixtures have genuine higher operations and pass the suite") {
    for (int which = 1; which <= 3; ++which) {
        CAPTURE(which);
        GaugeFixture fx = gauge_fixture(which);
        CHECK(verify_ainfty_relations(fx.base, 6).pass());
        CHECK(verify_ainfty_relations(fx.twisted, 6).pass());
        CHECK(verify_degree_convention(fx.twisted).pass());
        bool higher = false;
        for (const auto& [w, c] : fx.twisted.mu)
            if (w.size() >= 3 && !c.empty()) higher = true;
        CHECK(higher);
    }
}

TEST_CASE("gauge inverse undoes the twist") {
    for (int which = 1; which <= 3; ++which) {
        CAPTURE(which);
        GaugeFixture fx = gauge_fixture(which);
        GaugeFamily ginv = gauge_inverse(fx.base, fx.g, 6);
        Category back = gauge_transform(fx.twisted, ginv, 4);
        for (std::size_t d = 1; d <= 4; ++d)
            for_each_composable_word(fx.base, d, [&](const Word& w) {
                CHECK(evaluate_mu(back, w) == evaluate_mu(fx.base, w));
            });
    }
}

TEST_CASE("gauge transform twice composes") {
    // mu' of the twist equals mu on words without gauge support when g has a
    // single component that cannot nest into itself
    GaugeFixture fx = gauge_fixture(2);
    const Category& T = fx.twisted;
    // the twisted category must differ from the base somewhere
    CHECK(T.mu != fx.base.mu);
}
