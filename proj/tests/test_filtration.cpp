#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/filtration.hpp"
#include "ainfty/fixtures.hpp"

using namespace af;

TEST_CASE("word and chain weights") {
    Category C = disk_with_stops_category(disk_model_s2());
    GenId f30 = C.gen("f3_0_0"), f12 = C.gen("f1_2_0");
    CHECK(word_weight(C, {f12, f30}) == WeightVector{1, 1});
    CHECK(chain_max_weight(C, {f30, f12}) == WeightVector{1, 1});
    CHECK(chain_max_weight(C, {}) == WeightVector(2, 0));
}

TEST_CASE("subadditivity violations are located precisely") {
    Category C = linear_quiver_category(3);
    C.stops = {"s"};
    for (auto& g : C.gens) g.weights = {0};
    C.gens[C.gen("p0_2")].weights = {1};  // output of mu^2(p1_2, p0_1) jumps weight
    C.reindex();
    Report rep = verify_filtration_subadditivity(C, 4);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].location == word_str(C, {C.gen("p0_1"), C.gen("p1_2")}));
    CHECK(verify_filtration_subadditivity(linear_quiver_category(4), 4).pass());
}

TEST_CASE("zero filtered subcategory of a disk keeps stop-free paths") {
    DiskModel m = disk_model_s2();
    Category C = disk_with_stops_category(m);
    Category Z = zero_filtered_subcategory(C, {"s0", "s1"});
    for (const auto& g : Z.gens) CHECK(g.weights == std::vector<int>{0, 0});
    CHECK(Z.stops == std::vector<std::string>{"s0", "s1"});
    CHECK(verify_ainfty_relations(Z, 6).pass());
    // keeping only s1 readmits the paths that cross s0
    Category P = zero_filtered_subcategory(C, {"s1"});
    CHECK(P.gens.size() > Z.gens.size());
    for (const auto& g : P.gens) CHECK(g.weights[1] == 0);
    CHECK(P.stops == C.stops);  // labels survive so weights stay comparable
    CHECK(verify_ainfty_relations(P, 6).pass());
    CHECK_THROWS_WITH_AS(zero_filtered_subcategory(C, {"bogus"}),
                         doctest::Contains("MalformedInput"), af_error);
}

TEST_CASE("a non-closed restriction is rejected") {
    // mu^2(b, a) = c where c gains weight: dropping the stop strands c outside
    Category C;
    C.objects = {"X", "Y", "Z"};
    C.stops = {"s"};
    auto add = [&](const std::string& n, ObjId s, ObjId t, std::vector<int> w) {
        Generator g;
        g.name = n;
        g.source = s;
        g.target = t;
        g.weights = std::move(w);
        C.gens.push_back(std::move(g));
    };
    add("a", 0, 1, {0});
    add("b", 1, 2, {0});
    add("c", 0, 2, {1});
    C.reindex();
    C.mu[{0, 1}] = {2};
    REQUIRE(!verify_filtration_subadditivity(C, 3).pass());
    CHECK_THROWS_WITH_AS(zero_filtered_subcategory(C, {"s"}),
                         doctest::Contains("SubadditivityViolated"), af_error);
}
