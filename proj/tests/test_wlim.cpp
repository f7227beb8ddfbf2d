#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainfty/fixtures.hpp"
#include "ainfty/wlim.hpp"

using namespace af;

TEST_CASE("wlim categories satisfy the relations") {
    for (const Category& C : {linear_quiver_category(3), gauge_fixture(2).twisted}) {
        WlimCategory W = build_wlim(C, 4);
        CHECK(W.cat.gens.size() == C.gens.size() * 7);  // x@1..3, h@1..3, t
        CHECK(verify_ainfty_relations(W.cat, 4).pass());
        CHECK(verify_degree_convention(W.cat).pass());
    }
    CHECK_THROWS_WITH_AS(build_wlim(linear_quiver_category(2), 0),
                         doctest::Contains("MalformedInput"), af_error);
}

TEST_CASE("strict inclusion is a functor and a homology isomorphism") {
    for (const Category& C : {linear_quiver_category(3), gauge_fixture(1).twisted,
                              gauge_fixture(2).twisted}) {
        WlimCategory W = build_wlim(C, 4);
        AInftyFunctor F = strict_inclusion(C, W);
        CHECK(verify_functor_equations(F, 4).pass());
        for (ObjId X = 0; X < C.objects.size(); ++X)
            for (ObjId Y = 0; Y < C.objects.size(); ++Y) {
                HomBasis src = hom_basis_complex(C, X, Y);
                HomBasis tgt = hom_basis_complex(W.cat, X, Y);
                if (src.items.empty() && tgt.items.empty()) continue;
                bool iso = induces_homology_iso(
                    src.bc, tgt.bc,
                    [&](std::size_t i) { return tgt.to_svec(W.inclusion[src.items[i]]); },
                    {-4, 3});
                CHECK(iso);
            }
    }
}

TEST_CASE("the limit differential telescopes") {
    Category C = linear_quiver_category(2);
    WlimCategory W = build_wlim(C, 3);
    GenId p = C.gen("p0_1");
    // mu^1(x:p@1) = h:p@1, mu^1(x:p@2) = h:p@1 + h:p@2, mu^1(t:p) = h:p@2
    Chain incl = W.inclusion[p];
    Chain d;
    for (GenId g : incl) chain_xor(d, evaluate_mu(W.cat, {g}));
    CHECK(d.empty());  // the constant sequence is a cycle
    CHECK(evaluate_mu(W.cat, {W.cat.gen("x:p0_1@1")}) == Chain{W.cat.gen("h:p0_1@1")});
}

TEST_CASE("finite intersection drops positive-weight tails only") {
    DiskModel m = disk_model_s2();
    Category C = disk_with_stops_category(m);
    WlimCategory W = build_wlim(C, 3);
    Category S = finite_intersection_sub_wlim(C, W);
    std::size_t zero_weight = 0;
    for (const auto& g : C.gens)
        if (g.weights == std::vector<int>{0, 0}) ++zero_weight;
    // every x/h generator survives; t survives only at weight zero
    CHECK(S.gens.size() == C.gens.size() * 4 + zero_weight);
    CHECK(verify_ainfty_relations(S, 4).pass());
    for (const auto& g : S.gens)
        if (g.name[0] == 't') {
            GenId base = C.gen(g.name.substr(2));
            CHECK(C.gens[base].weights == std::vector<int>{0, 0});
        }
}
