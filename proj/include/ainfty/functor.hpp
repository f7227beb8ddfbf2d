#pragma once
#include "ainfty/category.hpp"
#include "ainfty/hochschild.hpp"

namespace af {

struct AInftyFunctor {
    const Category* source = nullptr;
    const Category* target = nullptr;
    std::vector<ObjId> object_map;     // indexed by source object id
    std::map<Word, Chain> components;  // all arities, including F^1; missing = 0
    int max_arity = 1;

    Chain apply(const Word& w) const;  // F^{|w|}(w)

    static AInftyFunctor identity(const Category& C);
};

/* the strict functor F^d = g^d from C to gauge_transform(C, g) */
AInftyFunctor gauge_functor(const Category& C, const Category& twisted,
                            const GaugeFamily& g, int max_arity);

/* degree/endpoint sanity for the stored components; DegreeMismatch on error */
void validate_functor(const AInftyFunctor& F);

Report verify_functor_equations(const AInftyFunctor& F, std::size_t max_d);

AInftyFunctor compose_functors(const AInftyFunctor& G, const AInftyFunctor& F,
                               int result_arity);

struct PreNaturalTransformation {
    const AInftyFunctor* from = nullptr;  // F_alpha
    const AInftyFunctor* to = nullptr;    // F_beta
    std::map<Word, Chain> components;     // T^d, degree sum - d
    int max_arity = 1;

    Chain apply(const Word& w) const;
};

Report verify_homotopy(const PreNaturalTransformation& T, std::size_t max_d);

/* chain map CC(source) -> CC(target) induced by F; both complexes truncated
 * at the given maximal word length */
SVec induced_map_on_hochschild(const AInftyFunctor& F, const HochschildComplex& src,
                               const HochschildComplex& tgt, std::size_t item);

} // namespace af
