#pragma once
#include <set>

#include "ainfty/complex.hpp"
#include "ainfty/functor.hpp"

namespace af {

/* Drinfeld-type quotient A/B.  A quotient generator is a composable list of
 * base generators gamma^0,...,gamma^k (stored internal order, gamma^0 first)
 * whose intermediate objects all lie in B; its word length is k.  Length-0
 * words keep the base generator's name and id, so A/{} reproduces A exactly.
 * Longer words are named w:<gamma^k>|...|<gamma^0> (conventional order). */
struct QuotientCategory {
    Category cat;
    const Category* base = nullptr;
    std::vector<ObjId> subcat;        // base object ids forming B
    std::size_t max_word_length = 0;  // bound on k
    std::vector<Word> entry_of;       // per quotient gen: its base-entry list
    std::map<Word, GenId> gen_of;     // entry list -> quotient gen
    /* mu inputs whose output had terms beyond the truncation (dropped) */
    std::set<Word> dropped_inputs;
};

QuotientCategory build_quotient(const Category& A, const std::vector<ObjId>& B,
                                std::size_t max_word_length);

/* strict inclusion of length-0 words */
AInftyFunctor canonical_functor(const Category& A, const QuotientCategory& Q);

/* A-infinity relations, skipping words whose relation sum touches a dropped
 * (truncated) mu entry; such words are only counted */
Report verify_quotient_relations(const QuotientCategory& Q, std::size_t max_d,
                                 std::size_t* skipped = nullptr);

/* per object of B: does the homology unit class vanish in H^0(hom(L,L))?
 * Throws UnitNotFound when no (strict or homology) unit can be identified. */
std::map<ObjId, bool> check_contractible_subcategory(const Category& A,
                                                     const std::vector<ObjId>& B);

/* H*(hom_{A/B}(X,Y)) under word-length truncation at Q.max_word_length, with
 * boundaries drawn from one word length beyond; stability compares against
 * the previous truncation level */
std::vector<DimEntry> quotient_hom_homology(const QuotientCategory& Q, ObjId X, ObjId Y,
                                            DegreeWindow win);

} // namespace af
