#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ainfty/f2.hpp"
#include "ainfty/rational.hpp"
#include "ainfty/report.hpp"

namespace af {

using ObjId = uint32_t;
using GenId = uint32_t;

/* Words are stored in composition order: w[0] is the first morphism applied,
 * so target(w[i]) == source(w[i+1]).  The conventional notation
 * mu^d(g_d, ..., g_1) corresponds to the reversed list; JSON files use the
 * conventional order and the loader reverses. */
using Word = std::vector<GenId>;

/* A chain is a sorted, deduplicated set of generator ids (GF(2) sum). */
using Chain = std::vector<GenId>;

void chain_toggle(Chain& c, GenId g);          // xor a single generator
void chain_xor(Chain& c, const Chain& other);  // xor a whole chain

struct Generator {
    std::string name;
    ObjId source = 0, target = 0;
    int degree = 0;
    std::vector<int> weights;  // one entry per stop label
    Rational action;           // input data for the action filtration
};

struct Category {
    std::vector<std::string> objects;
    std::vector<std::string> stops;
    std::vector<Generator> gens;
    std::map<Word, Chain> mu;  // internal-order word -> chain; no zero entries
    int max_arity = 2;
    std::map<ObjId, GenId> units;  // optional strict units
    bool arity_waiver = false;     // loader flag: trust max_arity despite degree counts

    std::unordered_map<std::string, GenId> gen_index;
    std::unordered_map<std::string, ObjId> obj_index;
    std::vector<std::vector<GenId>> outgoing;  // per object: gens with that source

    void reindex();  // rebuild the lookup tables after editing gens/objects
    GenId gen(const std::string& name) const;
    ObjId obj(const std::string& name) const;

    bool composable(const Word& w) const;
    ObjId word_source(const Word& w) const { return gens[w.front()].source; }
    ObjId word_target(const Word& w) const { return gens[w.back()].target; }
    int word_degree_sum(const Word& w) const;
};

/* mu^d applied to a composable word (internal order).  Arities beyond
 * max_arity give the zero chain; strict mode turns that into ArityExceeded. */
Chain evaluate_mu(const Category& C, const Word& w, bool strict = false);

/* multilinear extension: one chain per input slot, internal order */
Chain evaluate_mu_chains(const Category& C, const std::vector<Chain>& slots,
                         bool strict = false);

/* enumerate all composable words of length exactly d */
void for_each_composable_word(const Category& C, std::size_t d,
                              const std::function<void(const Word&)>& fn);

std::string word_str(const Category& C, const Word& w);   // "(g1,g2,...)" internal order
std::string chain_str(const Category& C, const Chain& c);

Report verify_ainfty_relations(const Category& C, std::size_t max_d);
Report verify_degree_convention(const Category& C);

struct DegreeWindow {
    int lo = 0, hi = 0;
};

/* H^k(hom(X,Y), mu^1) for k in the window; throws DifferentialNotSquareZero */
std::map<int, std::size_t> hom_homology(const Category& C, ObjId X, ObjId Y,
                                        DegreeWindow win);

/* checks that [mu^2(-,e)] and [mu^2(e,-)] act as the identity on homology
 * of every hom space touching L; throws NotACycle when mu^1 e != 0 */
bool is_homology_unit(const Category& C, GenId e, ObjId L);

/* Gauge data: words (internal order) -> chains, g^1 = id implicit. */
struct GaugeFamily {
    std::map<Word, Chain> components;  // arity >= 2 entries only
    int max_arity = 1;                 // declared bound (g^d = 0 beyond it)

    Chain apply(const Category& C, const Word& w) const;  // includes g^1 = id
};

/* Conjugate the bar coderivation by the coalgebra automorphism of g.
 * result_arity bounds the arities for which structure constants are computed
 * (and becomes the result's max_arity).  Throws DegreeMismatch. */
Category gauge_transform(const Category& C, const GaugeFamily& g, int result_arity);

/* Degree-wise inverse of the automorphism induced by g, up to result_arity. */
GaugeFamily gauge_inverse(const Category& C, const GaugeFamily& g, int result_arity);

/* mu^d of a formal sum of bar words, projected to word length 1: used by the
 * gauge machinery and exposed for tests */
using BarElement = std::map<Word, bool>;  // word -> present (GF(2)); no false entries
void bar_xor(BarElement& a, const Word& w);

} // namespace af
