#pragma once
#include "ainfty/category.hpp"
#include "ainfty/complex.hpp"

namespace af {

/* Hochschild words are stored like mu-words (composition order); the cyclic
 * condition closes the loop: target(w.back()) == source(w.front()).  The
 * distinguished entry gamma_d of the conventional notation is w.back(). */

bool cyclic_composable(const Category& C, const Word& w);
int hochschild_degree(const Category& C, const Word& w);  // sum deg + 1 - d

void for_each_cyclic_word(const Category& C, std::size_t d,
                          const std::function<void(const Word&)>& fn);

/* the cyclic bar differential: wraparound blocks through w.back() plus
 * interior contractions; never lengthens a word */
std::vector<Word> hochschild_differential(const Category& C, const Word& w);

/* Truncated Hochschild complex: words of length <= max_length + 1 are kept so
 * boundaries falling into the core (length <= max_length) are seen. */
class HochschildComplex {
public:
    HochschildComplex(const Category& C, std::size_t max_length);

    const std::vector<Word>& words() const { return words_; }
    std::size_t index_of(const Word& w) const;  // throws if absent
    bool has(const Word& w) const { return index_.count(w) != 0; }
    std::size_t core_length() const { return max_length_; }
    const BasisComplex& complex() const { return bc_; }
    SVec diff(std::size_t item) const;

    /* homology of the core truncation, boundaries drawn from one length
     * beyond; throws DifferentialNotSquareZero */
    std::map<int, std::size_t> truncated_homology(DegreeWindow win) const;

private:
    const Category& C_;
    std::size_t max_length_;
    std::vector<Word> words_;
    std::map<Word, std::size_t> index_;
    BasisComplex bc_;
};

/* per-degree dims with stability flags from comparing max_length-1 against
 * max_length */
std::vector<DimEntry> hochschild_homology(const Category& C, std::size_t max_length,
                                          DegreeWindow win);

/* ---- shifted action ----------------------------------------------------- */

struct ShiftedActionValue {
    bool neg_inf = true;  // value of the empty chain
    std::size_t d = 0;    // word length
    Rational s;           // sum of (A(gamma_i) + 8 eps); value is e^(d-1) * s
    std::string str() const;
};

/* three-way comparison of e^(d-1)*s values; equal-length comparisons are
 * exact rational, mixed lengths go through a guarded log comparison */
int compare_action(const ShiftedActionValue& a, const ShiftedActionValue& b);

ShiftedActionValue shifted_action_word(const Category& C, const Word& w,
                                       const Rational& eps);
ShiftedActionValue shifted_action_chain(const Category& C, const std::vector<Word>& terms,
                                        const Rational& eps);

/* every delta(w) term must have strictly smaller shifted action than w */
Report verify_action_filtration(const Category& C, const Rational& eps,
                                std::size_t max_length);

/* minimal shifted action over the coset of `cycle` under boundaries from
 * length <= k+1, restricted to length <= k representatives.
 * Throws NotACycle / NotRepresentableAtLengthK. */
ShiftedActionValue length_k_class_action(const Category& C, const std::vector<Word>& cycle,
                                         std::size_t k, const Rational& eps);

/* brute-force oracle; throws if the coset dimension exceeds max_dim */
ShiftedActionValue length_k_class_action_exhaustive(const Category& C,
                                                    const std::vector<Word>& cycle,
                                                    std::size_t k, const Rational& eps,
                                                    std::size_t max_dim = 20);

} // namespace af
