#include "ainfty/hochschild.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

namespace af {

bool cyclic_composable(const Category& C, const Word& w) {
    return !w.empty() && C.composable(w) &&
           C.gens[w.back()].target == C.gens[w.front()].source;
}

int hochschild_degree(const Category& C, const Word& w) {
    return C.word_degree_sum(w) + 1 - (int)w.size();
}

void for_each_cyclic_word(const Category& C, std::size_t d,
                          const std::function<void(const Word&)>& fn) {
    for_each_composable_word(C, d, [&](const Word& w) {
        if (C.gens[w.back()].target == C.gens[w.front()].source) fn(w);
    });
}

std::vector<Word> hochschild_differential(const Category& C, const Word& w) {
    BarElement acc;
    std::size_t d = w.size();
    /* interior contractions: blocks avoiding the distinguished last entry */
    for (std::size_t m = 1; m + 1 <= d; ++m)
        for (std::size_t p = 0; p + m <= d - 1; ++p) {
            Word block(w.begin() + p, w.begin() + p + m);
            for (GenId t : evaluate_mu(C, block)) {
                Word nw;
                nw.reserve(d - m + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + p);
                nw.push_back(t);
                nw.insert(nw.end(), w.begin() + p + m, w.end());
                bar_xor(acc, nw);
            }
        }
    /* wraparound contractions: block = (w[d-1-j..d-1], w[0..i)); its image
     * becomes the new distinguished entry */
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; i + j < d; ++j) {
            Word block;
            block.reserve(i + j + 1);
            block.insert(block.end(), w.begin() + (d - 1 - j), w.end());
            block.insert(block.end(), w.begin(), w.begin() + i);
            for (GenId t : evaluate_mu(C, block)) {
                Word nw;
                nw.reserve(d - i - j);
                nw.insert(nw.end(), w.begin() + i, w.begin() + (d - 1 - j));
                nw.push_back(t);
                bar_xor(acc, nw);
            }
        }
    std::vector<Word> out;
    for (const auto& [nw, on] : acc) {
        (void)on;
        out.push_back(nw);
    }
    return out;
}

HochschildComplex::HochschildComplex(const Category& C, std::size_t max_length)
    : C_(C), max_length_(max_length),
      bc_([&] {
          for (std::size_t d = 1; d <= max_length + 1; ++d)
              for_each_cyclic_word(C, d, [&](const Word& w) {
                  index_[w] = words_.size();
                  words_.push_back(w);
              });
          std::vector<int> degs;
          degs.reserve(words_.size());
          for (const Word& w : words_) degs.push_back(hochschild_degree(C, w));
          return BasisComplex(std::move(degs), [this](std::size_t i) { return diff(i); });
      }()) {}

std::size_t HochschildComplex::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end())
        throw af_error("NotRepresentableAtLengthK", "word outside the truncation");
    return it->second;
}

SVec HochschildComplex::diff(std::size_t item) const {
    SVec out;
    for (const Word& nw : hochschild_differential(C_, words_[item]))
        svec_toggle(out, index_.at(nw));
    return out;
}

std::map<int, std::size_t> HochschildComplex::truncated_homology(DegreeWindow win) const {
    /* assert d^2 = 0 on the whole stored complex */
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (!bc_.apply_d(bc_.apply_d({i})).empty())
            throw af_error("DifferentialNotSquareZero",
                           "delta^2 != 0 at " + word_str(C_, words_[i]));
    auto core = [this](std::size_t item) { return words_[item].size() <= max_length_; };
    auto all = [](std::size_t) { return true; };
    std::map<int, std::size_t> out;
    for (int k = win.lo; k <= win.hi; ++k)
        out[k] = truncated_homology_dim(bc_, k, core, all);
    return out;
}

std::vector<DimEntry> hochschild_homology(const Category& C, std::size_t max_length,
                                          DegreeWindow win) {
    HochschildComplex cur(C, max_length);
    auto dims = cur.truncated_homology(win);
    std::map<int, std::size_t> prev;
    if (max_length >= 2) {
        HochschildComplex p(C, max_length - 1);
        prev = p.truncated_homology(win);
    } else {
        for (int k = win.lo; k <= win.hi; ++k) prev[k] = 0;
    }
    std::vector<DimEntry> out;
    for (int k = win.lo; k <= win.hi; ++k)
        out.push_back({k, dims[k],
                       dims[k] == prev[k] ? Stability::Stable : Stability::Unstable});
    return out;
}

/* ---- shifted action ----------------------------------------------------- */

std::string ShiftedActionValue::str() const {
    if (neg_inf) return "-inf";
    return "e^" + std::to_string((long long)d - 1) + "*(" + s.str() + ")";
}

ShiftedActionValue shifted_action_word(const Category& C, const Word& w,
                                       const Rational& eps) {
    ShiftedActionValue v;
    v.neg_inf = false;
    v.d = w.size();
    v.s = Rational(0);
    for (GenId g : w) v.s = v.s + C.gens[g].action + Rational(8) * eps;
    return v;
}

static int sign_of(const Rational& r) { return r.num < 0 ? -1 : (r.num > 0 ? 1 : 0); }

/* compare (d1-1)+ln(s1) vs (d2-1)+ln(s2) for positive rationals s1, s2 at
 * 256-bit precision; only reached when long double is inconclusive */
static int mpfr_log_compare(long long dd, const Rational& s1, const Rational& s2) {
    mpfr_t a, b, t;
    mpfr_inits2(256, a, b, t, (mpfr_ptr) nullptr);
    mpfr_set_si(a, s1.num, MPFR_RNDN);
    mpfr_log(a, a, MPFR_RNDN);
    mpfr_set_si(t, s1.den, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_sub(a, a, t, MPFR_RNDN);          // ln s1
    mpfr_add_si(a, a, dd, MPFR_RNDN);      // + (d1 - d2)
    mpfr_set_si(b, s2.num, MPFR_RNDN);
    mpfr_log(b, b, MPFR_RNDN);
    mpfr_set_si(t, s2.den, MPFR_RNDN);
    mpfr_log(t, t, MPFR_RNDN);
    mpfr_sub(b, b, t, MPFR_RNDN);          // ln s2
    int c = mpfr_cmp(a, b);
    mpfr_clears(a, b, t, (mpfr_ptr) nullptr);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int compare_action(const ShiftedActionValue& a, const ShiftedActionValue& b) {
    if (a.neg_inf && b.neg_inf) return 0;
    if (a.neg_inf) return -1;
    if (b.neg_inf) return 1;
    int sa = sign_of(a.s), sb = sign_of(b.s);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    if (a.d == b.d) {
        if (a.s == b.s) return 0;
        return a.s < b.s ? -1 : 1;
    }
    /* same sign, different length: compare magnitudes on the log scale */
    Rational m1 = sa > 0 ? a.s : Rational(-a.s.num, a.s.den);
    Rational m2 = sb > 0 ? b.s : Rational(-b.s.num, b.s.den);
    long double lhs = ((long double)a.d - 1) + logl((long double)m1.num / m1.den);
    long double rhs = ((long double)b.d - 1) + logl((long double)m2.num / m2.den);
    int mag;
    if (lhs < rhs - 1e-12L) mag = -1;
    else if (lhs > rhs + 1e-12L) mag = 1;
    else mag = mpfr_log_compare((long long)a.d - (long long)b.d, m1, m2);
    return sa > 0 ? mag : -mag;
}

ShiftedActionValue shifted_action_chain(const Category& C, const std::vector<Word>& terms,
                                        const Rational& eps) {
    ShiftedActionValue best;  // -inf
    for (const Word& w : terms) {
        ShiftedActionValue v = shifted_action_word(C, w, eps);
        if (compare_action(v, best) > 0) best = v;
    }
    return best;
}

Report verify_action_filtration(const Category& C, const Rational& eps,
                                std::size_t max_length) {
    Report rep;
    for (std::size_t d = 1; d <= max_length; ++d)
        for_each_cyclic_word(C, d, [&](const Word& w) {
            ShiftedActionValue aw = shifted_action_word(C, w, eps);
            for (const Word& t : hochschild_differential(C, w)) {
                ShiftedActionValue at = shifted_action_word(C, t, eps);
                if (compare_action(at, aw) >= 0)
                    rep.add(word_str(C, w), "delta term " + word_str(C, t) +
                                                " has action " + at.str() +
                                                " >= " + aw.str());
            }
        });
    return rep;
}

/* shared setup for the class-action minimizers */
namespace {

struct CosetSetup {
    HochschildComplex hc;
    int deg = 0;
    std::vector<std::size_t> items;       // degree-deg items, full (length <= k+1)
    std::map<std::size_t, std::size_t> item_pos;
    F2Vector c0;                          // representative with no long words
    std::vector<F2Vector> vbasis;         // boundary directions inside length <= k

    CosetSetup(const Category& C, const std::vector<Word>& cycle, std::size_t k,
               const Rational& eps)
        : hc(C, k) {
        if (cycle.empty()) throw af_error("NotACycle", "empty chain has no degree");
        deg = hochschild_degree(C, cycle.front());
        SVec cv;
        for (const Word& w : cycle) {
            if (!cyclic_composable(C, w))
                throw af_error("MalformedInput", "not a cyclic word: " + word_str(C, w));
            if (hochschild_degree(C, w) != deg)
                throw af_error("MalformedInput", "mixed degrees in cycle");
            if (w.size() > k + 1)
                throw af_error("NotRepresentableAtLengthK",
                               "term beyond length k+1: " + word_str(C, w));
            svec_toggle(cv, hc.index_of(w));
        }
        const BasisComplex& bc = hc.complex();
        if (!bc.apply_d(cv).empty()) throw af_error("NotACycle", "delta(cycle) != 0");

        items = bc.basis(deg);
        for (std::size_t i = 0; i < items.size(); ++i) item_pos[items[i]] = i;
        auto is_long = [&](std::size_t item) { return hc.words()[item].size() > k; };

        F2Vector c(items.size());
        for (std::size_t item : cv) c.flip(item_pos.at(item));

        F2Matrix M = bc.d_matrix(deg - 1);
        std::vector<std::size_t> ext_rows;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (is_long(items[i])) ext_rows.push_back(i);
        F2Matrix PM(ext_rows.size(), M.cols());
        for (std::size_t i = 0; i < ext_rows.size(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j)
                if (M.get(ext_rows[i], j)) PM.set(i, j, true);

        /* push the representative into length <= k if needed */
        F2Vector pc(ext_rows.size());
        for (std::size_t i = 0; i < ext_rows.size(); ++i) pc.set(i, c.get(ext_rows[i]));
        if (!pc.is_zero()) {
            F2Vector x;
            if (!solve(PM, pc, x))
                throw af_error("NotRepresentableAtLengthK",
                               "class has no representative of length <= k");
            for (std::size_t j = 0; j < M.cols(); ++j)
                if (x.get(j))
                    for (std::size_t i = 0; i < items.size(); ++i)
                        if (M.get(i, j)) c.flip(i);
        }
        c0 = c;

        for (const F2Vector& x : kernel_basis(PM)) {
            F2Vector img(items.size());
            for (std::size_t j = 0; j < M.cols(); ++j)
                if (x.get(j))
                    for (std::size_t i = 0; i < items.size(); ++i)
                        if (M.get(i, j)) img.flip(i);
            if (!img.is_zero()) vbasis.push_back(img);
        }
        (void)eps;
    }

    std::vector<Word> to_words(const F2Vector& v) const {
        std::vector<Word> out;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (v.get(i)) out.push_back(hc.words()[items[i]]);
        return out;
    }
};

} // namespace

ShiftedActionValue length_k_class_action(const Category& C, const std::vector<Word>& cycle,
                                         std::size_t k, const Rational& eps) {
    CosetSetup cs(C, cycle, k, eps);

    /* coordinate order: shifted action descending, then item index */
    std::vector<std::size_t> order(cs.items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<ShiftedActionValue> act(cs.items.size());
    for (std::size_t i = 0; i < cs.items.size(); ++i)
        act[i] = shifted_action_word(C, cs.hc.words()[cs.items[i]], eps);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = compare_action(act[a], act[b]);
        if (c != 0) return c > 0;
        return a < b;
    });
    auto permute = [&](const F2Vector& v) {
        F2Vector p(v.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            if (v.get(order[i])) p.set(i, true);
        return p;
    };
    auto unpermute = [&](const F2Vector& p) {
        F2Vector v(p.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            if (p.get(i)) v.set(order[i], true);
        return v;
    };

    EchelonBasis eb(cs.items.size());
    for (const F2Vector& v : cs.vbasis) eb.add(permute(v));
    F2Vector rep = permute(cs.c0);
    eb.reduce(rep);
    return shifted_action_chain(C, cs.to_words(unpermute(rep)), eps);
}

ShiftedActionValue length_k_class_action_exhaustive(const Category& C,
                                                    const std::vector<Word>& cycle,
                                                    std::size_t k, const Rational& eps,
                                                    std::size_t max_dim) {
    CosetSetup cs(C, cycle, k, eps);
    EchelonBasis eb(cs.items.size());
    for (const F2Vector& v : cs.vbasis) eb.add(v);
    if (eb.size() > max_dim)
        throw af_error("CosetTooLarge", "coset dimension " + std::to_string(eb.size()));
    ShiftedActionValue best;
    bool have = false;
    for (std::size_t mask = 0; mask < (std::size_t(1) << eb.size()); ++mask) {
        F2Vector v = cs.c0;
        for (std::size_t i = 0; i < eb.size(); ++i)
            if ((mask >> i) & 1) v.xor_with(eb.rows()[i]);
        ShiftedActionValue a = shifted_action_chain(C, cs.to_words(v), eps);
        if (!have || compare_action(a, best) < 0) {
            best = a;
            have = true;
        }
    }
    return best;
}

} // namespace af
