#pragma once
#include "ainfty/quotient.hpp"

namespace af {

/* lexicographic pair (total stop weight at sigma, word length k); the order
 * type is omega^2, so strict descent terminates */
struct MainWeight {
    int n = 0;  // sum of the entries' sigma-weights
    int k = 0;  // word length
    bool operator==(const MainWeight& o) const { return n == o.n && k == o.k; }
    bool operator<(const MainWeight& o) const {
        return n != o.n ? n < o.n : k < o.k;
    }
    std::string str() const {
        return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    }
};

MainWeight main_weight(const QuotientCategory& Q, GenId g, std::size_t sigma);
/* max over terms; the empty chain reports (0,0) */
MainWeight chain_main_weight(const QuotientCategory& Q, const Chain& c, std::size_t sigma);

/* degree -1 map on quotient homs, generator by generator (missing = 0) */
struct RetractionHomotopy {
    std::map<GenId, Chain> delta;
    Chain apply(const Chain& x) const;
};

/* parse a delta file: JSON list of {"input": name, "outputs": [names]};
 * output degrees must sit one below the input (DegreeMismatch) */
RetractionHomotopy parse_delta(const std::string& text, const Category& C);
RetractionHomotopy load_delta_file(const std::string& path, const Category& C);

/* R(x) = x + mu^1(Delta x) + Delta(mu^1 x) */
Chain basic_retraction(const Category& C, const RetractionHomotopy& D, const Chain& x);

/* condition (1): R fixes weight-(0,0) generators (and Delta vanishes there);
 * condition (2): every term of R(gamma) sits strictly below gamma's weight */
Report verify_retraction_hypotheses(const QuotientCategory& Q, const RetractionHomotopy& D,
                                    std::size_t sigma, const std::vector<GenId>& basis);

struct RetractIterate {
    Chain result;
    std::size_t iterations = 0;
    Chain witness;        // h(x) = sum_m Delta(R^m x)
    Chain witness_on_dx;  // h(mu^1 x); then x + result = mu^1(witness) + witness_on_dx
};

/* apply R until fixed; throws NonTerminating if the orbit outlives the
 * (finite) set of main weights present in Q */
RetractIterate iterate_retraction(const QuotientCategory& Q, const RetractionHomotopy& D,
                                  std::size_t sigma, const Chain& x);

struct DeformationReport {
    std::size_t n = 0;  // R^n is constant on the subcomplex
    Report report;      // per-basis-element chain-homotopy identity check
};

/* C must span a mu^1-closed subspace of generators (NotASubcomplex); finds n
 * with R^n stationary on C and verifies gamma + R^n gamma =
 * mu^1 h(gamma) + h(mu^1 gamma) with the telescoped witness h */
DeformationReport verify_compact_deformation_property(const QuotientCategory& Q,
                                                      const RetractionHomotopy& D,
                                                      std::size_t sigma,
                                                      const std::vector<GenId>& basis);

/* Solve for a Delta on the given basis (one hom space, mu^1-closed) making
 * R = id + mu^1 Delta + Delta mu^1 strictly weight-dropping: for every
 * positive-weight gamma, the components of R(gamma) at weights >= the weight
 * of gamma must vanish.  Linear system over GF(2); throws NoSolution. */
RetractionHomotopy derive_weight_dropping_delta(const QuotientCategory& Q,
                                                std::size_t sigma,
                                                const std::vector<GenId>& basis);

} // namespace af
