#pragma once
#include "ainfty/functor.hpp"

namespace af {

/* Homotopy-limit category over eventually-constant limit sequences.
 *
 * A hom element of degree k is a sequence ((gamma^n, eta^n))_{n>=1} with
 * gamma^n in hom^k, eta^n in hom^{k-1}, constant with eta = 0 from the
 * stabilization bound N on.  A finite basis:
 *   x:g@n  (gamma^n = g at slot n < N only)          degree deg g
 *   h:g@n  (eta^n = g at slot n < N only)            degree deg g + 1
 *   t:g    (gamma^n = g for all n >= N)              degree deg g
 * mu^1 is the limit differential (d gamma, gamma^n + gamma^{n+1} + d eta);
 * higher mu act slot by slot with one eta insertion in the second component. */
struct WlimCategory {
    Category cat;
    std::size_t N = 1;  // stabilization bound
    struct GenInfo {
        char kind = 'x';  // 'x', 'h', or 't'
        GenId base = 0;
        std::size_t slot = 0;  // unused for 't'
    };
    std::vector<GenInfo> info;      // per wlim generator
    std::vector<Chain> inclusion;   // per base generator: the strict image
};

WlimCategory build_wlim(const Category& C, std::size_t stabilization_bound);

/* gamma -> ((gamma,0),(gamma,0),...) as a strict functor into wlim.cat */
AInftyFunctor strict_inclusion(const Category& C, const WlimCategory& W);

/* sequences whose entries all have stop weight 0 from the stabilization index
 * on: drops positive-weight tails, keeps every x/h generator */
Category finite_intersection_sub_wlim(const Category& C, const WlimCategory& W);

} // namespace af
