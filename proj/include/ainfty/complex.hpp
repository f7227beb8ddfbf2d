#pragma once
#include <functional>
#include <map>
#include <vector>

#include "ainfty/category.hpp"

namespace af {

/* sparse GF(2) vector over an abstract item basis */
using SVec = std::vector<std::size_t>;  // sorted item indices
void svec_toggle(SVec& v, std::size_t i);
void svec_xor(SVec& a, const SVec& b);

/* A finite cochain complex over an opaque item basis.  Items carry degrees;
 * the differential is supplied per item and must raise degree by 1. */
class BasisComplex {
public:
    BasisComplex(std::vector<int> degrees, std::function<SVec(std::size_t)> diff);

    std::size_t items() const { return degrees_.size(); }
    int degree_of(std::size_t i) const { return degrees_[i]; }
    std::size_t dim(int k) const;
    const std::vector<std::size_t>& basis(int k) const;  // item indices in degree k
    std::size_t pos_in_degree(std::size_t item) const { return pos_[item]; }

    F2Vector to_vec(int k, const SVec& v) const;  // items must all sit in degree k
    F2Matrix d_matrix(int k) const;               // degree k -> k+1

    /* homology dims; throws DifferentialNotSquareZero via homology_dimension */
    std::map<int, std::size_t> homology(DegreeWindow win) const;

    SVec apply_d(const SVec& v) const;

private:
    std::vector<int> degrees_;
    std::function<SVec(std::size_t)> diff_;
    std::map<int, std::vector<std::size_t>> by_degree_;
    std::vector<std::size_t> pos_;
    static const std::vector<std::size_t> empty_;
};

/* Homology of a truncated complex: cycles are drawn from the `core` items,
 * boundaries from differentials of `bsource` items that land inside the core.
 * Lets a length-(L+1) layer feed boundaries into the length-<=L truncation. */
std::size_t truncated_homology_dim(const BasisComplex& bc, int k,
                                   const std::function<bool(std::size_t)>& core,
                                   const std::function<bool(std::size_t)>& bsource);

/* Does the degree-0 chain map induce a homology isomorphism in the window?
 * Checked as dimension equality plus injectivity of the induced map. */
bool induces_homology_iso(const BasisComplex& src, const BasisComplex& tgt,
                          const std::function<SVec(std::size_t)>& f, DegreeWindow win,
                          std::string* why = nullptr);

/* chain-map property f(d x) = d(f x) on every item; violations reported */
Report verify_chain_map(const BasisComplex& src, const BasisComplex& tgt,
                        const std::function<SVec(std::size_t)>& f,
                        const std::function<std::string(std::size_t)>& name);

/* (hom(X,Y), mu^1) of a category as a BasisComplex; items index into gens */
struct HomBasis {
    std::vector<GenId> items;
    std::map<GenId, std::size_t> pos;
    BasisComplex bc;

    SVec to_svec(const Chain& c) const {
        SVec v;
        for (GenId g : c) svec_toggle(v, pos.at(g));
        return v;
    }
};
HomBasis hom_basis_complex(const Category& C, ObjId X, ObjId Y);

} // namespace af
