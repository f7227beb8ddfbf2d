#include "ainfty/complex.hpp"

#include <algorithm>

namespace af {

void svec_toggle(SVec& v, std::size_t i) {
    auto it = std::lower_bound(v.begin(), v.end(), i);
    if (it != v.end() && *it == i) v.erase(it);
    else v.insert(it, i);
}

void svec_xor(SVec& a, const SVec& b) {
    for (std::size_t i : b) svec_toggle(a, i);
}

const std::vector<std::size_t> BasisComplex::empty_;

BasisComplex::BasisComplex(std::vector<int> degrees, std::function<SVec(std::size_t)> diff)
    : degrees_(std::move(degrees)), diff_(std::move(diff)), pos_(degrees_.size()) {
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        auto& v = by_degree_[degrees_[i]];
        pos_[i] = v.size();
        v.push_back(i);
    }
}

std::size_t BasisComplex::dim(int k) const {
    auto it = by_degree_.find(k);
    return it == by_degree_.end() ? 0 : it->second.size();
}

const std::vector<std::size_t>& BasisComplex::basis(int k) const {
    auto it = by_degree_.find(k);
    return it == by_degree_.end() ? empty_ : it->second;
}

F2Vector BasisComplex::to_vec(int k, const SVec& v) const {
    F2Vector out(dim(k));
    for (std::size_t item : v) {
        if (degrees_[item] != k)
            throw af_error("DifferentialNotSquareZero",
                           "differential output leaves the expected degree");
        out.flip(pos_[item]);
    }
    return out;
}

F2Matrix BasisComplex::d_matrix(int k) const {
    const auto& bas = basis(k);
    F2Matrix M(dim(k + 1), bas.size());
    for (std::size_t j = 0; j < bas.size(); ++j) {
        F2Vector col = to_vec(k + 1, diff_(bas[j]));
        for (std::size_t i = 0; i < col.size(); ++i)
            if (col.get(i)) M.set(i, j, true);
    }
    return M;
}

std::map<int, std::size_t> BasisComplex::homology(DegreeWindow win) const {
    std::map<int, std::size_t> out;
    for (int k = win.lo; k <= win.hi; ++k)
        out[k] = homology_dimension(d_matrix(k - 1), d_matrix(k));
    return out;
}

SVec BasisComplex::apply_d(const SVec& v) const {
    SVec out;
    for (std::size_t i : v) svec_xor(out, diff_(i));
    return out;
}

std::size_t truncated_homology_dim(const BasisComplex& bc, int k,
                                   const std::function<bool(std::size_t)>& core,
                                   const std::function<bool(std::size_t)>& bsource) {
    const auto& bas = bc.basis(k);
    F2Matrix dk = bc.d_matrix(k);
    /* cycle space restricted to core columns */
    std::vector<std::size_t> core_cols;
    for (std::size_t j = 0; j < bas.size(); ++j)
        if (core(bas[j])) core_cols.push_back(j);
    F2Matrix dk_core(dk.rows(), core_cols.size());
    for (std::size_t j = 0; j < core_cols.size(); ++j)
        for (std::size_t i = 0; i < dk.rows(); ++i)
            if (dk.get(i, core_cols[j])) dk_core.set(i, j, true);
    std::size_t z = core_cols.size() - rank(dk_core);

    /* boundaries from the allowed sources that land inside the core:
     * rank(d) - rank(projection-off-core . d) */
    const auto& below = bc.basis(k - 1);
    F2Matrix dprev = bc.d_matrix(k - 1);
    std::vector<std::size_t> src_cols;
    for (std::size_t j = 0; j < below.size(); ++j)
        if (bsource(below[j])) src_cols.push_back(j);
    std::vector<std::size_t> ext_rows;
    for (std::size_t i = 0; i < bas.size(); ++i)
        if (!core(bas[i])) ext_rows.push_back(i);
    F2Matrix dsrc(dprev.rows(), src_cols.size());
    F2Matrix pd(ext_rows.size(), src_cols.size());
    for (std::size_t j = 0; j < src_cols.size(); ++j)
        for (std::size_t i = 0; i < dprev.rows(); ++i)
            if (dprev.get(i, src_cols[j])) dsrc.set(i, j, true);
    for (std::size_t j = 0; j < src_cols.size(); ++j)
        for (std::size_t i = 0; i < ext_rows.size(); ++i)
            if (dprev.get(ext_rows[i], src_cols[j])) pd.set(i, j, true);
    std::size_t b = rank(dsrc) - rank(pd);
    return z - b;
}

bool induces_homology_iso(const BasisComplex& src, const BasisComplex& tgt,
                          const std::function<SVec(std::size_t)>& f, DegreeWindow win,
                          std::string* why) {
    for (int k = win.lo; k <= win.hi; ++k) {
        std::size_t hs = homology_dimension(src.d_matrix(k - 1), src.d_matrix(k));
        std::size_t ht = homology_dimension(tgt.d_matrix(k - 1), tgt.d_matrix(k));
        if (hs != ht) {
            if (why)
                *why = "dimension mismatch in degree " + std::to_string(k) + ": " +
                       std::to_string(hs) + " vs " + std::to_string(ht);
            return false;
        }
        /* injectivity: image of cycle basis stays independent mod target
         * boundaries */
        EchelonBasis span(tgt.dim(k));
        F2Matrix din = tgt.d_matrix(k - 1);
        for (std::size_t j = 0; j < din.cols(); ++j) {
            F2Vector col(din.rows());
            for (std::size_t i = 0; i < din.rows(); ++i) col.set(i, din.get(i, j));
            span.add(col);
        }
        std::size_t added = 0;
        const auto& bas = src.basis(k);
        for (const F2Vector& z : kernel_basis(src.d_matrix(k))) {
            SVec img;
            for (std::size_t j = 0; j < bas.size(); ++j)
                if (z.get(j)) svec_xor(img, f(bas[j]));
            if (span.add(tgt.to_vec(k, img))) ++added;
        }
        /* added counts the rank of the induced map */
        if (added != hs) {
            if (why)
                *why = "induced map not injective in degree " + std::to_string(k);
            return false;
        }
    }
    return true;
}

HomBasis hom_basis_complex(const Category& C, ObjId X, ObjId Y) {
    HomBasis hb{{}, {}, BasisComplex({}, {})};
    for (GenId g = 0; g < C.gens.size(); ++g)
        if (C.gens[g].source == X && C.gens[g].target == Y) {
            hb.pos[g] = hb.items.size();
            hb.items.push_back(g);
        }
    std::vector<int> degs;
    for (GenId g : hb.items) degs.push_back(C.gens[g].degree);
    /* the diff lambda must not dangle: copy what it needs */
    auto items = hb.items;
    auto pos = hb.pos;
    const Category* Cp = &C;
    hb.bc = BasisComplex(std::move(degs), [items, pos, Cp](std::size_t i) {
        SVec out;
        for (GenId t : evaluate_mu(*Cp, {items[i]})) svec_toggle(out, pos.at(t));
        return out;
    });
    return hb;
}

Report verify_chain_map(const BasisComplex& src, const BasisComplex& tgt,
                        const std::function<SVec(std::size_t)>& f,
                        const std::function<std::string(std::size_t)>& name) {
    Report rep;
    for (std::size_t i = 0; i < src.items(); ++i) {
        SVec lhs = tgt.apply_d(f(i));
        SVec rhs;
        for (std::size_t j : src.apply_d({i})) svec_xor(rhs, f(j));
        if (lhs != rhs) rep.add(name(i), "f(dx) != d(f x)");
    }
    return rep;
}

} // namespace af
