#include "ainfty/quotient.hpp"

namespace af {

QuotientCategory build_quotient(const Category& A, const std::vector<ObjId>& B,
                                std::size_t max_word_length) {
    QuotientCategory Q;
    Q.base = &A;
    Q.subcat = B;
    Q.max_word_length = max_word_length;
    std::vector<bool> inB(A.objects.size(), false);
    for (ObjId o : B) {
        if (o >= A.objects.size())
            throw af_error("MalformedInput", "subcategory object out of range");
        inB[o] = true;
    }

    Category& C = Q.cat;
    C.objects = A.objects;
    C.stops = A.stops;
    C.max_arity = A.max_arity;
    /* bar words carry negative degrees that defeat the loader's degree count,
     * but the collapsed operations provably respect the arity bound; A/{} has
     * no such words and keeps A's own flag for byte identity */
    C.arity_waiver = A.arity_waiver || !B.empty();
    C.units = A.units;  // length-0 words keep their base ids (added first)

    auto add_word = [&](const Word& q) {
        Generator g;
        if (q.size() == 1) {
            g = A.gens[q[0]];
        } else {
            g.source = A.gens[q.front()].source;
            g.target = A.gens[q.back()].target;
            g.degree = -(int)(q.size() - 1);
            g.weights.assign(A.stops.size(), 0);
            g.action = Rational(0);
            g.name = "w:";
            for (std::size_t i = q.size(); i-- > 0;) {
                g.name += A.gens[q[i]].name;
                if (i) g.name += "|";
            }
            for (GenId x : q) {
                g.degree += A.gens[x].degree;
                for (std::size_t s = 0; s < g.weights.size(); ++s)
                    g.weights[s] += A.gens[x].weights[s];
                g.action = g.action + A.gens[x].action;
            }
        }
        Q.gen_of[q] = (GenId)C.gens.size();
        Q.entry_of.push_back(q);
        C.gens.push_back(std::move(g));
    };
    for (GenId g = 0; g < A.gens.size(); ++g) add_word({g});
    for (std::size_t k = 1; k <= max_word_length; ++k) {
        Word q;
        std::function<void()> rec = [&]() {
            if (q.size() == k + 1) {
                add_word(q);
                return;
            }
            for (GenId g = 0; g < A.gens.size(); ++g) {
                if (!q.empty() && A.gens[g].source != A.gens[q.back()].target) continue;
                if (q.size() < k && !inB[A.gens[g].target]) continue;
                q.push_back(g);
                rec();
                q.pop_back();
            }
        };
        rec();
    }
    C.reindex();

    /* bar differential: collapse every contiguous block of entries */
    for (GenId qg = 0; qg < C.gens.size(); ++qg) {
        const Word& q = Q.entry_of[qg];
        Chain out;
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = i; j < q.size(); ++j) {
                Word block(q.begin() + i, q.begin() + j + 1);
                for (GenId t : evaluate_mu(A, block)) {
                    Word nq(q.begin(), q.begin() + i);
                    nq.push_back(t);
                    nq.insert(nq.end(), q.begin() + j + 1, q.end());
                    chain_toggle(out, Q.gen_of.at(nq));
                }
            }
        if (!out.empty()) C.mu[{qg}] = std::move(out);
    }

    /* higher operations: one big mu of A eats the top i+1 entries of the
     * first input, all entries of the middle inputs, and the bottom j+1
     * entries of the last input */
    for (std::size_t d = 2; d <= (std::size_t)C.max_arity; ++d)
        for_each_composable_word(C, d, [&](const Word& w) {
            const Word& q1 = Q.entry_of[w.front()];
            const Word& qd = Q.entry_of[w.back()];
            Chain out;
            bool dropped = false;
            for (std::size_t i = 0; i < q1.size(); ++i)
                for (std::size_t j = 0; j < qd.size(); ++j) {
                    Word big(q1.end() - (i + 1), q1.end());
                    for (std::size_t s = 1; s + 1 < w.size(); ++s) {
                        const Word& m = Q.entry_of[w[s]];
                        big.insert(big.end(), m.begin(), m.end());
                    }
                    big.insert(big.end(), qd.begin(), qd.begin() + j + 1);
                    for (GenId t : evaluate_mu(A, big)) {
                        Word nq(q1.begin(), q1.end() - (i + 1));
                        nq.push_back(t);
                        nq.insert(nq.end(), qd.begin() + j + 1, qd.end());
                        if (nq.size() > max_word_length + 1) {
                            dropped = true;
                            continue;
                        }
                        chain_toggle(out, Q.gen_of.at(nq));
                    }
                }
            if (dropped) Q.dropped_inputs.insert(w);
            if (!out.empty()) C.mu[w] = std::move(out);
        });
    return Q;
}

AInftyFunctor canonical_functor(const Category& A, const QuotientCategory& Q) {
    AInftyFunctor F;
    F.source = &A;
    F.target = &Q.cat;
    F.object_map.resize(A.objects.size());
    for (ObjId o = 0; o < A.objects.size(); ++o) F.object_map[o] = o;
    for (GenId g = 0; g < A.gens.size(); ++g) F.components[{g}] = Chain{Q.gen_of.at({g})};
    F.max_arity = 1;
    return F;
}

Report verify_quotient_relations(const QuotientCategory& Q, std::size_t max_d,
                                 std::size_t* skipped) {
    const Category& C = Q.cat;
    Report rep;
    std::size_t skip = 0;
    for (std::size_t d = 1; d <= max_d; ++d)
        for_each_composable_word(C, d, [&](const Word& w) {
            Chain total;
            bool tainted = false;
            for (std::size_t m = 1; m <= d && !tainted; ++m)
                for (std::size_t p = 0; p + m <= d && !tainted; ++p) {
                    Word block(w.begin() + p, w.begin() + p + m);
                    if (Q.dropped_inputs.count(block)) {
                        tainted = true;
                        break;
                    }
                    for (GenId t : evaluate_mu(C, block)) {
                        Word u;
                        u.reserve(d - m + 1);
                        u.insert(u.end(), w.begin(), w.begin() + p);
                        u.push_back(t);
                        u.insert(u.end(), w.begin() + p + m, w.end());
                        if (Q.dropped_inputs.count(u)) {
                            tainted = true;
                            break;
                        }
                        chain_xor(total, evaluate_mu(C, u));
                    }
                }
            if (tainted) {
                ++skip;
                return;
            }
            if (!total.empty())
                rep.add(word_str(C, w), "relation sum = " + chain_str(C, total));
        });
    if (skipped) *skipped = skip;
    return rep;
}

std::map<ObjId, bool> check_contractible_subcategory(const Category& A,
                                                     const std::vector<ObjId>& B) {
    std::map<ObjId, bool> out;
    for (ObjId L : B) {
        GenId e = 0;
        bool found = false;
        auto it = A.units.find(L);
        if (it != A.units.end()) {
            e = it->second;
            found = true;
        } else {
            for (GenId g = 0; g < A.gens.size() && !found; ++g) {
                const Generator& G = A.gens[g];
                if (G.source != L || G.target != L || G.degree != 0) continue;
                if (!evaluate_mu(A, {g}).empty()) continue;
                if (is_homology_unit(A, g, L)) {
                    e = g;
                    found = true;
                }
            }
        }
        if (!found)
            throw af_error("UnitNotFound", "no homology unit for " + A.objects[L]);
        HomBasis hb = hom_basis_complex(A, L, L);
        EchelonBasis bd(hb.bc.dim(0));
        F2Matrix din = hb.bc.d_matrix(-1);
        for (std::size_t j = 0; j < din.cols(); ++j) {
            F2Vector col(din.rows());
            for (std::size_t i = 0; i < din.rows(); ++i) col.set(i, din.get(i, j));
            bd.add(col);
        }
        F2Vector ev = hb.bc.to_vec(0, SVec{hb.pos.at(e)});
        out[L] = bd.contains(ev);  // unit class vanishes <=> contractible
    }
    return out;
}

std::vector<DimEntry> quotient_hom_homology(const QuotientCategory& Q, ObjId X, ObjId Y,
                                            DegreeWindow win) {
    /* rebuild one word length beyond so boundaries falling back into the
     * truncation are seen */
    QuotientCategory Qe = build_quotient(*Q.base, Q.subcat, Q.max_word_length + 1);
    HomBasis hb = hom_basis_complex(Qe.cat, X, Y);
    for (std::size_t i = 0; i < hb.bc.items(); ++i)
        if (!hb.bc.apply_d(hb.bc.apply_d({i})).empty())
            throw af_error("DifferentialNotSquareZero",
                           "bar differential fails to square to zero at " +
                               Qe.cat.gens[hb.items[i]].name);
    auto wlen = [&](std::size_t item) {
        return (long)Qe.entry_of[hb.items[item]].size() - 1;
    };
    long K = (long)Q.max_word_length;
    auto dims_at = [&](long L) {
        std::map<int, std::size_t> dims;
        auto core = [&, L](std::size_t i) { return wlen(i) <= L; };
        auto bsrc = [&, L](std::size_t i) { return wlen(i) <= L + 1; };
        for (int k = win.lo; k <= win.hi; ++k)
            dims[k] = truncated_homology_dim(hb.bc, k, core, bsrc);
        return dims;
    };
    auto cur = dims_at(K);
    auto prev = dims_at(K - 1);
    std::vector<DimEntry> out;
    for (int k = win.lo; k <= win.hi; ++k)
        out.push_back(
            {k, cur[k], cur[k] == prev[k] ? Stability::Stable : Stability::Unstable});
    return out;
}

} // namespace af
