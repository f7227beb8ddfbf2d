#include "ainfty/category.hpp"

#include <algorithm>

namespace af {

void chain_toggle(Chain& c, GenId g) {
    auto it = std::lower_bound(c.begin(), c.end(), g);
    if (it != c.end() && *it == g) c.erase(it);
    else c.insert(it, g);
}

void chain_xor(Chain& c, const Chain& other) {
    for (GenId g : other) chain_toggle(c, g);
}

void bar_xor(BarElement& a, const Word& w) {
    auto it = a.find(w);
    if (it != a.end()) a.erase(it);
    else a.emplace(w, true);
}

void Category::reindex() {
    gen_index.clear();
    obj_index.clear();
    outgoing.assign(objects.size(), {});
    for (ObjId i = 0; i < objects.size(); ++i) obj_index[objects[i]] = i;
    for (GenId i = 0; i < gens.size(); ++i) {
        gen_index[gens[i].name] = i;
        outgoing[gens[i].source].push_back(i);
    }
}

GenId Category::gen(const std::string& name) const {
    auto it = gen_index.find(name);
    if (it == gen_index.end()) throw af_error("UnknownGenerator", name);
    return it->second;
}

ObjId Category::obj(const std::string& name) const {
    auto it = obj_index.find(name);
    if (it == obj_index.end()) throw af_error("UnknownObject", name);
    return it->second;
}

bool Category::composable(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (gens[w[i]].target != gens[w[i + 1]].source) return false;
    return true;
}

int Category::word_degree_sum(const Word& w) const {
    int s = 0;
    for (GenId g : w) s += gens[g].degree;
    return s;
}

Chain evaluate_mu(const Category& C, const Word& w, bool strict) {
    if (w.empty() || !C.composable(w))
        throw af_error("NotComposable", "bad word " + word_str(C, w));
    if ((int)w.size() > C.max_arity) {
        if (strict)
            throw af_error("ArityExceeded", "word length " + std::to_string(w.size()) +
                                                " > max_arity " + std::to_string(C.max_arity));
        return {};
    }
    auto it = C.mu.find(w);
    return it == C.mu.end() ? Chain{} : it->second;
}

Chain evaluate_mu_chains(const Category& C, const std::vector<Chain>& slots, bool strict) {
    for (const Chain& c : slots)
        if (c.empty()) return {};
    Chain out;
    Word w(slots.size());
    std::vector<std::size_t> idx(slots.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < slots.size(); ++i) w[i] = slots[i][idx[i]];
        chain_xor(out, evaluate_mu(C, w, strict));
        std::size_t i = 0;
        while (i < slots.size() && ++idx[i] == slots[i].size()) idx[i++] = 0;
        if (i == slots.size()) break;
    }
    return out;
}

static void extend_word(const Category& C, Word& w, std::size_t d,
                        const std::function<void(const Word&)>& fn) {
    if (w.size() == d) { fn(w); return; }
    for (GenId g : C.outgoing[C.gens[w.back()].target]) {
        w.push_back(g);
        extend_word(C, w, d, fn);
        w.pop_back();
    }
}

void for_each_composable_word(const Category& C, std::size_t d,
                              const std::function<void(const Word&)>& fn) {
    if (d == 0) return;
    Word w;
    w.reserve(d);
    for (GenId g = 0; g < C.gens.size(); ++g) {
        w.push_back(g);
        extend_word(C, w, d, fn);
        w.pop_back();
    }
}

std::string word_str(const Category& C, const Word& w) {
    std::string s = "(";
    /* print in the conventional order (last applied first) */
    for (std::size_t i = w.size(); i-- > 0;) {
        s += C.gens[w[i]].name;
        if (i) s += ",";
    }
    return s + ")";
}

std::string chain_str(const Category& C, const Chain& c) {
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += "+";
        s += C.gens[c[i]].name;
    }
    return s;
}

/* sum of the A-infinity relation terms for one word */
static Chain relation_sum(const Category& C, const Word& w) {
    Chain total;
    std::size_t d = w.size();
    for (std::size_t m = 1; m <= d; ++m) {
        for (std::size_t p = 0; p + m <= d; ++p) {
            Word inner_w(w.begin() + p, w.begin() + p + m);
            Chain inner = evaluate_mu(C, inner_w);
            if (inner.empty()) continue;
            std::vector<Chain> slots;
            slots.reserve(d - m + 1);
            for (std::size_t i = 0; i < p; ++i) slots.push_back({w[i]});
            slots.push_back(inner);
            for (std::size_t i = p + m; i < d; ++i) slots.push_back({w[i]});
            chain_xor(total, evaluate_mu_chains(C, slots));
        }
    }
    return total;
}

Report verify_ainfty_relations(const Category& C, std::size_t max_d) {
    Report rep;
    /* a relation term pairs an inner mu^m with an outer mu^{d-m+1}; if M is
     * the largest arity actually present, every term vanishes for d > 2M-1 */
    std::size_t m_eff = 0;
    for (const auto& [w, c] : C.mu) {
        (void)c;
        m_eff = std::max(m_eff, w.size());
    }
    max_d = std::min(max_d, m_eff == 0 ? std::size_t(0) : 2 * m_eff - 1);
    for (std::size_t d = 1; d <= max_d; ++d) {
        for_each_composable_word(C, d, [&](const Word& w) {
            Chain total = relation_sum(C, w);
            if (!total.empty())
                rep.add(word_str(C, w), "relation sum = " + chain_str(C, total));
        });
    }
    return rep;
}

Report verify_degree_convention(const Category& C) {
    Report rep;
    for (const auto& [w, out] : C.mu) {
        int expect = C.word_degree_sum(w) + 2 - (int)w.size();
        for (GenId g : out)
            if (C.gens[g].degree != expect)
                rep.add(word_str(C, w), "output " + C.gens[g].name + " has degree " +
                                            std::to_string(C.gens[g].degree) + ", expected " +
                                            std::to_string(expect));
    }
    return rep;
}

/* graded basis of hom(X,Y) plus mu^1 matrices; shared by homology and units */
namespace {

struct HomComplex {
    std::map<int, std::vector<GenId>> basis;       // degree -> generators
    std::map<int, std::map<GenId, std::size_t>> pos;

    static HomComplex build(const Category& C, ObjId X, ObjId Y) {
        HomComplex hc;
        for (GenId g = 0; g < C.gens.size(); ++g)
            if (C.gens[g].source == X && C.gens[g].target == Y) {
                auto& v = hc.basis[C.gens[g].degree];
                hc.pos[C.gens[g].degree][g] = v.size();
                v.push_back(g);
            }
        return hc;
    }

    std::size_t dim(int k) const {
        auto it = basis.find(k);
        return it == basis.end() ? 0 : it->second.size();
    }

    F2Vector to_vec(int k, const Chain& c) const {
        F2Vector v(dim(k));
        auto it = pos.find(k);
        for (GenId g : c) {
            if (it == pos.end() || !it->second.count(g))
                throw af_error("DifferentialNotSquareZero",
                               "mu^1 output leaves the expected degree");
            v.flip(it->second.at(g));
        }
        return v;
    }

    /* matrix of mu^1: degree k -> k+1 */
    F2Matrix d_matrix(const Category& C, int k) const {
        F2Matrix M(dim(k + 1), dim(k));
        auto it = basis.find(k);
        if (it == basis.end()) return M;
        for (std::size_t j = 0; j < it->second.size(); ++j) {
            Chain dc = evaluate_mu(C, {it->second[j]});
            F2Vector col = to_vec(k + 1, dc);
            for (std::size_t i = 0; i < col.size(); ++i)
                if (col.get(i)) M.set(i, j, true);
        }
        return M;
    }
};

} // namespace

std::map<int, std::size_t> hom_homology(const Category& C, ObjId X, ObjId Y,
                                        DegreeWindow win) {
    HomComplex hc = HomComplex::build(C, X, Y);
    std::map<int, std::size_t> out;
    for (int k = win.lo; k <= win.hi; ++k) {
        F2Matrix din = hc.d_matrix(C, k - 1);
        F2Matrix dout = hc.d_matrix(C, k);
        out[k] = homology_dimension(din, dout);
    }
    return out;
}

static bool acts_as_identity_on_homology(const Category& C, const HomComplex& hc,
                                         const std::function<Chain(GenId)>& m) {
    for (const auto& [k, bas] : hc.basis) {
        F2Matrix dout = hc.d_matrix(C, k);
        F2Matrix din = hc.d_matrix(C, k - 1);
        EchelonBasis boundaries(bas.size());
        for (std::size_t j = 0; j < din.cols(); ++j) {
            F2Vector col(din.rows());
            for (std::size_t i = 0; i < din.rows(); ++i) col.set(i, din.get(i, j));
            boundaries.add(col);
        }
        for (const F2Vector& z : kernel_basis(dout)) {
            /* m(z) + z must be a boundary */
            Chain img;
            for (std::size_t j = 0; j < bas.size(); ++j)
                if (z.get(j)) chain_xor(img, m(bas[j]));
            F2Vector v = hc.to_vec(k, img);
            v.xor_with(z);
            if (!boundaries.contains(v)) return false;
        }
    }
    return true;
}

bool is_homology_unit(const Category& C, GenId e, ObjId L) {
    const Generator& ge = C.gens[e];
    if (ge.source != L || ge.target != L || ge.degree != 0)
        throw af_error("NotACycle", "candidate unit is not a degree-0 endomorphism");
    if (!evaluate_mu(C, {e}).empty())
        throw af_error("NotACycle", "mu^1 of candidate unit is nonzero");
    for (ObjId Y = 0; Y < C.objects.size(); ++Y) {
        HomComplex from = HomComplex::build(C, L, Y);
        if (!acts_as_identity_on_homology(C, from, [&](GenId g) {
                return evaluate_mu(C, Word{e, g});  // gamma o e
            }))
            return false;
        HomComplex into = HomComplex::build(C, Y, L);
        if (!acts_as_identity_on_homology(C, into, [&](GenId g) {
                return evaluate_mu(C, Word{g, e});  // e o gamma
            }))
            return false;
    }
    return true;
}

/* ---- gauge machinery ---------------------------------------------------- */

Chain GaugeFamily::apply(const Category&, const Word& w) const {
    if (w.size() == 1) return {w[0]};
    if ((int)w.size() > max_arity) return {};
    auto it = components.find(w);
    return it == components.end() ? Chain{} : it->second;
}

static void check_gauge_degrees(const Category& C, const GaugeFamily& g) {
    for (const auto& [w, out] : g.components) {
        if (w.size() < 2) throw af_error("DegreeMismatch", "gauge component of arity < 2");
        if (!C.composable(w)) throw af_error("NotComposable", "gauge word " + word_str(C, w));
        int expect = C.word_degree_sum(w) + 1 - (int)w.size();
        for (GenId t : out) {
            if (C.gens[t].degree != expect)
                throw af_error("DegreeMismatch",
                               "gauge output " + C.gens[t].name + " at " + word_str(C, w) +
                                   " has degree " + std::to_string(C.gens[t].degree) +
                                   ", expected " + std::to_string(expect));
            if (C.gens[t].source != C.word_source(w) || C.gens[t].target != C.word_target(w))
                throw af_error("NotComposable",
                               "gauge output endpoints mismatch at " + word_str(C, w));
        }
    }
}

/* enumerate compositions of w into consecutive blocks; fn gets block bounds */
static void for_each_partition(std::size_t d,
                               const std::function<void(const std::vector<std::size_t>&)>& fn) {
    /* cuts: sorted positions 0 < c_1 < ... < c_{k-1} < d; encode block sizes */
    std::vector<std::size_t> sizes;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (left == 0) { fn(sizes); return; }
        for (std::size_t s = 1; s <= left; ++s) {
            sizes.push_back(s);
            rec(left - s);
            sizes.pop_back();
        }
    };
    rec(d);
}

/* full coalgebra map induced by a component family phi (phi^1 = id):
 * w -> sum over partitions of tensor products of phi(block) */
static BarElement coalg_map(const Category& C, const GaugeFamily& phi, const Word& w) {
    BarElement out;
    for_each_partition(w.size(), [&](const std::vector<std::size_t>& sizes) {
        std::vector<Chain> blocks;
        std::size_t at = 0;
        for (std::size_t s : sizes) {
            Word b(w.begin() + at, w.begin() + at + s);
            at += s;
            Chain c = phi.apply(C, b);
            if (c.empty()) return;  // this partition contributes nothing
            blocks.push_back(std::move(c));
        }
        /* cartesian expansion into words of length = number of blocks */
        Word v(blocks.size());
        std::vector<std::size_t> idx(blocks.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < blocks.size(); ++i) v[i] = blocks[i][idx[i]];
            bar_xor(out, v);
            std::size_t i = 0;
            while (i < blocks.size() && ++idx[i] == blocks[i].size()) idx[i++] = 0;
            if (i == blocks.size()) break;
        }
    });
    return out;
}

GaugeFamily gauge_inverse(const Category& C, const GaugeFamily& g, int result_arity) {
    check_gauge_degrees(C, g);
    GaugeFamily inv;
    inv.max_arity = result_arity;
    for (int d = 2; d <= result_arity; ++d) {
        for_each_composable_word(C, (std::size_t)d, [&](const Word& w) {
            /* gbar^d(w) = sum over partitions into k >= 2 blocks of
             * g^k(expansion of gbar(blocks)); known recursively since blocks
             * are shorter than d */
            Chain acc;
            for_each_partition(w.size(), [&](const std::vector<std::size_t>& sizes) {
                if (sizes.size() < 2) return;
                std::vector<Chain> blocks;
                std::size_t at = 0;
                for (std::size_t s : sizes) {
                    Word b(w.begin() + at, w.begin() + at + s);
                    at += s;
                    Chain c = inv.apply(C, b);
                    if (c.empty()) { blocks.clear(); return; }
                    blocks.push_back(std::move(c));
                }
                Word v(blocks.size());
                std::vector<std::size_t> idx(blocks.size(), 0);
                for (;;) {
                    for (std::size_t i = 0; i < blocks.size(); ++i) v[i] = blocks[i][idx[i]];
                    chain_xor(acc, g.apply(C, v));
                    std::size_t i = 0;
                    while (i < blocks.size() && ++idx[i] == blocks[i].size()) idx[i++] = 0;
                    if (i == blocks.size()) break;
                }
            });
            if (!acc.empty()) inv.components[w] = std::move(acc);
        });
    }
    return inv;
}

Category gauge_transform(const Category& C, const GaugeFamily& g, int result_arity) {
    check_gauge_degrees(C, g);
    GaugeFamily ginv = gauge_inverse(C, g, result_arity);

    Category out = C;
    out.mu.clear();
    out.max_arity = result_arity;
    for (int d = 1; d <= result_arity; ++d) {
        for_each_composable_word(C, (std::size_t)d, [&](const Word& w) {
            /* mu'(w) = pi_1 of G(b(Gbar(w))) */
            BarElement s = coalg_map(C, ginv, w);
            Chain result;
            for (const auto& [v, present] : s) {
                (void)present;
                std::size_t n = v.size();
                for (std::size_t m = 1; m <= n; ++m) {
                    for (std::size_t p = 0; p + m <= n; ++p) {
                        Word inner_w(v.begin() + p, v.begin() + p + m);
                        Chain inner = evaluate_mu(C, inner_w);
                        if (inner.empty()) continue;
                        /* the coderivation term has length n-m+1; apply the
                         * matching G component to project to length 1 */
                        for (GenId t : inner) {
                            Word u;
                            u.reserve(n - m + 1);
                            u.insert(u.end(), v.begin(), v.begin() + p);
                            u.push_back(t);
                            u.insert(u.end(), v.begin() + p + m, v.end());
                            chain_xor(result, g.apply(C, u));
                        }
                    }
                }
            }
            if (!result.empty()) out.mu[w] = std::move(result);
        });
    }
    out.reindex();
    return out;
}

} // namespace af
