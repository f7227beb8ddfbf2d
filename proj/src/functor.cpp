#include "ainfty/functor.hpp"

namespace af {

Chain AInftyFunctor::apply(const Word& w) const {
    if (w.empty() || (int)w.size() > max_arity) return {};
    auto it = components.find(w);
    return it == components.end() ? Chain{} : it->second;
}

AInftyFunctor AInftyFunctor::identity(const Category& C) {
    AInftyFunctor F;
    F.source = &C;
    F.target = &C;
    F.object_map.resize(C.objects.size());
    for (ObjId o = 0; o < C.objects.size(); ++o) F.object_map[o] = o;
    for (GenId g = 0; g < C.gens.size(); ++g) F.components[{g}] = Chain{g};
    F.max_arity = 1;
    return F;
}

AInftyFunctor gauge_functor(const Category& C, const Category& twisted,
                            const GaugeFamily& g, int max_arity) {
    AInftyFunctor F;
    F.source = &C;
    F.target = &twisted;
    F.object_map.resize(C.objects.size());
    for (ObjId o = 0; o < C.objects.size(); ++o) F.object_map[o] = o;
    for (GenId x = 0; x < C.gens.size(); ++x) F.components[{x}] = Chain{x};
    for (const auto& [w, out] : g.components)
        if ((int)w.size() <= max_arity && !out.empty()) F.components[w] = out;
    F.max_arity = max_arity;
    return F;
}

void validate_functor(const AInftyFunctor& F) {
    const Category& S = *F.source;
    const Category& T = *F.target;
    if (F.object_map.size() != S.objects.size())
        throw af_error("MalformedInput", "object map size mismatch");
    for (const auto& [w, out] : F.components) {
        if (!S.composable(w))
            throw af_error("NotComposable", "functor component word " + word_str(S, w));
        int expect = S.word_degree_sum(w) + 1 - (int)w.size();
        ObjId src = F.object_map[S.word_source(w)];
        ObjId tgt = F.object_map[S.word_target(w)];
        for (GenId t : out) {
            if (T.gens[t].degree != expect)
                throw af_error("DegreeMismatch",
                               "component at " + word_str(S, w) + " outputs " +
                                   T.gens[t].name + " of degree " +
                                   std::to_string(T.gens[t].degree) + ", expected " +
                                   std::to_string(expect));
            if (T.gens[t].source != src || T.gens[t].target != tgt)
                throw af_error("NotComposable",
                               "component endpoints mismatch at " + word_str(S, w));
        }
    }
}

static void for_each_partition(std::size_t d,
                               const std::function<void(const std::vector<std::size_t>&)>& fn) {
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

/* sum of both sides of the functor equation at one word */
static Chain functor_equation_sum(const AInftyFunctor& F, const Word& w) {
    const Category& S = *F.source;
    const Category& T = *F.target;
    std::size_t d = w.size();
    Chain total;
    /* F(... mu_source ...) terms */
    for (std::size_t m = 1; m <= d; ++m)
        for (std::size_t p = 0; p + m <= d; ++p) {
            Word block(w.begin() + p, w.begin() + p + m);
            for (GenId t : evaluate_mu(S, block)) {
                Word u;
                u.reserve(d - m + 1);
                u.insert(u.end(), w.begin(), w.begin() + p);
                u.push_back(t);
                u.insert(u.end(), w.begin() + p + m, w.end());
                chain_xor(total, F.apply(u));
            }
        }
    /* mu_target(F-blocks) terms */
    for_each_partition(d, [&](const std::vector<std::size_t>& sizes) {
        std::vector<Chain> slots;
        std::size_t at = 0;
        for (std::size_t s : sizes) {
            Word block(w.begin() + at, w.begin() + at + s);
            at += s;
            Chain c = F.apply(block);
            if (c.empty()) { slots.clear(); return; }
            slots.push_back(std::move(c));
        }
        chain_xor(total, evaluate_mu_chains(T, slots));
    });
    return total;
}

Report verify_functor_equations(const AInftyFunctor& F, std::size_t max_d) {
    validate_functor(F);
    Report rep;
    for (std::size_t d = 1; d <= max_d; ++d)
        for_each_composable_word(*F.source, d, [&](const Word& w) {
            Chain total = functor_equation_sum(F, w);
            if (!total.empty())
                rep.add(word_str(*F.source, w),
                        "functor equation sum = " + chain_str(*F.target, total));
        });
    return rep;
}

AInftyFunctor compose_functors(const AInftyFunctor& G, const AInftyFunctor& F,
                               int result_arity) {
    if (F.target != G.source)
        throw af_error("SourceTargetMismatch", "compose_functors: F.target != G.source");
    AInftyFunctor H;
    H.source = F.source;
    H.target = G.target;
    H.object_map.resize(F.object_map.size());
    for (std::size_t o = 0; o < F.object_map.size(); ++o)
        H.object_map[o] = G.object_map[F.object_map[o]];
    H.max_arity = result_arity;
    for (int d = 1; d <= result_arity; ++d)
        for_each_composable_word(*F.source, (std::size_t)d, [&](const Word& w) {
            Chain acc;
            for_each_partition(w.size(), [&](const std::vector<std::size_t>& sizes) {
                std::vector<Chain> blocks;
                std::size_t at = 0;
                for (std::size_t s : sizes) {
                    Word b(w.begin() + at, w.begin() + at + s);
                    at += s;
                    Chain c = F.apply(b);
                    if (c.empty()) { blocks.clear(); return; }
                    blocks.push_back(std::move(c));
                }
                Word v(blocks.size());
                std::vector<std::size_t> idx(blocks.size(), 0);
                for (;;) {
                    for (std::size_t i = 0; i < blocks.size(); ++i) v[i] = blocks[i][idx[i]];
                    chain_xor(acc, G.apply(v));
                    std::size_t i = 0;
                    while (i < blocks.size() && ++idx[i] == blocks[i].size()) idx[i++] = 0;
                    if (i == blocks.size()) break;
                }
            });
            if (!acc.empty()) H.components[w] = std::move(acc);
        });
    return H;
}

Chain PreNaturalTransformation::apply(const Word& w) const {
    if (w.empty() || (int)w.size() > max_arity) return {};
    auto it = components.find(w);
    return it == components.end() ? Chain{} : it->second;
}

Report verify_homotopy(const PreNaturalTransformation& T, std::size_t max_d) {
    const AInftyFunctor& Fa = *T.from;
    const AInftyFunctor& Fb = *T.to;
    if (Fa.source != Fb.source || Fa.target != Fb.target)
        throw af_error("SourceTargetMismatch", "homotopy between incompatible functors");
    const Category& S = *Fa.source;
    const Category& Tc = *Fa.target;
    /* degree law: components of T^d drop degree by d */
    for (const auto& [w, out] : T.components) {
        int expect = S.word_degree_sum(w) - (int)w.size();
        for (GenId t : out)
            if (Tc.gens[t].degree != expect)
                throw af_error("DegreeMismatch", "homotopy component at " + word_str(S, w));
    }
    Report rep;
    for (std::size_t d = 1; d <= max_d; ++d)
        for_each_composable_word(S, d, [&](const Word& w) {
            Chain total = Fb.apply(w);
            chain_xor(total, Fa.apply(w));
            /* T(... mu_source ...) */
            for (std::size_t m = 1; m <= d; ++m)
                for (std::size_t p = 0; p + m <= d; ++p) {
                    Word block(w.begin() + p, w.begin() + p + m);
                    for (GenId t : evaluate_mu(S, block)) {
                        Word u;
                        u.reserve(d - m + 1);
                        u.insert(u.end(), w.begin(), w.begin() + p);
                        u.push_back(t);
                        u.insert(u.end(), w.begin() + p + m, w.end());
                        chain_xor(total, T.apply(u));
                    }
                }
            /* mu_target(F_alpha blocks below, T block, F_beta blocks above) */
            for_each_partition(d, [&](const std::vector<std::size_t>& sizes) {
                std::size_t k = sizes.size();
                for (std::size_t r = 0; r < k; ++r) {
                    std::vector<Chain> slots;
                    std::size_t at = 0;
                    bool dead = false;
                    for (std::size_t b = 0; b < k; ++b) {
                        Word block(w.begin() + at, w.begin() + at + sizes[b]);
                        at += sizes[b];
                        Chain c = b < r    ? Fa.apply(block)
                                  : b == r ? T.apply(block)
                                           : Fb.apply(block);
                        if (c.empty()) { dead = true; break; }
                        slots.push_back(std::move(c));
                    }
                    if (!dead) chain_xor(total, evaluate_mu_chains(Tc, slots));
                }
            });
            if (!total.empty())
                rep.add(word_str(S, w), "homotopy equation sum = " + chain_str(Tc, total));
        });
    return rep;
}

SVec induced_map_on_hochschild(const AInftyFunctor& F, const HochschildComplex& src,
                               const HochschildComplex& tgt, std::size_t item) {
    const Word& w = src.words()[item];
    std::size_t d = w.size();
    BarElement acc;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; i + j + 1 <= d; ++j) {
            /* seam block through the distinguished entry */
            Word seam;
            seam.reserve(i + j + 1);
            seam.insert(seam.end(), w.begin() + (d - 1 - j), w.end());
            seam.insert(seam.end(), w.begin(), w.begin() + i);
            Chain fs = F.apply(seam);
            if (fs.empty()) continue;
            Word middle(w.begin() + i, w.begin() + (d - 1 - j));
            for_each_partition(middle.size(), [&](const std::vector<std::size_t>& sizes) {
                std::vector<Chain> blocks;
                std::size_t at = 0;
                for (std::size_t s : sizes) {
                    Word b(middle.begin() + at, middle.begin() + at + s);
                    at += s;
                    Chain c = F.apply(b);
                    if (c.empty()) { blocks.clear(); return; }
                    blocks.push_back(std::move(c));
                }
                blocks.push_back(fs);  // seam image is the new distinguished entry
                Word v(blocks.size());
                std::vector<std::size_t> idx(blocks.size(), 0);
                for (;;) {
                    for (std::size_t b = 0; b < blocks.size(); ++b) v[b] = blocks[b][idx[b]];
                    bar_xor(acc, v);
                    std::size_t b = 0;
                    while (b < blocks.size() && ++idx[b] == blocks[b].size()) idx[b++] = 0;
                    if (b == blocks.size()) break;
                }
            });
        }
    SVec out;
    for (const auto& [v, on] : acc) {
        (void)on;
        svec_toggle(out, tgt.index_of(v));
    }
    return out;
}

} // namespace af
