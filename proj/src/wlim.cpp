#include "ainfty/wlim.hpp"

#include <algorithm>

namespace af {

WlimCategory build_wlim(const Category& C, std::size_t N) {
    if (N < 1) throw af_error("MalformedInput", "stabilization_bound < 1");
    WlimCategory W;
    W.N = N;
    Category& L = W.cat;
    L.objects = C.objects;
    L.stops = C.stops;
    L.max_arity = C.max_arity;
    L.arity_waiver = true;  // constructed, not loaded; bound inherited from C

    /* generator layout: per base gen g, x:g@1..N-1, h:g@1..N-1, t:g */
    std::map<std::pair<char, std::pair<GenId, std::size_t>>, GenId> id_of;
    auto add_gen = [&](char kind, GenId base, std::size_t slot) {
        Generator g = C.gens[base];
        g.name = std::string(1, kind) + ":" + C.gens[base].name +
                 (kind == 't' ? "" : "@" + std::to_string(slot));
        if (kind == 'h') g.degree += 1;
        id_of[{kind, {base, slot}}] = (GenId)L.gens.size();
        W.info.push_back({kind, base, slot});
        L.gens.push_back(std::move(g));
    };
    for (GenId g = 0; g < C.gens.size(); ++g) {
        for (std::size_t n = 1; n < N; ++n) add_gen('x', g, n);
        for (std::size_t n = 1; n < N; ++n) add_gen('h', g, n);
        add_gen('t', g, 0);
    }
    L.reindex();

    auto xid = [&](GenId b, std::size_t n) { return id_of.at({'x', {b, n}}); };
    auto hid = [&](GenId b, std::size_t n) { return id_of.at({'h', {b, n}}); };
    auto tid = [&](GenId b) { return id_of.at({'t', {b, 0}}); };

    /* gamma^m of a basis generator, with slot N standing for "n >= N" */
    auto gamma_at = [&](GenId wg, std::size_t m) -> std::optional<GenId> {
        const auto& inf = W.info[wg];
        if (inf.kind == 'x') return m == inf.slot ? std::optional<GenId>(inf.base)
                                                  : std::nullopt;
        if (inf.kind == 't') return m >= N ? std::optional<GenId>(inf.base) : std::nullopt;
        return std::nullopt;
    };

    /* mu^1 */
    for (GenId wg = 0; wg < L.gens.size(); ++wg) {
        const auto& inf = W.info[wg];
        Chain dbase = evaluate_mu(C, {inf.base});
        Chain out;
        if (inf.kind == 'x') {
            for (GenId t : dbase) chain_toggle(out, xid(t, inf.slot));
            chain_toggle(out, hid(inf.base, inf.slot));
            if (inf.slot >= 2) chain_toggle(out, hid(inf.base, inf.slot - 1));
        } else if (inf.kind == 'h') {
            for (GenId t : dbase) chain_toggle(out, hid(t, inf.slot));
        } else {
            for (GenId t : dbase) chain_toggle(out, tid(t));
            if (N >= 2) chain_toggle(out, hid(inf.base, N - 1));
        }
        if (!out.empty()) L.mu[{wg}] = std::move(out);
    }

    /* higher mu, slot by slot */
    for (std::size_t d = 2; d <= (std::size_t)C.max_arity; ++d) {
        for_each_composable_word(L, d, [&](const Word& w) {
            Chain out;
            Word base(d);
            for (std::size_t m = 1; m <= N; ++m) {
                /* first component at slot m */
                bool ok = true;
                for (std::size_t i = 0; i < d && ok; ++i) {
                    auto g = gamma_at(w[i], m);
                    if (!g) ok = false;
                    else base[i] = *g;
                }
                if (ok)
                    for (GenId t : evaluate_mu(C, base))
                        chain_toggle(out, m < N ? xid(t, m) : tid(t));
                /* second component at slot m: one eta insertion */
                for (std::size_t i = 0; i < d; ++i) {
                    const auto& inf = W.info[w[i]];
                    if (inf.kind != 'h' || inf.slot != m) continue;
                    bool good = true;
                    for (std::size_t p = 0; p < d && good; ++p) {
                        if (p == i) { base[p] = inf.base; continue; }
                        auto g = gamma_at(w[p], p < i ? m : m + 1);
                        if (!g) good = false;
                        else base[p] = *g;
                    }
                    if (good)
                        for (GenId t : evaluate_mu(C, base)) {
                            if (m >= N)
                                throw af_error("Internal",
                                               "eta term escaped the stabilization bound");
                            chain_toggle(out, hid(t, m));
                        }
                }
            }
            if (!out.empty()) L.mu[w] = std::move(out);
        });
    }

    W.inclusion.resize(C.gens.size());
    for (GenId g = 0; g < C.gens.size(); ++g) {
        Chain c{tid(g)};
        for (std::size_t n = 1; n < N; ++n) chain_toggle(c, xid(g, n));
        W.inclusion[g] = std::move(c);
    }
    return W;
}

AInftyFunctor strict_inclusion(const Category& C, const WlimCategory& W) {
    AInftyFunctor F;
    F.source = &C;
    F.target = &W.cat;
    F.object_map.resize(C.objects.size());
    for (ObjId o = 0; o < C.objects.size(); ++o) F.object_map[o] = o;
    for (GenId g = 0; g < C.gens.size(); ++g) F.components[{g}] = W.inclusion[g];
    F.max_arity = 1;
    return F;
}

Category finite_intersection_sub_wlim(const Category& C, const WlimCategory& W) {
    const Category& L = W.cat;
    auto kept = [&](GenId wg) {
        const auto& inf = W.info[wg];
        if (inf.kind != 't') return true;
        for (int x : C.gens[inf.base].weights)
            if (x != 0) return false;
        return true;
    };
    Category out;
    out.objects = L.objects;
    out.stops = L.stops;
    out.max_arity = L.max_arity;
    out.arity_waiver = true;
    std::vector<GenId> remap(L.gens.size(), (GenId)-1);
    for (GenId g = 0; g < L.gens.size(); ++g)
        if (kept(g)) {
            remap[g] = (GenId)out.gens.size();
            out.gens.push_back(L.gens[g]);
        }
    for (const auto& [w, ch] : L.mu) {
        if (!std::all_of(w.begin(), w.end(), kept)) continue;
        Word w2;
        for (GenId g : w) w2.push_back(remap[g]);
        Chain c2;
        for (GenId t : ch) {
            if (!kept(t))
                throw af_error("SubadditivityViolated",
                               "finite-intersection restriction not closed at " +
                                   word_str(L, w));
            chain_toggle(c2, remap[t]);
        }
        out.mu.emplace(std::move(w2), std::move(c2));
    }
    out.reindex();
    return out;
}

} // namespace af
