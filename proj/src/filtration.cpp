#include "ainfty/filtration.hpp"

#include <algorithm>

namespace af {

WeightVector word_weight(const Category& C, const Word& w) {
    WeightVector v(C.stops.size(), 0);
    for (GenId g : w)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += C.gens[g].weights[i];
    return v;
}

WeightVector chain_max_weight(const Category& C, const Chain& c) {
    WeightVector v(C.stops.size(), 0);
    for (GenId g : c)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], C.gens[g].weights[i]);
    return v;
}

Report verify_filtration_subadditivity(const Category& C, std::size_t max_d) {
    Report rep;
    (void)max_d;  // every entry is checked; arity is bounded by the stored mu
    for (const auto& [w, out] : C.mu) {
        WeightVector bound = word_weight(C, w);
        for (GenId t : out)
            for (std::size_t i = 0; i < bound.size(); ++i)
                if (C.gens[t].weights[i] > bound[i]) {
                    rep.add(word_str(C, w),
                            "output " + C.gens[t].name + " exceeds input weight at stop " +
                                C.stops[i]);
                    break;
                }
    }
    return rep;
}

Category zero_filtered_subcategory(const Category& C,
                                   const std::vector<std::string>& kept_stops) {
    std::vector<std::size_t> kept_idx;
    for (const std::string& s : kept_stops) {
        auto it = std::find(C.stops.begin(), C.stops.end(), s);
        if (it == C.stops.end()) throw af_error("MalformedInput", "unknown stop " + s);
        kept_idx.push_back((std::size_t)(it - C.stops.begin()));
    }
    auto kept_gen = [&](GenId g) {
        for (std::size_t i : kept_idx)
            if (C.gens[g].weights[i] != 0) return false;
        return true;
    };

    Category out;
    out.objects = C.objects;
    out.stops = C.stops;
    out.max_arity = C.max_arity;
    out.arity_waiver = C.arity_waiver;
    std::vector<GenId> remap(C.gens.size(), (GenId)-1);
    for (GenId g = 0; g < C.gens.size(); ++g)
        if (kept_gen(g)) {
            remap[g] = (GenId)out.gens.size();
            out.gens.push_back(C.gens[g]);
        }
    for (const auto& [w, ch] : C.mu) {
        bool all_in = std::all_of(w.begin(), w.end(), [&](GenId g) { return kept_gen(g); });
        if (!all_in) continue;
        Word w2;
        for (GenId g : w) w2.push_back(remap[g]);
        Chain c2;
        for (GenId t : ch) {
            if (!kept_gen(t))
                throw af_error("SubadditivityViolated",
                               "restriction not closed at " + word_str(C, w));
            chain_toggle(c2, remap[t]);
        }
        out.mu.emplace(std::move(w2), std::move(c2));
    }
    for (const auto& [L, e] : C.units)
        if (kept_gen(e)) out.units[L] = remap[e];
    out.reindex();
    return out;
}

} // namespace af
