#include "ainfty/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

using nlohmann::ordered_json;

namespace af {

static void require_fields(const ordered_json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw af_error("MalformedInput", "unknown field '" + it.key() + "' in " + where);
}

/* does a composable word of length in (max_arity, horizon] hit a degree that
 * exists in its hom space?  t(g) = deg(g) - 1, output degree = sum t + 2 */
bool arity_bound_feasibility(const Category& C) {
    std::size_t nobj = C.objects.size();
    if (C.gens.empty()) return false;
    int tmin = 0, tmax = 0;
    for (const Generator& g : C.gens) {
        tmin = std::min(tmin, g.degree - 1);
        tmax = std::max(tmax, g.degree - 1);
    }
    /* degrees present per hom pair */
    std::map<std::pair<ObjId, ObjId>, std::set<int>> degs;
    for (const Generator& g : C.gens) degs[{g.source, g.target}].insert(g.degree);

    int horizon = C.max_arity + 96;
    long long lo = (long long)horizon * std::min(tmin, 0) - 4;
    long long hi = (long long)horizon * std::max(tmax, 0) + 4;
    std::size_t span = (std::size_t)(hi - lo + 1);

    /* reach[start][end][sum-lo] over words of exact length d */
    auto idx = [&](ObjId a, ObjId b, long long s) {
        return ((std::size_t)a * nobj + b) * span + (std::size_t)(s - lo);
    };
    std::vector<char> cur(nobj * nobj * span, 0), nxt;
    for (const Generator& g : C.gens) cur[idx(g.source, g.target, g.degree - 1)] = 1;

    for (int d = 2; d <= horizon; ++d) {
        nxt.assign(cur.size(), 0);
        for (ObjId a = 0; a < nobj; ++a)
            for (ObjId b = 0; b < nobj; ++b)
                for (long long s = lo; s <= hi; ++s) {
                    if (!cur[idx(a, b, s)]) continue;
                    for (GenId gi : C.outgoing[b]) {
                        const Generator& g = C.gens[gi];
                        long long s2 = s + g.degree - 1;
                        if (s2 < lo || s2 > hi) continue;
                        nxt[idx(a, g.target, s2)] = 1;
                    }
                }
        cur.swap(nxt);
        if (d > C.max_arity) {
            for (const auto& [pair, ds] : degs)
                for (int deg : ds)
                    if ((long long)deg - 2 >= lo && (long long)deg - 2 <= hi &&
                        cur[idx(pair.first, pair.second, deg - 2)])
                        return true;
        }
    }

    /* beyond the horizon: only reachable if some cycle has t-sum >= 0 */
    const long long NEG = -(1LL << 60);
    std::vector<std::vector<long long>> best(nobj, std::vector<long long>(nobj, NEG));
    for (const Generator& g : C.gens)
        best[g.source][g.target] = std::max(best[g.source][g.target], (long long)g.degree - 1);
    auto step = best;
    for (std::size_t k = 2; k <= nobj; ++k) {
        std::vector<std::vector<long long>> next(nobj, std::vector<long long>(nobj, NEG));
        for (ObjId a = 0; a < nobj; ++a)
            for (ObjId b = 0; b < nobj; ++b) {
                if (step[a][b] == NEG) continue;
                for (GenId gi : C.outgoing[b])
                    next[a][C.gens[gi].target] =
                        std::max(next[a][C.gens[gi].target], step[a][b] + C.gens[gi].degree - 1);
            }
        step.swap(next);
        for (ObjId a = 0; a < nobj; ++a)
            if (step[a][a] >= 0) return true;
    }
    for (ObjId a = 0; a < nobj; ++a)
        if (best[a][a] >= 0) return true;
    return false;
}

Category load_category(const ordered_json& j) {
    if (!j.is_object()) throw af_error("MalformedInput", "top level is not an object");
    require_fields(j, {"objects", "stops", "generators", "mu", "max_arity", "units",
                       "arity_waiver"},
                   "category");
    for (const char* f : {"objects", "stops", "generators", "mu", "max_arity"})
        if (!j.contains(f)) throw af_error("MalformedInput", std::string("missing field ") + f);

    Category C;
    for (const auto& o : j.at("objects")) {
        if (!o.is_string()) throw af_error("MalformedInput", "object name is not a string");
        C.objects.push_back(o.get<std::string>());
    }
    {
        std::set<std::string> seen(C.objects.begin(), C.objects.end());
        if (seen.size() != C.objects.size())
            throw af_error("MalformedInput", "duplicate object names");
    }
    for (const auto& s : j.at("stops")) C.stops.push_back(s.get<std::string>());

    C.max_arity = j.at("max_arity").get<int>();
    if (C.max_arity < 1) throw af_error("MalformedInput", "max_arity < 1");
    if (j.contains("arity_waiver")) C.arity_waiver = j.at("arity_waiver").get<bool>();

    std::set<std::string> gen_names;
    std::map<std::string, ObjId> objid;
    for (ObjId i = 0; i < C.objects.size(); ++i) objid[C.objects[i]] = i;
    for (const auto& gj : j.at("generators")) {
        require_fields(gj, {"name", "source", "target", "degree", "weights", "action"},
                       "generator");
        Generator g;
        g.name = gj.at("name").get<std::string>();
        if (!gen_names.insert(g.name).second)
            throw af_error("MalformedInput", "duplicate generator name " + g.name);
        auto src = objid.find(gj.at("source").get<std::string>());
        auto tgt = objid.find(gj.at("target").get<std::string>());
        if (src == objid.end() || tgt == objid.end())
            throw af_error("MalformedInput", "generator " + g.name + " has unknown endpoint");
        g.source = src->second;
        g.target = tgt->second;
        g.degree = gj.at("degree").get<int>();
        for (const auto& w : gj.at("weights")) {
            int v = w.get<int>();
            if (v < 0) throw af_error("MalformedInput", "negative weight on " + g.name);
            g.weights.push_back(v);
        }
        if (g.weights.size() != C.stops.size())
            throw af_error("MalformedInput", "weight vector length mismatch on " + g.name);
        try {
            g.action = Rational::parse(gj.at("action").get<std::string>());
        } catch (const std::exception&) {
            throw af_error("MalformedInput", "bad action on " + g.name);
        }
        C.gens.push_back(std::move(g));
    }
    C.reindex();

    for (const auto& mj : j.at("mu")) {
        require_fields(mj, {"arity", "inputs", "outputs"}, "mu entry");
        std::size_t arity = mj.at("arity").get<std::size_t>();
        Word w;
        for (const auto& n : mj.at("inputs")) w.push_back(C.gen(n.get<std::string>()));
        if (w.size() != arity || arity == 0)
            throw af_error("MalformedInput", "mu entry arity/input mismatch");
        if ((int)arity > C.max_arity)
            throw af_error("MalformedInput", "mu entry beyond max_arity");
        std::reverse(w.begin(), w.end());  // file order is conventional, storage is internal
        if (!C.composable(w))
            throw af_error("MalformedInput", "mu inputs not composable: " + word_str(C, w));
        Chain out;
        for (const auto& n : mj.at("outputs")) {
            GenId t = C.gen(n.get<std::string>());
            if (C.gens[t].source != C.word_source(w) || C.gens[t].target != C.word_target(w))
                throw af_error("MalformedInput",
                               "mu output endpoints mismatch at " + word_str(C, w));
            chain_toggle(out, t);
        }
        if (out.empty()) continue;
        if (!C.mu.emplace(std::move(w), std::move(out)).second)
            throw af_error("MalformedInput", "duplicate mu entry");
    }

    if (j.contains("units")) {
        for (auto it = j.at("units").begin(); it != j.at("units").end(); ++it) {
            ObjId L = C.obj(it.key());
            GenId e = C.gen(it.value().get<std::string>());
            if (C.gens[e].source != L || C.gens[e].target != L || C.gens[e].degree != 0)
                throw af_error("MalformedInput", "unit entry is not a degree-0 endomorphism");
            C.units[L] = e;
        }
    }

    if (!C.arity_waiver && arity_bound_feasibility(C))
        throw af_error("ArityBoundUnsound",
                       "a nonzero mu^d beyond max_arity is degree-feasible; "
                       "pass arity_waiver to accept the declared bound");
    return C;
}

Category load_category_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw af_error("MalformedInput", "cannot open " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw af_error("MalformedInput", std::string("JSON parse error: ") + e.what());
    }
    return load_category(j);
}

ordered_json category_to_json(const Category& C) {
    ordered_json j;
    j["objects"] = C.objects;
    j["stops"] = C.stops;
    ordered_json gens = ordered_json::array();
    for (const Generator& g : C.gens) {
        ordered_json gj;
        gj["name"] = g.name;
        gj["source"] = C.objects[g.source];
        gj["target"] = C.objects[g.target];
        gj["degree"] = g.degree;
        gj["weights"] = g.weights;
        gj["action"] = g.action.str();
        gens.push_back(std::move(gj));
    }
    j["generators"] = std::move(gens);

    /* canonical mu order: by (arity, conventional-order input names) */
    std::vector<std::pair<std::vector<std::string>, const Chain*>> entries;
    for (const auto& [w, out] : C.mu) {
        std::vector<std::string> names;
        for (std::size_t i = w.size(); i-- > 0;) names.push_back(C.gens[w[i]].name);
        entries.emplace_back(std::move(names), &out);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    ordered_json mu = ordered_json::array();
    for (const auto& [names, out] : entries) {
        ordered_json mj;
        mj["arity"] = names.size();
        mj["inputs"] = names;
        std::vector<std::string> outs;
        for (GenId t : *out) outs.push_back(C.gens[t].name);
        std::sort(outs.begin(), outs.end());
        mj["outputs"] = outs;
        mu.push_back(std::move(mj));
    }
    j["mu"] = std::move(mu);
    j["max_arity"] = C.max_arity;
    if (!C.units.empty()) {
        ordered_json u;
        for (const auto& [L, e] : C.units) u[C.objects[L]] = C.gens[e].name;
        j["units"] = std::move(u);
    }
    if (C.arity_waiver) j["arity_waiver"] = true;
    return j;
}

std::string category_to_string(const Category& C) {
    return category_to_json(C).dump(2) + "\n";
}

void save_category_file(const Category& C, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw af_error("MalformedInput", "cannot write " + path);
    out << category_to_string(C);
}

} // namespace af
