#include "ainfty/retraction.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace af {

MainWeight main_weight(const QuotientCategory& Q, GenId g, std::size_t sigma) {
    if (sigma >= Q.cat.stops.size())
        throw af_error("MalformedInput", "stop index out of range");
    /* quotient generators already carry the componentwise weight sums */
    return {Q.cat.gens[g].weights[sigma], (int)Q.entry_of[g].size() - 1};
}

MainWeight chain_main_weight(const QuotientCategory& Q, const Chain& c, std::size_t sigma) {
    MainWeight best{0, 0};
    for (GenId g : c) {
        MainWeight w = main_weight(Q, g, sigma);
        if (best < w) best = w;
    }
    return best;
}

Chain RetractionHomotopy::apply(const Chain& x) const {
    Chain out;
    for (GenId g : x) {
        auto it = delta.find(g);
        if (it != delta.end()) chain_xor(out, it->second);
    }
    return out;
}

RetractionHomotopy parse_delta(const std::string& text, const Category& C) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw af_error("MalformedInput", std::string("delta file: ") + e.what());
    }
    if (!j.is_array()) throw af_error("MalformedInput", "delta file must be a list");
    RetractionHomotopy D;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("input") || !e.contains("outputs") ||
            e.size() != 2)
            throw af_error("MalformedInput", "delta entry needs exactly input/outputs");
        GenId in = C.gen(e["input"].get<std::string>());
        if (D.delta.count(in))
            throw af_error("MalformedInput", "duplicate delta input " + C.gens[in].name);
        Chain out;
        for (const auto& o : e["outputs"]) {
            GenId t = C.gen(o.get<std::string>());
            if (C.gens[t].degree != C.gens[in].degree - 1)
                throw af_error("DegreeMismatch", "delta must drop degree by 1 at " +
                                                     C.gens[in].name);
            chain_toggle(out, t);
        }
        if (!out.empty()) D.delta[in] = std::move(out);
    }
    return D;
}

RetractionHomotopy load_delta_file(const std::string& path, const Category& C) {
    std::ifstream in(path);
    if (!in) throw af_error("MalformedInput", "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_delta(text, C);
}

Chain basic_retraction(const Category& C, const RetractionHomotopy& D, const Chain& x) {
    Chain out = x;
    for (GenId g : D.apply(x)) chain_xor(out, evaluate_mu(C, {g}));
    Chain dx;
    for (GenId g : x) chain_xor(dx, evaluate_mu(C, {g}));
    chain_xor(out, D.apply(dx));
    return out;
}

Report verify_retraction_hypotheses(const QuotientCategory& Q, const RetractionHomotopy& D,
                                    std::size_t sigma, const std::vector<GenId>& basis) {
    Report rep;
    for (GenId g : basis) {
        MainWeight w = main_weight(Q, g, sigma);
        Chain r = basic_retraction(Q.cat, D, {g});
        if (w == MainWeight{0, 0}) {
            if (!D.apply({g}).empty())
                rep.add(Q.cat.gens[g].name, "Delta nonzero on a weight-(0,0) generator");
            if (r != Chain{g})
                rep.add(Q.cat.gens[g].name, "R does not fix a weight-(0,0) generator");
        } else {
            for (GenId t : r) {
                MainWeight wt = main_weight(Q, t, sigma);
                if (!(wt < w))
                    rep.add(Q.cat.gens[g].name,
                            "R term " + Q.cat.gens[t].name + " has weight " + wt.str() +
                                " not below " + w.str());
            }
        }
    }
    return rep;
}

/* upper bound on orbit length: the number of distinct main weights present */
static std::size_t weight_cap(const QuotientCategory& Q, std::size_t sigma) {
    std::set<std::pair<int, int>> ws;
    for (GenId g = 0; g < Q.cat.gens.size(); ++g) {
        MainWeight w = main_weight(Q, g, sigma);
        ws.insert({w.n, w.k});
    }
    return ws.size() + 2;
}

RetractIterate iterate_retraction(const QuotientCategory& Q, const RetractionHomotopy& D,
                                  std::size_t sigma, const Chain& x) {
    std::size_t cap = weight_cap(Q, sigma);
    RetractIterate out;
    out.result = x;
    for (;;) {
        Chain next = basic_retraction(Q.cat, D, out.result);
        if (next == out.result) break;
        if (++out.iterations > cap)
            throw af_error("NonTerminating",
                           "retraction orbit exceeded the weight bound; hypotheses "
                           "violated on its support");
        /* telescoped homotopy witness, no chain-map assumption needed */
        chain_xor(out.witness, D.apply(out.result));
        Chain dy;
        for (GenId g : out.result) chain_xor(dy, evaluate_mu(Q.cat, {g}));
        chain_xor(out.witness_on_dx, D.apply(dy));
        out.result = std::move(next);
    }
    return out;
}

DeformationReport verify_compact_deformation_property(const QuotientCategory& Q,
                                                      const RetractionHomotopy& D,
                                                      std::size_t sigma,
                                                      const std::vector<GenId>& basis) {
    std::set<GenId> in_c(basis.begin(), basis.end());
    for (GenId g : basis)
        for (GenId t : evaluate_mu(Q.cat, {g}))
            if (!in_c.count(t))
                throw af_error("NotASubcomplex", "mu^1(" + Q.cat.gens[g].name +
                                                     ") leaves the span at " +
                                                     Q.cat.gens[t].name);
    DeformationReport out;
    std::size_t cap = weight_cap(Q, sigma);
    for (GenId g : basis) {
        Chain y{g};
        std::size_t n = 0;
        for (;;) {
            Chain next = basic_retraction(Q.cat, D, y);
            if (next == y) break;
            if (++n > cap)
                throw af_error("NonTerminating", "orbit of " + Q.cat.gens[g].name +
                                                     " exceeded the weight bound");
            y = std::move(next);
        }
        if (n > out.n) out.n = n;
    }
    for (GenId g : basis) {
        Chain y{g}, witness, witness_on_dy;
        for (std::size_t m = 0; m < out.n; ++m) {
            chain_xor(witness, D.apply(y));
            Chain dy;
            for (GenId t : y) chain_xor(dy, evaluate_mu(Q.cat, {t}));
            chain_xor(witness_on_dy, D.apply(dy));
            y = basic_retraction(Q.cat, D, y);
        }
        /* gamma + R^n gamma = mu^1(witness) + witness_on_dy, exactly */
        Chain lhs{g};
        chain_xor(lhs, y);
        Chain rhs;
        for (GenId t : witness) chain_xor(rhs, evaluate_mu(Q.cat, {t}));
        chain_xor(rhs, witness_on_dy);
        if (lhs != rhs)
            out.report.add(Q.cat.gens[g].name, "chain-homotopy identity fails");
    }
    return out;
}

RetractionHomotopy derive_weight_dropping_delta(const QuotientCategory& Q,
                                                std::size_t sigma,
                                                const std::vector<GenId>& basis) {
    const Category& C = Q.cat;
    const MainWeight zero{0, 0};
    /* unknowns: Delta(g)|_t for positive-weight g and degree-matched targets */
    std::map<std::pair<GenId, GenId>, std::size_t> var;
    for (GenId g : basis) {
        if (main_weight(Q, g, sigma) == zero) continue;
        for (GenId t : basis)
            if (C.gens[t].degree == C.gens[g].degree - 1)
                var[{g, t}] = var.size();
    }
    struct Row {
        F2Vector lhs;
        bool rhs;
    };
    std::vector<Row> rows;
    for (GenId g : basis) {
        MainWeight w = main_weight(Q, g, sigma);
        if (w == zero) continue;
        Chain dg = evaluate_mu(C, {g});
        for (GenId s : basis) {
            if (C.gens[s].degree != C.gens[g].degree) continue;
            if (main_weight(Q, s, sigma) < w) continue;
            Row r{F2Vector(var.size()), s == g};
            for (GenId t : basis) {
                auto it = var.find({g, t});
                if (it == var.end()) continue;
                Chain dt = evaluate_mu(C, {t});
                if (std::binary_search(dt.begin(), dt.end(), s)) r.lhs.flip(it->second);
            }
            for (GenId u : dg) {
                auto it = var.find({u, s});
                if (it != var.end()) r.lhs.flip(it->second);
            }
            rows.push_back(std::move(r));
        }
    }
    F2Matrix M(rows.size(), var.size());
    F2Vector b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < var.size(); ++j)
            if (rows[i].lhs.get(j)) M.set(i, j, true);
        b.set(i, rows[i].rhs);
    }
    F2Vector x;
    if (!solve(M, b, x))
        throw af_error("NoSolution", "no weight-dropping Delta exists on this basis");
    RetractionHomotopy D;
    for (const auto& [gt, idx] : var)
        if (x.get(idx)) chain_toggle(D.delta[gt.first], gt.second);
    for (auto it = D.delta.begin(); it != D.delta.end();)
        it = it->second.empty() ? D.delta.erase(it) : std::next(it);
    return D;
}

} // namespace af
