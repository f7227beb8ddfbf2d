#include "ainfty/fixtures.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

#include "ainfty/filtration.hpp"

namespace af {

Category linear_quiver_category(std::size_t n) {
    if (n < 1) throw af_error("MalformedInput", "quiver needs at least one object");
    Category C;
    for (std::size_t i = 0; i < n; ++i) C.objects.push_back("L" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) {
        Generator e;
        e.name = "e" + std::to_string(i);
        e.source = e.target = (ObjId)i;
        C.units[(ObjId)i] = (GenId)C.gens.size();
        C.gens.push_back(std::move(e));
    }
    std::map<std::pair<std::size_t, std::size_t>, GenId> path;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Generator p;
            p.name = "p" + std::to_string(i) + "_" + std::to_string(j);
            p.source = (ObjId)i;
            p.target = (ObjId)j;
            p.action = Rational((long long)(j - i));
            path[{i, j}] = (GenId)C.gens.size();
            C.gens.push_back(std::move(p));
        }
    C.max_arity = 2;
    for (std::size_t i = 0; i < n; ++i) {
        GenId e = C.units[(ObjId)i];
        C.mu[{e, e}] = {e};
    }
    for (const auto& [ij, p] : path) {
        C.mu[{C.units[(ObjId)ij.first], p}] = {p};
        C.mu[{p, C.units[(ObjId)ij.second]}] = {p};
        for (std::size_t k = ij.second + 1; k < n; ++k)
            C.mu[{p, path.at({ij.second, k})}] = {path.at({ij.first, k})};
    }
    C.reindex();
    return C;
}

/* ---- disk model --------------------------------------------------------- */

namespace {

struct Layout {
    std::size_t T = 0;
    std::vector<std::size_t> point_slot;      // per global marked point
    std::vector<std::size_t> point_interval;  // per global marked point
    std::vector<int> slot_stop;               // per slot: stop id or -1
};

Layout make_layout(const DiskModel& m) {
    if (m.stop_count < 2) throw af_error("InvalidModel", "need at least two stops");
    if (m.winding_bound < 1) throw af_error("InvalidModel", "winding_bound must be >= 1");
    if (m.points_per_interval.size() != m.stop_count)
        throw af_error("InvalidModel", "points_per_interval must list every interval");
    Layout L;
    for (std::size_t i = 0; i < m.stop_count; ++i) {
        L.slot_stop.push_back((int)i);
        for (std::size_t p = 0; p < m.points_per_interval[i]; ++p) {
            L.point_slot.push_back(L.slot_stop.size() + p);
            L.point_interval.push_back(i);
        }
        for (std::size_t p = 0; p < m.points_per_interval[i]; ++p)
            L.slot_stop.push_back(-1);
    }
    L.T = L.slot_stop.size();
    std::size_t P = L.point_slot.size();
    std::vector<bool> used(P, false);
    if (m.arcs.empty()) throw af_error("InvalidModel", "need at least one arc");
    for (const auto& [a, b] : m.arcs) {
        if (a >= P || b >= P) throw af_error("InvalidModel", "arc endpoint out of range");
        if (a == b) throw af_error("InvalidModel", "arc endpoints must differ");
        if (L.point_interval[a] == L.point_interval[b])
            throw af_error("InvalidModel", "arc endpoints must lie on distinct intervals");
        if (used[a] || used[b]) throw af_error("InvalidModel", "arcs share an endpoint");
        used[a] = used[b] = true;
    }
    return L;
}

std::vector<int> crossings(const Layout& L, std::size_t stops, std::size_t from_slot,
                           std::size_t advance) {
    std::vector<int> w(stops, 0);
    std::size_t pos = from_slot;
    for (std::size_t t = 0; t < advance; ++t) {
        pos = (pos + 1) % L.T;
        if (L.slot_stop[pos] >= 0) ++w[L.slot_stop[pos]];
    }
    return w;
}

} // namespace

Category disk_with_stops_category(const DiskModel& m) {
    Layout L = make_layout(m);
    Category C;
    for (std::size_t s = 0; s < m.stop_count; ++s)
        C.stops.push_back("s" + std::to_string(s));
    for (std::size_t i = 0; i < m.arcs.size(); ++i)
        C.objects.push_back("A" + std::to_string(i));
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
        Generator e;
        e.name = "e_A" + std::to_string(i);
        e.source = e.target = (ObjId)i;
        e.weights.assign(m.stop_count, 0);
        C.units[(ObjId)i] = (GenId)C.gens.size();
        C.gens.push_back(std::move(e));
    }
    auto endpoints = [&](std::size_t arc) {
        return std::vector<std::size_t>{m.arcs[arc].first, m.arcs[arc].second};
    };
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, GenId> by_path;
    for (std::size_t X = 0; X < m.arcs.size(); ++X)
        for (std::size_t u : endpoints(X))
            for (std::size_t Y = 0; Y < m.arcs.size(); ++Y)
                for (std::size_t v : endpoints(Y)) {
                    std::size_t base =
                        (L.point_slot[v] + L.T - L.point_slot[u] % L.T) % L.T;
                    for (std::size_t w = 0; w < m.winding_bound; ++w) {
                        std::size_t a = base + w * L.T;
                        if (a == 0) continue;  // the unit, identified separately
                        Generator g;
                        g.name = "f" + std::to_string(u) + "_" + std::to_string(v) +
                                 "_" + std::to_string(w);
                        g.source = (ObjId)X;
                        g.target = (ObjId)Y;
                        g.weights = crossings(L, m.stop_count, L.point_slot[u], a);
                        g.action = Rational((long long)a);
                        by_path[{u, v, a}] = (GenId)C.gens.size();
                        C.gens.push_back(std::move(g));
                    }
                }
    C.max_arity = 2;
    /* units absorb; nonunit paths concatenate when the winding bound allows */
    for (GenId g = 0; g < C.gens.size(); ++g) {
        GenId eX = C.units[C.gens[g].source];
        GenId eY = C.units[C.gens[g].target];
        C.mu[{eX, g}] = {g};
        if (g != eX) C.mu[{g, eY}] = {g};
    }
    for (const auto& [k1, g1] : by_path)
        for (const auto& [k2, g2] : by_path) {
            if (std::get<1>(k1) != std::get<0>(k2)) continue;
            std::size_t a = std::get<2>(k1) + std::get<2>(k2);
            if (a / L.T >= m.winding_bound) continue;
            C.mu[{g1, g2}] = {by_path.at({std::get<0>(k1), std::get<1>(k2), a})};
        }
    C.reindex();
    return C;
}

std::size_t path_count_oracle(const DiskModel& m, std::size_t arcX, std::size_t arcY,
                              const WeightConstraint& c) {
    Layout L = make_layout(m);
    if (arcX >= m.arcs.size() || arcY >= m.arcs.size())
        throw af_error("MalformedInput", "arc index out of range");
    std::vector<int> exact = c.exact;
    if (exact.empty()) exact.assign(m.stop_count, -1);
    if (exact.size() != m.stop_count)
        throw af_error("MalformedInput", "constraint size mismatch");
    auto ok = [&](const std::vector<int>& cr) {
        for (std::size_t s = 0; s < cr.size(); ++s)
            if (exact[s] >= 0 && cr[s] != exact[s]) return false;
        return true;
    };
    std::size_t count = 0;
    if (arcX == arcY && ok(std::vector<int>(m.stop_count, 0))) ++count;  // empty path
    std::vector<std::size_t> targets{L.point_slot[m.arcs[arcY].first],
                                     L.point_slot[m.arcs[arcY].second]};
    for (std::size_t u : {m.arcs[arcX].first, m.arcs[arcX].second}) {
        std::vector<int> cr(m.stop_count, 0);
        std::size_t pos = L.point_slot[u];
        for (std::size_t step = 1; step < m.winding_bound * L.T; ++step) {
            pos = (pos + 1) % L.T;
            if (L.slot_stop[pos] >= 0) ++cr[L.slot_stop[pos]];
            if (std::find(targets.begin(), targets.end(), pos) != targets.end() &&
                ok(cr))
                ++count;
        }
    }
    return count;
}

StopRemoval stop_removal_testcase(const DiskModel& m, std::size_t removed_stop) {
    Layout L = make_layout(m);
    if (removed_stop >= m.stop_count)
        throw af_error("MalformedInput", "stop index out of range");
    std::size_t prev_iv = (removed_stop + m.stop_count - 1) % m.stop_count;
    if (m.points_per_interval[prev_iv] == 0 || m.points_per_interval[removed_stop] == 0)
        throw af_error("MissingCoveringArc",
                       "no marked points flank stop s" + std::to_string(removed_stop));
    std::vector<std::size_t> first_point(m.stop_count, 0);
    for (std::size_t i = 1; i < m.stop_count; ++i)
        first_point[i] = first_point[i - 1] + m.points_per_interval[i - 1];
    std::size_t before = first_point[prev_iv] + m.points_per_interval[prev_iv] - 1;
    std::size_t after = first_point[removed_stop];
    StopRemoval out;
    out.removed_stop = removed_stop;
    bool found = false;
    for (std::size_t i = 0; i < m.arcs.size(); ++i) {
        auto [a, b] = m.arcs[i];
        if ((a == before && b == after) || (a == after && b == before)) {
            out.covering_arc = (ObjId)i;
            found = true;
        }
    }
    if (!found)
        throw af_error("MissingCoveringArc",
                       "no arc joins the points flanking s" + std::to_string(removed_stop));
    out.full = disk_with_stops_category(m);
    std::vector<std::string> all, kept;
    for (std::size_t s = 0; s < m.stop_count; ++s) {
        all.push_back("s" + std::to_string(s));
        if (s != removed_stop) kept.push_back(all.back());
    }
    out.fine = zero_filtered_subcategory(out.full, all);
    out.reference = zero_filtered_subcategory(out.full, kept);
    return out;
}

DiskModel disk_model_s2() {
    DiskModel m;
    m.stop_count = 2;
    m.points_per_interval = {2, 2};
    m.arcs = {{1, 2}, {3, 0}};  // a chord arc and the covering arc of stop 0
    m.winding_bound = 2;
    return m;
}

DiskModel disk_model_s3() {
    DiskModel m;
    m.stop_count = 3;
    m.points_per_interval = {2, 2, 2};
    m.arcs = {{1, 2}, {3, 4}, {5, 0}};  // two chords and the covering arc of stop 0
    m.winding_bound = 2;
    return m;
}

DiskModel parse_disk_model(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw af_error("MalformedInput", std::string("model file: ") + e.what());
    }
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "stops" && k != "points_per_interval" && k != "arcs" &&
            k != "winding_bound")
            throw af_error("MalformedInput", "unknown model field " + k);
    }
    if (!j.contains("stops") || !j.contains("points_per_interval") ||
        !j.contains("arcs") || !j.contains("winding_bound"))
        throw af_error("MalformedInput", "model needs stops/points_per_interval/arcs/"
                                         "winding_bound");
    DiskModel m;
    m.stop_count = j["stops"].get<std::size_t>();
    m.points_per_interval = j["points_per_interval"].get<std::vector<std::size_t>>();
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2)
            throw af_error("MalformedInput", "arc must be a pair of point ids");
        m.arcs.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>()});
    }
    m.winding_bound = j["winding_bound"].get<std::size_t>();
    return m;
}

DiskModel load_disk_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw af_error("MalformedInput", "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_disk_model(text);
}

std::string disk_model_to_string(const DiskModel& m) {
    nlohmann::ordered_json j;
    j["stops"] = m.stop_count;
    j["points_per_interval"] = m.points_per_interval;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [a, b] : m.arcs) arr.push_back({a, b});
    j["arcs"] = arr;
    j["winding_bound"] = m.winding_bound;
    return j.dump(2) + "\n";
}

/* ---- gauge fixtures ----------------------------------------------------- */

GaugeFixture gauge_fixture(int which) {
    GaugeFixture fx;
    if (which == 1) {
        /* one object, u in degree 0 with mu^1 u = w */
        Category C;
        C.objects = {"X"};
        Generator u, w;
        u.name = "u";
        w.name = "w";
        w.degree = 1;
        C.gens = {u, w};
        C.mu[{0}] = {1};
        C.max_arity = 2;
        C.arity_waiver = true;  // degree pattern admits arbitrarily high arities
        C.reindex();
        fx.base = C;
        fx.g.components[{C.gen("u"), C.gen("w")}] = {C.gen("u")};
        fx.g.max_arity = 2;
    } else if (which == 2) {
        /* unitless graded quiver: mu^2(g^2(x,y), z) = q survives because
         * mu^2(y, z) = 0 gives it no cancelling partner */
        Category C;
        C.objects = {"L0", "L1", "L2", "L3"};
        auto add = [&](const std::string& name, ObjId s, ObjId t, int deg) {
            Generator g;
            g.name = name;
            g.source = s;
            g.target = t;
            g.degree = deg;
            GenId id = (GenId)C.gens.size();
            C.gens.push_back(std::move(g));
            return id;
        };
        GenId x = add("x", 0, 1, 0);
        GenId y = add("y", 1, 2, 0);
        GenId z = add("z", 2, 3, 0);
        GenId m = add("m", 0, 2, -1);
        add("q", 0, 3, -1);
        C.reindex();
        C.mu[{m, z}] = {C.gen("q")};
        C.max_arity = 3;  // no composable word is longer than the object chain
        fx.base = C;
        fx.g.components[{x, y}] = {m};
        fx.g.max_arity = 2;
    } else if (which == 3) {
        /* two overlapping gauge components plus an arity-3 one */
        Category C;
        C.objects = {"L0", "L1", "L2", "L3", "L4"};
        auto add = [&](const std::string& name, ObjId s, ObjId t, int deg) {
            Generator g;
            g.name = name;
            g.source = s;
            g.target = t;
            g.degree = deg;
            GenId id = (GenId)C.gens.size();
            C.gens.push_back(std::move(g));
            return id;
        };
        GenId x1 = add("x1", 0, 1, 0);
        GenId x2 = add("x2", 1, 2, 0);
        GenId x3 = add("x3", 2, 3, 0);
        GenId x4 = add("x4", 3, 4, 0);
        GenId m12 = add("m12", 0, 2, -1);
        GenId m23 = add("m23", 1, 3, -1);
        GenId q = add("q", 0, 3, -1);
        GenId r = add("r", 0, 3, -1);
        GenId s = add("s", 1, 4, -1);
        GenId h = add("h", 0, 3, -2);
        C.reindex();
        C.mu[{m12, x3}] = {q};
        C.mu[{x1, m23}] = {r};
        C.mu[{m23, x4}] = {s};
        C.max_arity = 4;
        fx.base = C;
        fx.g.components[{x1, x2}] = {m12};
        fx.g.components[{x2, x3}] = {m23};
        fx.g.components[{x1, x2, x3}] = {h};
        fx.g.max_arity = 3;
    } else {
        throw af_error("MalformedInput", "unknown gauge fixture");
    }
    fx.twisted = gauge_transform(fx.base, fx.g, 6);
    if (which == 1) fx.twisted.arity_waiver = true;
    return fx;
}

/* ---- toy retraction ----------------------------------------------------- */

ToyRetraction toy_retraction_fixture() {
    ToyRetraction fx;
    auto A = std::make_shared<Category>();
    A->objects = {"L0", "P", "L1"};
    A->stops = {"s0"};
    auto add = [&](const std::string& name, ObjId s, ObjId t, int w, long long act) {
        Generator g;
        g.name = name;
        g.source = s;
        g.target = t;
        g.weights = {w};
        g.action = Rational(act);
        GenId id = (GenId)A->gens.size();
        A->gens.push_back(std::move(g));
        return id;
    };
    GenId e0 = add("e0", 0, 0, 0, 0);
    GenId eP = add("eP", 1, 1, 0, 0);
    GenId e1 = add("e1", 2, 2, 0, 0);
    GenId u = add("u", 0, 1, 1, 1);
    GenId v = add("v", 1, 2, 0, 1);
    GenId a = add("a", 0, 2, 1, 2);
    GenId b = add("b", 0, 2, 0, 1);
    A->units = {{0, e0}, {1, eP}, {2, e1}};
    A->max_arity = 2;
    A->mu[{e0, e0}] = {e0};
    A->mu[{eP, eP}] = {eP};
    A->mu[{e1, e1}] = {e1};
    A->mu[{e0, u}] = {u};
    A->mu[{u, eP}] = {u};
    A->mu[{eP, v}] = {v};
    A->mu[{v, e1}] = {v};
    A->mu[{e0, a}] = {a};
    A->mu[{a, e1}] = {a};
    A->mu[{e0, b}] = {b};
    A->mu[{b, e1}] = {b};
    A->mu[{u, v}] = {a};
    A->reindex();
    fx.base = A;
    fx.Q = build_quotient(*A, {1}, 5);
    fx.sigma = 0;
    auto word = [&](std::size_t j) {
        Word q{u};
        for (std::size_t i = 0; i < j; ++i) q.push_back(eP);
        q.push_back(v);
        return fx.Q.gen_of.at(q);
    };
    /* Delta inverts the length-raising half of the bar differential:
     * delta(word_j) = [j even] word_{j-1} with word_{-1} = a */
    fx.delta.delta[fx.Q.gen_of.at({a})] = {word(0)};
    fx.delta.delta[word(1)] = {word(2)};
    fx.delta.delta[word(3)] = {word(4)};
    for (GenId g = 0; g < fx.Q.cat.gens.size(); ++g)
        if (fx.Q.cat.gens[g].source == 0 && fx.Q.cat.gens[g].target == 2)
            fx.basis.push_back(g);
    return fx;
}

} // namespace af
