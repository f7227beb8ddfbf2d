#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ainfty/filtration.hpp"
#include "ainfty/fixtures.hpp"
#include "ainfty/hochschild.hpp"
#include "ainfty/io.hpp"
#include "ainfty/quotient.hpp"
#include "ainfty/retraction.hpp"
#include "ainfty/wlim.hpp"

using namespace af;
using nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    bool allow_unstable = false;
};

/* accumulates one machine-readable report per invocation */
struct CliReport {
    std::string command;
    Report rep;
    std::vector<std::pair<std::string, std::vector<DimEntry>>> tables;
    ordered_json result = ordered_json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    bool unstable_inside_window() const {
        for (const auto& [name, entries] : tables) {
            (void)name;
            for (const DimEntry& e : entries)
                if (e.stability == Stability::Unstable) return true;
        }
        return false;
    }

    int finish(const Options& opt) {
        bool pass = rep.pass() && (opt.allow_unstable || !unstable_inside_window());
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (opt.json) {
            ordered_json j;
            j["command"] = command;
            j["pass"] = pass;
            j["violations"] = ordered_json::array();
            for (const Violation& v : rep.violations)
                j["violations"].push_back({{"location", v.location}, {"detail", v.detail}});
            j["tables"] = ordered_json::array();
            for (const auto& [name, entries] : tables) {
                ordered_json t;
                t["name"] = name;
                t["entries"] = ordered_json::array();
                for (const DimEntry& e : entries)
                    t["entries"].push_back(
                        {{"degree", e.degree},
                         {"dim", e.dim},
                         {"stability",
                          e.stability == Stability::Stable ? "STABLE" : "UNSTABLE"}});
                j["tables"].push_back(std::move(t));
            }
            if (!result.empty()) j["result"] = result;
            j["timing_ms"] = ms;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << command << ": " << (pass ? "PASS" : "FAIL") << "\n";
            for (const Violation& v : rep.violations)
                std::cout << "  violation at " << v.location << ": " << v.detail << "\n";
            for (const auto& [name, entries] : tables) {
                std::cout << "  " << name << ":\n";
                for (const DimEntry& e : entries)
                    std::cout << "    H^" << e.degree << " = " << e.dim << " ["
                              << (e.stability == Stability::Stable ? "STABLE"
                                                                   : "UNSTABLE")
                              << "]\n";
            }
            for (const auto& [k, v] : result.items())
                std::cout << "  " << k << " = " << v.dump() << "\n";
        }
        return pass ? 0 : 1;
    }
};

DegreeWindow parse_window(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw af_error("MalformedInput", "--degrees expects a..b, got " + s);
    DegreeWindow w;
    w.lo = std::stoi(s.substr(0, dots));
    w.hi = std::stoi(s.substr(dots + 2));
    if (w.lo > w.hi) throw af_error("MalformedInput", "empty degree window " + s);
    return w;
}

std::vector<ObjId> parse_objects(const Category& C, const std::vector<std::string>& names) {
    std::vector<ObjId> out;
    for (const std::string& n : names) {
        std::string item;
        std::stringstream ss(n);
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(C.obj(item));
    }
    return out;
}

Chain parse_chain(const Category& C, const std::string& expr) {
    Chain c;
    std::string item;
    std::stringstream ss(expr);
    while (std::getline(ss, item, '+'))
        if (!item.empty()) chain_toggle(c, C.gen(item));
    return c;
}

/* conventional-order word "g_d|...|g_1" -> internal order */
Word parse_word(const Category& C, const std::string& expr) {
    std::vector<GenId> conv;
    std::string item;
    std::stringstream ss(expr);
    while (std::getline(ss, item, '|'))
        if (!item.empty()) conv.push_back(C.gen(item));
    return Word(conv.rbegin(), conv.rend());
}

ordered_json chain_json(const Category& C, const Chain& c) {
    ordered_json out = ordered_json::array();
    for (GenId g : c) out.push_back(C.gens[g].name);
    return out;
}

void emit_category(const Category& C, const std::string& path) {
    if (path.empty())
        std::cout << category_to_string(C);
    else
        save_category_file(C, path);
}

/* strict-unit sanity for categories that declare units */
Report verify_units(const Category& C) {
    Report rep;
    for (const auto& [L, e] : C.units) {
        if (C.gens[e].degree != 0 || C.gens[e].source != L || C.gens[e].target != L) {
            rep.add(C.gens[e].name, "declared unit is not a degree-0 endomorphism");
            continue;
        }
        if (!evaluate_mu(C, {e}).empty()) rep.add(C.gens[e].name, "mu^1(unit) != 0");
        for (GenId g = 0; g < C.gens.size(); ++g) {
            if (C.gens[g].source == L && evaluate_mu(C, {e, g}) != Chain{g})
                rep.add(word_str(C, {e, g}), "unit does not absorb on the left");
            if (C.gens[g].target == L && evaluate_mu(C, {g, e}) != Chain{g})
                rep.add(word_str(C, {g, e}), "unit does not absorb on the right");
        }
    }
    return rep;
}

/* {source_file, target_file, object_map, components[, max_arity]} */
struct LoadedFunctor {
    Category source, target;
    AInftyFunctor F;
};

void read_components(const Category& S, const Category& T, const ordered_json& arr,
                     std::map<Word, Chain>& out) {
    if (!arr.is_array()) throw af_error("MalformedInput", "components must be a list");
    for (const auto& e : arr) {
        if (!e.is_object() || !e.contains("inputs") || !e.contains("outputs"))
            throw af_error("MalformedInput", "component needs inputs and outputs");
        std::vector<GenId> conv;
        for (const auto& n : e["inputs"]) conv.push_back(S.gen(n.get<std::string>()));
        Word w(conv.rbegin(), conv.rend());
        Chain c;
        for (const auto& n : e["outputs"]) chain_toggle(c, T.gen(n.get<std::string>()));
        if (out.count(w)) throw af_error("MalformedInput", "duplicate component");
        if (!c.empty()) out[w] = std::move(c);
    }
}

ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw af_error("MalformedInput", "cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw af_error("MalformedInput", std::string("JSON parse error: ") + e.what());
    }
}

std::unique_ptr<LoadedFunctor> load_functor_file(const std::string& path) {
    ordered_json j = read_json_file(path);
    for (const char* f : {"source_file", "target_file", "object_map", "components"})
        if (!j.contains(f))
            throw af_error("MalformedInput", std::string("missing field ") + f);
    auto L = std::make_unique<LoadedFunctor>();
    L->source = load_category_file(j["source_file"].get<std::string>());
    L->target = load_category_file(j["target_file"].get<std::string>());
    L->F.source = &L->source;
    L->F.target = &L->target;
    L->F.object_map.assign(L->source.objects.size(), 0);
    std::vector<bool> seen(L->source.objects.size(), false);
    for (const auto& [from, to] : j["object_map"].items()) {
        ObjId s = L->source.obj(from);
        L->F.object_map[s] = L->target.obj(to.get<std::string>());
        seen[s] = true;
    }
    for (std::size_t o = 0; o < seen.size(); ++o)
        if (!seen[o])
            throw af_error("MalformedInput",
                           "object_map misses " + L->source.objects[o]);
    read_components(L->source, L->target, j["components"], L->F.components);
    L->F.max_arity = j.value("max_arity", 4);
    return L;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite filtered A-infinity category toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable report");
    app.add_flag("--allow-unstable", opt.allow_unstable,
                 "UNSTABLE table entries do not fail the run");

    std::string file, out_path, degrees = "0..0", epsilon = "0", model_path;
    std::string obj_x, obj_y, delta_path, element, sigma_stop, kind, word;
    std::vector<std::string> subcat;
    std::size_t max_arity = 6, max_length = 4, max_word_length = 5, kk = 2;
    std::size_t stabilization = 4, quiver_n = 3;
    int gauge_which = 1;
    bool do_check = false;

    auto* verify = app.add_subcommand("verify", "relation/degree/filtration/unit checks");
    verify->add_option("file", file)->required();
    verify->add_option("--max-arity", max_arity);

    auto* homology = app.add_subcommand("homology", "H*(hom(X,Y), mu^1)");
    homology->add_option("file", file)->required();
    homology->add_option("X", obj_x)->required();
    homology->add_option("Y", obj_y)->required();
    homology->add_option("--degrees", degrees);

    auto* hochschild = app.add_subcommand("hochschild", "truncated Hochschild homology");
    hochschild->add_option("file", file)->required();
    hochschild->add_option("--max-length", max_length);
    hochschild->add_option("--degrees", degrees);

    auto* action = app.add_subcommand("action", "action filtration / class action");
    action->add_option("file", file)->required();
    action->add_option("--epsilon", epsilon);
    action->add_option("--max-length", max_length);
    action->add_option("--k", kk);
    action->add_option("--cycle", word,
                       "conventional-order cyclic word g_d|...|g_1; enables the "
                       "length-k class action");

    auto* quotient = app.add_subcommand("quotient", "emit the quotient category A/B");
    quotient->add_option("file", file)->required();
    quotient->add_option("--subcat", subcat)->required();
    quotient->add_option("--max-word-length", max_word_length);
    quotient->add_option("-o,--output", out_path);

    auto* retract = app.add_subcommand("retract", "iterate the basic retraction");
    retract->add_option("file", file)->required();
    retract->add_option("--subcat", subcat)->required();
    retract->add_option("--max-word-length", max_word_length);
    retract->add_option("--sigma", sigma_stop, "stop label for the main weight")
        ->required();
    retract->add_option("--delta", delta_path)->required();
    retract->add_option("--element", element)->required();

    auto* wlim = app.add_subcommand("wlim", "emit the homotopy-limit category");
    wlim->add_option("file", file)->required();
    wlim->add_option("--stabilization", stabilization);
    wlim->add_option("-o,--output", out_path);
    wlim->add_flag("--check", do_check, "verify the strict inclusion functor");

    auto* fixture = app.add_subcommand("fixture", "emit a generated category");
    fixture->add_option("kind", kind, "quiver | disk | gauge | toy-related")->required();
    fixture->add_option("--n", quiver_n);
    fixture->add_option("--model", model_path, "disk model file; default s2/s3 by --n");
    fixture->add_option("--which", gauge_which);
    fixture->add_option("-o,--output", out_path);

    auto* fcheck = app.add_subcommand("functor-check", "verify functor equations");
    fcheck->add_option("file", file)->required();
    fcheck->add_option("--max-arity", max_arity);

    auto* hcheck = app.add_subcommand("homotopy-check", "verify a pre-natural homotopy");
    hcheck->add_option("file", file)->required();
    hcheck->add_option("--max-arity", max_arity);

    for (CLI::App* s : {verify, homology, hochschild, action, quotient, retract, wlim,
                        fixture, fcheck, hcheck})
        s->fallthrough();  // lets --json / --allow-unstable follow the subcommand

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    CliReport R;
    try {
        if (app.got_subcommand(verify)) {
            R.command = "verify";
            Category C = load_category_file(file);
            R.rep.merge(verify_ainfty_relations(C, max_arity));
            R.rep.merge(verify_degree_convention(C));
            R.rep.merge(verify_filtration_subadditivity(C, max_arity));
            R.rep.merge(verify_units(C));
        } else if (app.got_subcommand(homology)) {
            R.command = "homology";
            Category C = load_category_file(file);
            DegreeWindow win = parse_window(degrees);
            auto dims = hom_homology(C, C.obj(obj_x), C.obj(obj_y), win);
            std::vector<DimEntry> entries;
            for (int k = win.lo; k <= win.hi; ++k)
                entries.push_back({k, dims[k], Stability::Stable});
            R.tables.emplace_back("homology(" + obj_x + "," + obj_y + ")", entries);
        } else if (app.got_subcommand(hochschild)) {
            R.command = "hochschild";
            Category C = load_category_file(file);
            R.tables.emplace_back("hochschild",
                                  hochschild_homology(C, max_length,
                                                      parse_window(degrees)));
        } else if (app.got_subcommand(action)) {
            R.command = "action";
            Category C = load_category_file(file);
            Rational eps = Rational::parse(epsilon);
            R.rep.merge(verify_action_filtration(C, eps, max_length));
            if (!word.empty()) {
                ShiftedActionValue v =
                    length_k_class_action(C, {parse_word(C, word)}, kk, eps);
                R.result["class_action"] = v.str();
            }
        } else if (app.got_subcommand(quotient)) {
            R.command = "quotient";
            Category A = load_category_file(file);
            QuotientCategory Q =
                build_quotient(A, parse_objects(A, subcat), max_word_length);
            emit_category(Q.cat, out_path);
            R.result["generators"] = Q.cat.gens.size();
            R.result["dropped_inputs"] = Q.dropped_inputs.size();
        } else if (app.got_subcommand(retract)) {
            R.command = "retract";
            Category A = load_category_file(file);
            QuotientCategory Q =
                build_quotient(A, parse_objects(A, subcat), max_word_length);
            std::size_t sigma = 0;
            while (sigma < A.stops.size() && A.stops[sigma] != sigma_stop) ++sigma;
            if (sigma == A.stops.size())
                throw af_error("MalformedInput", "unknown stop " + sigma_stop);
            RetractionHomotopy D = load_delta_file(delta_path, Q.cat);
            Chain x = parse_chain(Q.cat, element);
            RetractIterate it = iterate_retraction(Q, D, sigma, x);
            Chain lhs = x, rhs = it.witness_on_dx;
            chain_xor(lhs, it.result);
            for (GenId g : it.witness) chain_xor(rhs, evaluate_mu(Q.cat, {g}));
            if (lhs != rhs)
                R.rep.add(element, "homotopy witness identity failed");
            R.result["result"] = chain_json(Q.cat, it.result);
            R.result["iterations"] = it.iterations;
            R.result["witness"] = chain_json(Q.cat, it.witness);
        } else if (app.got_subcommand(wlim)) {
            R.command = "wlim";
            Category C = load_category_file(file);
            WlimCategory W = build_wlim(C, stabilization);
            emit_category(W.cat, out_path);
            if (do_check) {
                AInftyFunctor F = strict_inclusion(C, W);
                R.rep.merge(verify_functor_equations(F, 4));
                for (ObjId X = 0; X < C.objects.size(); ++X)
                    for (ObjId Y = 0; Y < C.objects.size(); ++Y) {
                        HomBasis src = hom_basis_complex(C, X, Y);
                        HomBasis tgt = hom_basis_complex(W.cat, X, Y);
                        if (src.items.empty() && tgt.items.empty()) continue;
                        std::string why;
                        if (!induces_homology_iso(
                                src.bc, tgt.bc,
                                [&](std::size_t i) {
                                    return tgt.to_svec(W.inclusion[src.items[i]]);
                                },
                                {-6, 6}, &why))
                            R.rep.add("hom(" + C.objects[X] + "," + C.objects[Y] + ")",
                                      "inclusion is not a homology isomorphism: " + why);
                    }
            }
        } else if (app.got_subcommand(fixture)) {
            R.command = "fixture";
            Category C;
            if (kind == "quiver") {
                C = linear_quiver_category(quiver_n);
            } else if (kind == "disk") {
                DiskModel m = model_path.empty() ? disk_model_s2()
                                                 : load_disk_model_file(model_path);
                C = disk_with_stops_category(m);
            } else if (kind == "gauge") {
                C = gauge_fixture(gauge_which).twisted;
            } else if (kind == "toy-related") {
                C = toy_retraction_fixture().Q.cat;
            } else {
                throw af_error("MalformedInput", "unknown fixture kind " + kind);
            }
            emit_category(C, out_path);
            R.result["generators"] = C.gens.size();
        } else if (app.got_subcommand(fcheck)) {
            R.command = "functor-check";
            auto L = load_functor_file(file);
            R.rep.merge(verify_functor_equations(L->F, max_arity));
        } else if (app.got_subcommand(hcheck)) {
            R.command = "homotopy-check";
            ordered_json j = read_json_file(file);
            for (const char* f : {"source_file", "target_file", "from", "to", "homotopy"})
                if (!j.contains(f))
                    throw af_error("MalformedInput", std::string("missing field ") + f);
            Category S = load_category_file(j["source_file"].get<std::string>());
            Category T = load_category_file(j["target_file"].get<std::string>());
            AInftyFunctor Fa, Fb;
            Fa.source = Fb.source = &S;
            Fa.target = Fb.target = &T;
            Fa.object_map.resize(S.objects.size());
            for (ObjId o = 0; o < S.objects.size(); ++o) Fa.object_map[o] = o;
            Fb.object_map = Fa.object_map;
            Fa.max_arity = Fb.max_arity = (int)max_arity;
            read_components(S, T, j["from"], Fa.components);
            read_components(S, T, j["to"], Fb.components);
            PreNaturalTransformation Tr;
            Tr.from = &Fa;
            Tr.to = &Fb;
            Tr.max_arity = (int)max_arity;
            read_components(S, T, j["homotopy"], Tr.components);
            R.rep.merge(verify_homotopy(Tr, max_arity));
        }
    } catch (const af_error& e) {
        std::string what = e.what();
        bool malformed = what.rfind("MalformedInput", 0) == 0 ||
                         what.rfind("ArityBoundUnsound", 0) == 0 ||
                         what.rfind("InvalidModel", 0) == 0 ||
                         what.rfind("NotComposable", 0) == 0;
        std::cerr << "error: " << what << "\n";
        return malformed ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return R.finish(opt);
}
