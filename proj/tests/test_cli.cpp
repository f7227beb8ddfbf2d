#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ainfty/fixtures.hpp"
#include "ainfty/io.hpp"

using namespace af;
using nlohmann::ordered_json;

static std::pair<int, std::string> run(const std::string& args) {
    std::string cmd = std::string(AINFTY_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/* just enough JSON-schema to pin the report format we publish */
static bool schema_ok(const ordered_json& j, const ordered_json& s) {
    if (s.contains("enum")) {
        for (const auto& v : s["enum"])
            if (v == j) return true;
        return false;
    }
    if (s.contains("type")) {
        const std::string t = s["type"];
        if (t == "object" && !j.is_object()) return false;
        if (t == "array" && !j.is_array()) return false;
        if (t == "string" && !j.is_string()) return false;
        if (t == "boolean" && !j.is_boolean()) return false;
        if (t == "integer" && !j.is_number_integer() && !j.is_number_unsigned())
            return false;
        if (t == "number" && !j.is_number()) return false;
    }
    if (s.contains("minimum") && j.is_number() &&
        j.get<double>() < s["minimum"].get<double>())
        return false;
    if (j.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!j.contains(r.get<std::string>())) return false;
        const auto& props = s.contains("properties") ? s["properties"]
                                                     : ordered_json::object();
        for (const auto& [k, v] : j.items()) {
            if (props.contains(k)) {
                if (!schema_ok(v, props[k])) return false;
            } else if (s.contains("additionalProperties") &&
                       s["additionalProperties"] == false) {
                return false;
            }
        }
    }
    if (j.is_array() && s.contains("items"))
        for (const auto& v : j)
            if (!schema_ok(v, s["items"])) return false;
    return true;
}

TEST_CASE("verify: pass, violation, malformed") {
    save_category_file(linear_quiver_category(2), "cli_a2.json");
    auto [rc, out] = run("verify cli_a2.json --max-arity 6");
    CHECK(rc == 0);
    CHECK(out.find("PASS") != std::string::npos);

    // exactly one associativity word sees the missing composite
    Category bad = linear_quiver_category(4);
    bad.mu.erase({bad.gen("p0_1"), bad.gen("p1_2")});
    save_category_file(bad, "cli_bad.json");
    auto [rc1, out1] = run("verify cli_bad.json");
    CHECK(rc1 == 1);
    std::size_t count = 0, at = 0;
    while ((at = out1.find("violation at", at)) != std::string::npos) ++count, ++at;
    CHECK(count == 1);

    CHECK(run("verify cli_missing.json").first == 2);
    std::ofstream("cli_junk.json") << "{ not json";
    CHECK(run("verify cli_junk.json").first == 2);
    CHECK(run("frobnicate cli_a2.json").first == 2);
}

TEST_CASE("quotient of the unit category by itself is acyclic end to end") {
    save_category_file(linear_quiver_category(1), "cli_unit.json");
    auto [rc, out] =
        run("quotient cli_unit.json --subcat L0 --max-word-length 7 -o cli_q.json");
    REQUIRE(rc == 0);
    auto [rc2, out2] = run("homology cli_q.json L0 L0 --degrees -5..0 --json");
    REQUIRE(rc2 == 0);
    ordered_json rep = ordered_json::parse(out2);
    for (const auto& e : rep["tables"][0]["entries"]) CHECK(e["dim"] == 0);
}

TEST_CASE("fixture output round-trips byte-identically") {
    for (const std::string& spec :
         {std::string("quiver --n 4"), std::string("disk"), std::string("gauge --which 2"),
          std::string("toy-related")}) {
        std::string kind = spec.substr(0, spec.find(' '));
        auto [rc, out] = run("fixture " + spec + " -o cli_fx.json");
        REQUIRE(rc == 0);
        std::string text = slurp("cli_fx.json");
        Category C = load_category_file("cli_fx.json");
        CHECK(category_to_string(C) == text);
        auto [rc2, out2] = run("fixture " + spec + " -o cli_fx2.json");
        REQUIRE(rc2 == 0);
        CHECK(slurp("cli_fx2.json") == text);
    }
    CHECK(run("fixture nonsense").first == 2);
}

TEST_CASE("json reports validate against the published schema") {
    ordered_json schema = ordered_json::parse(slurp(SCHEMA_PATH));
    save_category_file(linear_quiver_category(2), "cli_a2.json");
    for (const std::string& args :
         {std::string("verify cli_a2.json --json"),
          std::string("homology cli_a2.json L0 L1 --degrees -2..1 --json"),
          std::string("hochschild cli_a2.json --max-length 4 --degrees -3..0 --json"),
          std::string("action cli_a2.json --epsilon 1/16 --json")}) {
        CAPTURE(args);
        auto [rc, out] = run(args);
        CHECK(rc == 0);
        ordered_json rep = ordered_json::parse(out);
        CHECK(schema_ok(rep, schema));
        CHECK(!schema_ok(ordered_json{{"command", "x"}}, schema));  // sanity
    }
}

TEST_CASE("unstable entries gate the exit code") {
    save_category_file(disk_with_stops_category(disk_model_s2()), "cli_s2.json");
    std::string args = "hochschild cli_s2.json --max-length 2 --degrees -2..0";
    auto [rc, out] = run(args);
    CHECK(rc == 1);
    CHECK(out.find("UNSTABLE") != std::string::npos);
    CHECK(run(args + " --allow-unstable").first == 0);
}

TEST_CASE("retract command reports result, iterations, witness") {
    ToyRetraction toy = toy_retraction_fixture();
    save_category_file(*toy.base, "cli_toybase.json");
    std::ofstream("cli_delta.json")
        << R"([{"input": "a", "outputs": ["w:v|u"]},)"
        << R"( {"input": "w:v|eP|u", "outputs": ["w:v|eP|eP|u"]},)"
        << R"( {"input": "w:v|eP|eP|eP|u", "outputs": ["w:v|eP|eP|eP|eP|u"]}])";
    auto [rc, out] = run(
        "retract cli_toybase.json --subcat P --max-word-length 5 --sigma s0 "
        "--delta cli_delta.json --element a --json");
    REQUIRE(rc == 0);
    ordered_json rep = ordered_json::parse(out);
    CHECK(rep["result"]["result"].empty());  // a retracts to zero
    CHECK(rep["result"]["iterations"].get<int>() <= 5);
    CHECK(!rep["result"]["witness"].empty());
}

TEST_CASE("wlim emission checks out") {
    save_category_file(linear_quiver_category(2), "cli_a2.json");
    auto [rc, out] =
        run("wlim cli_a2.json --stabilization 4 -o cli_wlim.json --check");
    CHECK(rc == 0);
    Category W = load_category_file("cli_wlim.json");
    CHECK(W.gens.size() == 3 * 7);
}

TEST_CASE("functor and homotopy check commands") {
    GaugeFixture fx = gauge_fixture(2);
    save_category_file(fx.base, "cli_gbase.json");
    save_category_file(fx.twisted, "cli_gtw.json");
    ordered_json f;
    f["source_file"] = "cli_gbase.json";
    f["target_file"] = "cli_gtw.json";
    f["object_map"] = ordered_json::object();
    for (const std::string& o : fx.base.objects) f["object_map"][o] = o;
    f["components"] = ordered_json::array();
    for (GenId g = 0; g < fx.base.gens.size(); ++g)
        f["components"].push_back({{"inputs", {fx.base.gens[g].name}},
                                   {"outputs", {fx.base.gens[g].name}}});
    // conventional order in files: mu^2(y, x) lists y first
    f["components"].push_back({{"inputs", {"y", "x"}}, {"outputs", {"m"}}});
    std::ofstream("cli_functor.json") << f.dump(2);
    CHECK(run("functor-check cli_functor.json --max-arity 4").first == 0);

    f["components"].erase(f["components"].size() - 1);  // drop the g^2 component
    std::ofstream("cli_functor_bad.json") << f.dump(2);
    auto [rc, out] = run("functor-check cli_functor_bad.json --max-arity 4");
    CHECK(rc == 1);

    Category H = gauge_fixture(1).base;
    save_category_file(H, "cli_uw.json");
    ordered_json h;
    h["source_file"] = "cli_uw.json";
    h["target_file"] = "cli_uw.json";
    ordered_json ident = ordered_json::array();
    for (const auto& g : H.gens)
        ident.push_back({{"inputs", {g.name}}, {"outputs", {g.name}}});
    h["from"] = ident;
    h["to"] = ordered_json::array();  // the zero functor
    h["homotopy"] = ordered_json::array();
    h["homotopy"].push_back({{"inputs", {"w"}}, {"outputs", {"u"}}});
    std::ofstream("cli_homotopy.json") << h.dump(2);
    CHECK(run("homotopy-check cli_homotopy.json --max-arity 4").first == 0);

    h["homotopy"] = ordered_json::array();  // without T the functors differ
    std::ofstream("cli_homotopy_bad.json") << h.dump(2);
    CHECK(run("homotopy-check cli_homotopy_bad.json --max-arity 4").first == 1);
}
