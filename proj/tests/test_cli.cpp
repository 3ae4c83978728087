#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "reprings/cli.hpp"
#include "reprings/finite_group.hpp"
#include "reprings/folding.hpp"
#include "reprings/rootdatum.hpp"

using namespace reprings;
using J = nlohmann::ordered_json;

namespace {

struct CliRun {
    int code = -1;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

J payload(const CliRun& r) {
    REQUIRE(r.code == 0);
    J doc = J::parse(r.out);
    REQUIRE(doc["status"] == "ok");
    return doc["payload"];
}

std::string write_temp(const std::string& name, const J& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << content.dump();
    return p.string();
}

} // namespace

TEST_CASE("irreducible character payloads") {
    J p = payload(run({"char", "--type", "A2", "--weight", "1,1", "--format", "json"}));
    CHECK(p["type"] == "A2");
    CHECK(p["dimension"] == 8);
    CHECK(p["terms"].size() == 7); // six outer weights plus the double zero weight

    J unit = payload(run({"char", "--type", "A2", "--weight", "0,0", "--format", "json"}));
    CHECK(unit["dimension"] == 1);
    CHECK(unit["terms"] == J::parse(R"([{"weight":[0,0],"mult":1}])"));
}

TEST_CASE("text format golden output") {
    CliRun r = run({"char", "--type", "A1", "--weight", "1"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "type: A1\n"
          "weight: [1]\n"
          "dimension: 2\n"
          "terms: [{\"weight\":[-1],\"mult\":1},{\"weight\":[1],\"mult\":1}]\n");

    CliRun w = run({"w0-check", "--type", "A1"});
    REQUIRE(w.code == 0);
    CHECK(w.out.rfind("ok: true\n", 0) == 0);
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"char", "--type", "A1"}).code == 2);             // missing --weight
    CHECK(run({"char", "--type", "A1", "--weight", "1,x"}).code == 2);
    CHECK(run({"char", "--type", "A1", "--weight", "1", "--format", "xml"}).code == 2);

    CliRun dom = run({"twining", "--type", "A2", "--sigma", "flip", "--weight", "1,0"});
    CHECK(dom.code == 1);
    CHECK(dom.err.rfind("error:", 0) == 0);
    CHECK(run({"w0-check", "--type", "B2"}).code == 1); // no bundled matrix model

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("char") != std::string::npos);
}

TEST_CASE("tensor lambda adams and decompose round trips") {
    J t = payload(run({"tensor", "--type", "A1", "--w1", "1", "--w2", "1", "--eta", "-2",
                       "--format", "json"}));
    CHECK(t["terms"] == J::parse(R"([{"weight":[2],"mult":1},{"weight":[0],"mult":1}])"));
    CHECK(t["multiplicity_check"]["equal"] == true);
    CHECK(t["multiplicity_check"]["tensor_mult"] == 1);

    J l = payload(run({"lambda", "--type", "A1", "--weight", "1", "--k", "2", "--format", "json"}));
    CHECK(l["terms"] == J::parse(R"([{"weight":[0],"mult":1}])"));

    J a = payload(run({"adams", "--type", "A1", "--weight", "1", "--n", "2", "--format", "json"}));
    CHECK(a["terms"] == J::parse(R"([{"weight":[2],"mult":1},{"weight":[0],"mult":-1}])"));

    std::string in = write_temp("reprings_cli_char.json",
                                J::parse(R"({"terms":[{"weight":[1],"mult":1},{"weight":[-1],"mult":1}]})"));
    J d = payload(run({"decompose", "--type", "A1", "--in", in, "--format", "json"}));
    CHECK(d["terms"] == J::parse(R"([{"weight":[1],"mult":1}])"));

    std::string bad = write_temp("reprings_cli_bad.json",
                                 J::parse(R"({"terms":[{"weight":[1],"mult":1}]})"));
    CHECK(run({"decompose", "--type", "A1", "--in", bad}).code == 1);
}

TEST_CASE("lattice and folding subcommands match the library") {
    RootDatum a3 = build_root_datum("A3");
    J f = payload(run({"fold", "--type", "A3", "--sigma", "flip", "--format", "json"}));
    DiagramAutomorphism sig = make_automorphism(a3.diagram.cartan, {2, 1, 0});
    FoldedData fd = fold_diagram(a3, sig);
    CHECK(f["fixed_type"] == fd.fixed_type_name);
    CHECK(f["dual_type"] == fd.dual_type_name);
    CHECK(f["orbits"] == J::parse("[[1,3],[2]]"));

    std::vector<i64> cls = a3.weight_class(a3.fundamental_weight(0));
    std::string cls_str;
    for (size_t i = 0; i < cls.size(); ++i)
        cls_str += (i ? "," : "") + std::to_string(cls[i]);
    J m = payload(run({"minuscule", "--type", "A3", "--class", cls_str, "--format", "json"}));
    CHECK(m["weight"] == J::parse("[1,0,0]"));

    RootDatum a2 = build_root_datum("A2");
    TorsionTorusElement eps =
        orbit_epsilon_product(a2, make_automorphism(a2.diagram.cartan, {1, 0}), 0);
    J e = payload(run({"epsilon-product", "--type", "A2", "--sigma", "flip", "--vertex", "1",
                       "--format", "json"}));
    CHECK(e["exponents"].get<std::vector<i64>>() == eps.exponents);
}

TEST_CASE("twisted subcommands") {
    J tw = payload(run({"twining", "--type", "A2", "--sigma", "flip", "--weight", "1,1",
                        "--format", "json"}));
    CHECK(tw["dimension"] == 2);

    J jz = payload(run({"jantzen-check", "--type", "A2", "--sigma", "flip", "--weight", "2,2",
                        "--format", "json"}));
    CHECK(jz["ok"] == true);

    J mo = payload(run({"mohrdieck", "--type", "A2", "--sigma", "flip", "--bound", "2",
                        "--format", "json"}));
    CHECK(mo["ok"] == true);
    CHECK(mo["generator_weights"] == J::parse("[[1,1]]"));

    J nk = payload(run({"no-kernel-check", "--type", "A2", "--sigma", "flip", "--format", "json"}));
    CHECK(nk["ok"] == true);

    J si = payload(run({"semidirect-irreps", "--type", "A2", "--sigma", "flip", "--bound", "1",
                        "--format", "json"}));
    CHECK(si["count"] == 5);
    CHECK(si["labels"][2]["dim"] == 6);
    CHECK(si["labels"][2]["induced"] == true);

    J ph = payload(run({"phi", "--n", "1", "--orbit", "1,1", "--format", "json"}));
    CHECK(ph["image"]["chi"] == 1);
    J pi = payload(run({"phi", "--n", "1", "--orbit", "1,0;0,1", "--format", "json"}));
    CHECK(pi["image"] == pi["input"]);

    J ps = payload(run({"phi-semiring-check", "--n", "1", "--bound", "1", "--format", "json"}));
    CHECK(ps["ok"] == true);
    CHECK(ps["pairs_checked"] == 15);

    J pa = payload(run({"phi-adams-check", "--n", "1", "--format", "json"}));
    CHECK(pa["ok"] == true);
    CHECK(pa["norm_epsilon_nontrivial"] == true);
}

TEST_CASE("cohomology subcommands with specs and JSON input") {
    J h2 = payload(run({"cohomology", "--group", "Z2", "--module", "trivial:2", "--degree", "2",
                        "--format", "json"}));
    CHECK(h2["invariant_factors"] == J::parse("[2]"));
    CHECK(h2["order"] == 2);

    J tw = payload(run({"cohomology", "--group", "Z2", "--module", "scalar:3:1,2", "--degree", "1",
                        "--format", "json"}));
    CHECK(tw["invariant_factors"] == J::array());

    // permutation quotient module of S3 supplied as a JSON fixture
    FiniteGroup s3 = symmetric_group(3);
    int swap_elt = -1, cycle_elt = -1;
    for (int e = 0; e < s3.n; ++e) {
        if (s3.element_order(e) == 2 && swap_elt < 0) swap_elt = e;
        if (s3.element_order(e) == 3 && cycle_elt < 0) cycle_elt = e;
    }
    J fixture = {
        {"group", {{"table", s3.table}, {"name", "S3"}}},
        {"module",
         {{"factors", {2, 2}},
          {"gen_action",
           {{{"element", swap_elt}, {"matrix", {{0, 1}, {1, 0}}}},
            {{"element", cycle_elt}, {"matrix", {{0, 1}, {1, 1}}}}}}}}};
    std::string in = write_temp("reprings_cli_s3.json", fixture);
    for (const std::string& deg : {"1", "2"}) {
        J h = payload(run({"cohomology", "--in", in, "--degree", deg, "--format", "json"}));
        CHECK(h["invariant_factors"] == J::array());
    }
    J v = payload(run({"h1-vanishing-check", "--in", in, "--format", "json"}));
    CHECK(v["ok"] == true);

    J r = payload(run({"restrict", "--group", "Z4", "--module", "trivial:2", "--degree", "1",
                       "--class", "1", "--subgroup", "2", "--format", "json"}));
    CHECK(r["coords"] == J::parse("[0]"));
    CHECK(r["subgroup_order"] == 2);

    J sy = payload(run({"sylow-cyclic", "--group", "S4", "--format", "json"}));
    CHECK(sy["ok"] == false);
    J za = payload(run({"zassenhaus", "--group", "S3", "--format", "json"}));
    CHECK(za["ok"] == true);
    CHECK(za["a_subgroup"].size() == 3);

    J se = payload(run({"stable-elements-check", "--group", "Z4", "--module", "trivial:4", "--p",
                        "2", "--degree", "2", "--format", "json"}));
    CHECK(se["ok"] == true);

    J ea = payload(run({"ext-autos", "--group", "Z2", "--module", "trivial:2", "--format", "json"}));
    CHECK(ea["order"] == 2);
    CHECK(ea["matches_h1"] == true);
}

TEST_CASE("reconstruction subcommands") {
    J iso = payload(run({"isomorphisms", "--type", "A2", "--bound", "1", "--lambda",
                         "--format", "json"}));
    CHECK(iso["count"] == 2);
    J none = payload(run({"isomorphisms", "--type", "A2", "--type2", "C2", "--bound", "1",
                          "--format", "json"}));
    CHECK(none["count"] == 0);

    J sub = payload(run({"subsemirings", "--type", "A1", "--bound", "2", "--format", "json"}));
    CHECK(sub["subsets"] == J::parse("[[0],[0,2],[0,1,2]]"));

    J pres = payload(run({"presentation", "--type", "A2", "--sigma", "flip", "--bound", "1",
                          "--format", "json"}));
    CHECK(pres["dims"] == J::parse("[1,1,6,8,8]"));

    J fun = payload(run({"functor-isomorphisms", "--type", "A2", "--sigma", "flip", "--bound",
                         "1", "--lambda", "--format", "json"}));
    CHECK(fun["family_classes"].size() == 1);
}

TEST_CASE("output is byte-identical across repeated runs") {
    std::vector<std::vector<std::string>> commands = {
        {"char", "--type", "A2", "--weight", "2,1", "--format", "json"},
        {"phi-semiring-check", "--n", "1", "--bound", "1", "--format", "json"},
        {"presentation", "--type", "A2", "--sigma", "flip", "--bound", "1", "--format", "json"},
        {"mohrdieck", "--type", "A3", "--sigma", "flip", "--bound", "2", "--format", "json"},
    };
    for (const auto& cmd : commands) {
        CliRun a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    // the serial sweep prints the same bytes as the parallel one
    CliRun par = run({"phi-semiring-check", "--n", "1", "--bound", "2", "--format", "json"});
    CliRun ser = run({"phi-semiring-check", "--n", "1", "--bound", "2", "--serial",
                      "--format", "json"});
    CHECK(par.out == ser.out);

    // --seed is accepted and does not change the output
    CliRun seeded = run({"char", "--type", "A2", "--weight", "2,1", "--seed", "7",
                         "--format", "json"});
    CHECK(seeded.out == run(commands[0]).out);
}
