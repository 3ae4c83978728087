#include "reprings/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "reprings/cohomology.hpp"
#include "reprings/lambda.hpp"
#include "reprings/matmodel.hpp"
#include "reprings/reconstruct.hpp"

namespace reprings {

namespace {

using J = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<i64> parse_ivec(const std::string& s) {
    std::vector<i64> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("expected a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

// vertex permutation: "id", "flip", or a comma list of 1-based images
DiagramAutomorphism parse_sigma(const RootDatum& d, const std::string& s) {
    int r = d.rank();
    if (s.empty() || s == "id") return identity_automorphism(r);
    std::vector<int> perm(static_cast<size_t>(r));
    if (s == "flip") {
        for (int i = 0; i < r; ++i) perm[size_t(i)] = r - 1 - i;
    } else {
        std::vector<i64> v = parse_ivec(s);
        if (int(v.size()) != r) throw UsageError("permutation must list all " + std::to_string(r) + " vertices");
        for (int i = 0; i < r; ++i) {
            if (v[size_t(i)] < 1 || v[size_t(i)] > r)
                throw UsageError("vertex images are 1-based Bourbaki indices");
            perm[size_t(i)] = int(v[size_t(i)]) - 1;
        }
    }
    return make_automorphism(d.diagram.cartan, perm);
}

PhiVariant parse_variant(const std::string& v) {
    if (v == "standard") return PhiVariant::standard;
    if (v == "constant-sign") return PhiVariant::constant_sign;
    if (v == "identity") return PhiVariant::identity;
    throw UsageError("unknown variant '" + v + "' (standard, constant-sign, identity)");
}

J weight_json(const Weight& w) { return J(w); }

J decomposition_json(const IrreducibleDecomposition& dec) {
    J out = J::array();
    for (const auto& [w, m] : dec) out.push_back(J{{"weight", weight_json(w)}, {"mult", m}});
    return out;
}

J terms_json(const std::map<Weight, i64>& terms) {
    J out = J::array();
    for (const auto& [w, m] : terms) out.push_back(J{{"weight", weight_json(w)}, {"mult", m}});
    return out;
}

J label_json(const IrreducibleLabel& l) {
    J orbit = J::array();
    for (const Weight& w : l.orbit) orbit.push_back(weight_json(w));
    return J{{"orbit", orbit}, {"chi", l.chi}, {"induced", l.induced()}};
}

J entry_json(const DecompositionEntry& e) {
    J terms = J::array();
    for (const auto& [l, m] : e.terms) terms.push_back(J{{"label", l}, {"mult", m}});
    return J{{"escaped", e.escaped}, {"terms", terms}};
}

J presentation_json(const LambdaSemiringPresentation& p) {
    J labels = J::array();
    for (const auto& l : p.labels) labels.push_back(label_json(l));
    J products = J::array();
    for (const auto& row : p.products) {
        J jrow = J::array();
        for (const auto& e : row) jrow.push_back(entry_json(e));
        products.push_back(jrow);
    }
    auto list = [](const std::vector<DecompositionEntry>& v) {
        J out = J::array();
        for (const auto& e : v) out.push_back(entry_json(e));
        return out;
    };
    return J{{"source", p.source},   {"bound", p.bound},
             {"labels", labels},     {"dims", p.dims},
             {"unit", p.unit},       {"products", products},
             {"lambda2", list(p.lambda2)}, {"psi2", list(p.psi2)},
             {"psi3", list(p.psi3)}};
}

IrreducibleLabel parse_label(const std::string& orbit_str, i64 chi) {
    IrreducibleLabel l;
    std::stringstream ss(orbit_str);
    std::string tok;
    while (std::getline(ss, tok, ';')) l.orbit.push_back(parse_ivec(tok));
    if (l.orbit.empty()) throw UsageError("--orbit expects semicolon-separated weights, e.g. '1,0;0,1'");
    std::sort(l.orbit.begin(), l.orbit.end());
    l.chi = chi;
    return l;
}

J load_json_file(const std::string& path) {
    if (path.empty()) throw UsageError("this subcommand needs --in <path>");
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open input file: " + path);
    try {
        J j;
        f >> j;
        return j;
    } catch (const std::exception& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
}

FiniteGroup group_from_json(const J& j) {
    std::string name = j.value("name", std::string());
    if (j.contains("table")) return group_from_table(j["table"].get<std::vector<int>>(), name);
    if (j.contains("perm_gens"))
        return group_from_permutations(j["points"].get<int>(),
                                       j["perm_gens"].get<std::vector<std::vector<int>>>(), name);
    throw UsageError("group JSON needs a 'table' or 'perm_gens' field");
}

// "Z<n>"/"C<n>", "D<n>", "S<n>", "A4", "Q8", or "<p>:<q>:<k>" for Z/p x| Z/q
FiniteGroup parse_group(const std::string& spec, const std::string& in_path) {
    if (spec.empty()) {
        J j = load_json_file(in_path);
        return group_from_json(j.contains("group") ? j["group"] : j);
    }
    try {
        if (spec.find(':') != std::string::npos) {
            std::vector<i64> v;
            std::stringstream ss(spec);
            std::string tok;
            while (std::getline(ss, tok, ':')) v.push_back(std::stoll(tok));
            if (v.size() != 3) throw UsageError("semidirect spec is p:q:k");
            return semidirect_cyclic(int(v[0]), int(v[1]), int(v[2]));
        }
        char kind = spec[0];
        int n = spec.size() > 1 ? std::stoi(spec.substr(1)) : 0;
        if (kind == 'Z' || kind == 'C') return cyclic_group(n);
        if (kind == 'D') return dihedral_group(n);
        if (kind == 'S') return symmetric_group(n);
        if (spec == "A4") return alternating_group_4();
        if (spec == "Q8") return quaternion_group_8();
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad group spec: ") + e.what());
    }
    throw UsageError("unknown group spec '" + spec + "' (Z<n>, D<n>, S<n>, A4, Q8, p:q:k, or --in)");
}

IntMat mat_from_json(const J& j) {
    int rows = int(j.size());
    int cols = rows ? int(j[0].size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) m.at(i, k) = j[size_t(i)][size_t(k)].get<i64>();
    return m;
}

// "trivial:d1,d2,...", "scalar:d:a0,a1,...", or module JSON from --in
GModule parse_module(const FiniteGroup& g, const std::string& spec, const std::string& in_path) {
    if (spec.rfind("trivial:", 0) == 0)
        return trivial_module(g, parse_ivec(spec.substr(8)));
    if (spec.rfind("scalar:", 0) == 0) {
        std::string rest = spec.substr(7);
        size_t colon = rest.find(':');
        if (colon == std::string::npos) throw UsageError("scalar module spec is scalar:d:a0,a1,...");
        i64 d = std::stoll(rest.substr(0, colon));
        std::vector<i64> scalars = parse_ivec(rest.substr(colon + 1));
        if (int(scalars.size()) != g.n)
            throw UsageError("scalar module needs one value per group element (" +
                             std::to_string(g.n) + ")");
        std::vector<IntMat> action;
        for (i64 a : scalars) {
            IntMat m(1, 1);
            m.at(0, 0) = a;
            action.push_back(m);
        }
        return make_module(g, {d}, std::move(action));
    }
    if (!spec.empty()) throw UsageError("unknown module spec '" + spec + "'");
    J root = load_json_file(in_path);
    const J& j = root.contains("module") ? root["module"] : root;
    if (!j.contains("factors")) throw UsageError("module JSON needs a 'factors' field");
    std::vector<i64> factors = j["factors"].get<std::vector<i64>>();
    if (j.contains("gen_action")) {
        std::vector<std::pair<int, IntMat>> gens;
        for (const J& e : j["gen_action"])
            gens.emplace_back(e["element"].get<int>(), mat_from_json(e["matrix"]));
        return module_from_generators(g, factors, gens);
    }
    if (j.contains("action")) {
        std::vector<IntMat> action;
        for (const J& e : j["action"]) action.push_back(mat_from_json(e));
        return make_module(g, factors, std::move(action));
    }
    throw UsageError("module JSON needs an 'action' or 'gen_action' field");
}

// some dominant weight in the P/Q class chi (Smith-basis coordinates)
Weight weight_in_class(const RootDatum& d, const std::vector<i64>& chi) {
    i64 m = d.fundamental_group_order();
    Weight w(size_t(d.rank()), 0);
    while (true) {
        if (d.weight_class(w) == chi) return w;
        size_t i = 0;
        while (i < w.size() && w[i] == m) w[i++] = 0;
        if (i == w.size()) throw std::invalid_argument("no weight found in the requested class");
        ++w[i];
    }
}

void render_text(std::ostream& out, const J& payload) {
    for (const auto& [key, value] : payload.items()) {
        out << key << ": ";
        if (value.is_string())
            out << value.get<std::string>();
        else
            out << value.dump();
        out << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact representation lambda-semiring calculator (Bourbaki vertex numbering)",
                 "reprings"};
    app.require_subcommand(1);

    std::string format = "text", in_path;
    i64 seed = 0;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", seed, "accepted for interface stability; ignored");
        sub->add_option("--in", in_path, "JSON input file");
        return sub;
    };

    std::string type_str, type2_str, sigma_str, sigma2_str, weight_str, w1_str, w2_str, eta_str;
    std::string cls_str, group_str, module_str, subgroup_str, orbit_str, variant_str = "standard";
    i64 k = 2, n_adams = 2, bound = 1, chi = 0, prime = 2;
    int n_phi = 1, vertex = 1, degree = 1;
    bool lambda_flag = false, serial_flag = false, co_flag = false;

    J payload;

    auto sub = [&](const std::string& name, const std::string& desc) {
        return add_common(app.add_subcommand(name, desc));
    };

    // ---- connected-group character commands ----
    CLI::App* c_char = sub("char", "weight multiplicities of an irreducible character");
    c_char->add_option("--type", type_str)->required();
    c_char->add_option("--weight", weight_str, "dominant weight, fundamental coordinates")->required();
    c_char->callback([&] {
        RootDatum d = build_root_datum(type_str);
        FormalCharacter x = irreducible_character(d, parse_ivec(weight_str));
        payload = J{{"type", type_str},
                    {"weight", weight_json(parse_ivec(weight_str))},
                    {"dimension", x.dimension()},
                    {"terms", terms_json(x.terms)}};
    });

    CLI::App* c_tensor = sub("tensor", "decompose a tensor product of two irreducibles");
    c_tensor->add_option("--type", type_str)->required();
    c_tensor->add_option("--w1", w1_str)->required();
    c_tensor->add_option("--w2", w2_str)->required();
    c_tensor->add_option("--eta", eta_str,
                         "also report the multiplicity comparison at omega1+omega2+eta");
    c_tensor->callback([&] {
        RootDatum d = build_root_datum(type_str);
        Weight a = parse_ivec(w1_str), b = parse_ivec(w2_str);
        FormalCharacter prod = irreducible_character(d, a) * irreducible_character(d, b);
        payload = J{{"type", type_str},
                    {"w1", weight_json(a)},
                    {"w2", weight_json(b)},
                    {"dimension", prod.dimension()},
                    {"terms", decomposition_json(decompose(prod))}};
        if (!eta_str.empty()) {
            PrvResult r = prv_multiplicity_check(d, a, b, parse_ivec(eta_str));
            payload["multiplicity_check"] = J{{"tensor_mult", r.tensor_mult},
                                              {"pbw_dim", r.pbw_dim},
                                              {"equal", r.equal},
                                              {"dominant_enough", r.dominant_enough}};
        }
    });

    CLI::App* c_dec = sub("decompose", "decompose a formal character given as JSON terms");
    c_dec->add_option("--type", type_str)->required();
    c_dec->callback([&] {
        RootDatum d = build_root_datum(type_str);
        J j = load_json_file(in_path);
        FormalCharacter x;
        x.datum = &d;
        for (const J& t : j.at("terms"))
            x.add_term(t.at("weight").get<Weight>(), t.at("mult").get<i64>());
        if (!is_weyl_invariant(x)) throw std::invalid_argument("input character is not Weyl-invariant");
        payload = J{{"type", type_str},
                    {"dimension", x.dimension()},
                    {"terms", decomposition_json(decompose(x))}};
    });

    CLI::App* c_lam = sub("lambda", "exterior power of an irreducible, decomposed");
    c_lam->add_option("--type", type_str)->required();
    c_lam->add_option("--weight", weight_str)->required();
    c_lam->add_option("--k", k, "exterior-power degree");
    c_lam->callback([&] {
        RootDatum d = build_root_datum(type_str);
        FormalCharacter x = exterior_power(irreducible_character(d, parse_ivec(weight_str)), k);
        payload = J{{"type", type_str},
                    {"weight", weight_json(parse_ivec(weight_str))},
                    {"k", k},
                    {"dimension", x.dimension()},
                    {"terms", decomposition_json(decompose(x))}};
    });

    CLI::App* c_adams = sub("adams", "Adams operation on an irreducible, decomposed (virtual)");
    c_adams->add_option("--type", type_str)->required();
    c_adams->add_option("--weight", weight_str)->required();
    c_adams->add_option("--n", n_adams, "Adams degree");
    c_adams->callback([&] {
        RootDatum d = build_root_datum(type_str);
        FormalCharacter x = adams(irreducible_character(d, parse_ivec(weight_str)), n_adams);
        payload = J{{"type", type_str},
                    {"weight", weight_json(parse_ivec(weight_str))},
                    {"n", n_adams},
                    {"terms", decomposition_json(decompose(x))}};
    });

    // ---- diagram / lattice commands ----
    CLI::App* c_fold = sub("fold", "fixed and folded types of a diagram automorphism");
    c_fold->add_option("--type", type_str)->required();
    c_fold->add_option("--sigma", sigma_str, "id, flip, or 1-based image list")->required();
    c_fold->callback([&] {
        RootDatum d = build_root_datum(type_str);
        FoldedData f = fold_diagram(d, parse_sigma(d, sigma_str));
        J orbits = J::array();
        for (const auto& o : f.orbits) {
            J jo = J::array();
            for (int v : o) jo.push_back(v + 1);
            orbits.push_back(jo);
        }
        payload = J{{"type", type_str},
                    {"fixed_type", f.fixed_type_name},
                    {"dual_type", f.dual_type_name},
                    {"orbits", orbits},
                    {"exceptional", f.exceptional}};
    });

    CLI::App* c_min = sub("minuscule", "minuscule weight representing a class of P/Q");
    c_min->add_option("--type", type_str)->required();
    c_min->add_option("--class", cls_str, "class coordinates in the Smith basis")->required();
    c_min->callback([&] {
        RootDatum d = build_root_datum(type_str);
        std::vector<i64> cls = parse_ivec(cls_str);
        Weight probe = weight_in_class(d, cls);
        std::vector<DiagramAutomorphism> stab;
        for (const auto& a : all_diagram_automorphisms(d.diagram.cartan))
            if (d.weight_class(a.apply(probe)) == cls) stab.push_back(a);
        Weight w = minuscule_lift(d, cls, stab);
        payload = J{{"type", type_str},
                    {"class", cls},
                    {"stabilizer_order", i64(stab.size())},
                    {"weight", weight_json(w)}};
    });

    CLI::App* c_eps = sub("epsilon-product", "orbit product of the order-2 coweight values");
    c_eps->add_option("--type", type_str)->required();
    c_eps->add_option("--sigma", sigma_str)->required();
    c_eps->add_option("--vertex", vertex, "1-based Bourbaki vertex")->required();
    c_eps->callback([&] {
        RootDatum d = build_root_datum(type_str);
        TorsionTorusElement t = orbit_epsilon_product(d, parse_sigma(d, sigma_str), vertex - 1);
        payload = J{{"type", type_str},
                    {"vertex", vertex},
                    {"exponents", t.exponents},
                    {"trivial", t.is_trivial()}};
    });

    // ---- twisted commands ----
    CLI::App* c_twin = sub("twining", "twining character of an invariant dominant weight");
    c_twin->add_option("--type", type_str)->required();
    c_twin->add_option("--sigma", sigma_str)->required();
    c_twin->add_option("--weight", weight_str)->required();
    c_twin->callback([&] {
        RootDatum d = build_root_datum(type_str);
        TwistedSetting s = make_twisted_setting(d, parse_sigma(d, sigma_str));
        TwistedClassFunction t = twining_character(s, parse_ivec(weight_str));
        payload = J{{"type", type_str},
                    {"weight", weight_json(parse_ivec(weight_str))},
                    {"folded_type", s.torus_datum().diagram.type_name()},
                    {"dimension", t.dimension()},
                    {"terms", terms_json(t.terms)}};
    });

    CLI::App* c_jan = sub("jantzen-check", "twining character equals the folded irreducible");
    c_jan->add_option("--type", type_str)->required();
    c_jan->add_option("--sigma", sigma_str)->required();
    c_jan->add_option("--weight", weight_str)->required();
    c_jan->callback([&] {
        RootDatum d = build_root_datum(type_str);
        TwistedSetting s = make_twisted_setting(d, parse_sigma(d, sigma_str));
        payload = J{{"type", type_str},
                    {"weight", weight_json(parse_ivec(weight_str))},
                    {"ok", jantzen_check(s, parse_ivec(weight_str))}};
    });

    CLI::App* c_moh = sub("mohrdieck", "generators of the twisted invariant functions");
    c_moh->add_option("--type", type_str)->required();
    c_moh->add_option("--sigma", sigma_str)->required();
    c_moh->add_option("--bound", bound, "degree bound for the generation check");
    c_moh->callback([&] {
        RootDatum d = build_root_datum(type_str);
        TwistedSetting s = make_twisted_setting(d, parse_sigma(d, sigma_str));
        MohrdieckResult r = mohrdieck_invariants(s, bound);
        J gens = J::array();
        for (const Weight& w : r.generator_weights) gens.push_back(weight_json(w));
        payload = J{{"type", type_str}, {"bound", bound}, {"ok", r.ok}, {"generator_weights", gens}};
        if (r.witness) payload["witness"] = terms_json(r.witness->terms);
    });

    CLI::App* c_semi = sub("semidirect-irreps", "irreducible labels of the cyclic extension");
    c_semi->add_option("--type", type_str)->required();
    c_semi->add_option("--sigma", sigma_str)->required();
    c_semi->add_option("--bound", bound, "highest-weight coordinate bound");
    c_semi->callback([&] {
        RootDatum d = build_root_datum(type_str);
        DisconnectedGroup g = cyclic_extension(d, parse_sigma(d, sigma_str));
        J labels = J::array();
        for (const IrreducibleLabel& l : semidirect_irreducibles(g, bound)) {
            i64 dim = 0;
            for (const Weight& w : l.orbit) dim += weyl_dimension(d, w);
            J jl = label_json(l);
            jl["dim"] = dim;
            labels.push_back(jl);
        }
        payload = J{{"type", type_str}, {"bound", bound}, {"count", i64(labels.size())},
                    {"labels", labels}};
    });

    CLI::App* c_phi = sub("phi", "image of a label under the exotic automorphism");
    c_phi->add_option("--n", n_phi, "phi is defined on Z/2 |x SL(2n+1)")->required();
    c_phi->add_option("--orbit", orbit_str, "semicolon-separated weights, e.g. '1,0;0,1'")->required();
    c_phi->add_option("--chi", chi, "component-group character index for stable labels");
    c_phi->add_option("--variant", variant_str, "standard, constant-sign, or identity");
    c_phi->callback([&] {
        IrreducibleLabel l = parse_label(orbit_str, chi);
        IrreducibleLabel img = phi_automorphism(n_phi, l, parse_variant(variant_str));
        payload = J{{"n", n_phi}, {"input", label_json(l)}, {"image", label_json(img)}};
    });

    CLI::App* c_psc = sub("phi-semiring-check", "phi respects products of all bounded labels");
    c_psc->add_option("--n", n_phi)->required();
    c_psc->add_option("--bound", bound, "highest-weight coordinate bound");
    c_psc->add_option("--variant", variant_str);
    c_psc->add_flag("--serial", serial_flag, "disable the parallel sweep");
    c_psc->callback([&] {
        PhiSemiringCheck r = check_phi_semiring(n_phi, bound, parse_variant(variant_str), !serial_flag);
        payload = J{{"n", n_phi}, {"bound", bound}, {"ok", r.ok}, {"pairs_checked", r.pairs_checked}};
        if (r.witness)
            payload["witness"] = J{{"first", label_json(r.witness->first)},
                                   {"second", label_json(r.witness->second)}};
    });

    CLI::App* c_pac = sub("phi-adams-check", "phi fails to commute with the squaring operation");
    c_pac->add_option("--n", n_phi)->required();
    c_pac->add_option("--variant", variant_str);
    c_pac->callback([&] {
        PhiAdamsCheck r = check_phi_adams(n_phi, parse_variant(variant_str));
        payload = J{{"n", n_phi},
                    {"ok", r.ok},
                    {"norm_epsilon_exponents", r.norm_epsilon_exponents},
                    {"norm_epsilon_nontrivial", r.norm_epsilon_nontrivial}};
        if (r.witness) payload["witness"] = label_json(*r.witness);
    });

    CLI::App* c_nk = sub("no-kernel-check", "invariant generators separate the twisted center");
    c_nk->add_option("--type", type_str)->required();
    c_nk->add_option("--sigma", sigma_str)->required();
    c_nk->callback([&] {
        RootDatum d = build_root_datum(type_str);
        payload = J{{"type", type_str}, {"ok", no_kernel_check(d, parse_sigma(d, sigma_str))}};
    });

    CLI::App* c_w0 = sub("w0-check", "the lifted longest element squares to the canonical torus element");
    c_w0->add_option("--type", type_str)->required();
    c_w0->callback([&] {
        W0SquareCheck c = w0_square_check(standard_matrix_model(type_str));
        payload = J{{"ok", c.ok},
                    {"type", type_str},
                    {"words_agree", c.words_agree},
                    {"square_matches", c.square_matches},
                    {"word_low", c.word_low},
                    {"word_high", c.word_high},
                    {"exponents", c.exponents}};
    });

    // ---- finite-group cohomology commands ----
    auto add_group = [&](CLI::App* s, bool with_module) {
        s->add_option("--group", group_str, "Z<n>, D<n>, S<n>, A4, Q8, p:q:k, or use --in");
        if (with_module)
            s->add_option("--module", module_str, "trivial:d1,d2,..., scalar:d:a0,..., or use --in");
    };

    CLI::App* c_coh = sub("cohomology", "invariant factors of a group cohomology module");
    add_group(c_coh, true);
    c_coh->add_option("--degree", degree)->required();
    c_coh->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        GModule z = parse_module(g, module_str, in_path);
        CohomologyResult h = cohomology_group(g, z, degree);
        payload = J{{"group", g.name.empty() ? std::to_string(g.n) + "-element group" : g.name},
                    {"degree", degree},
                    {"invariant_factors", h.invariant_factors},
                    {"order", h.order()}};
    });

    CLI::App* c_res = sub("restrict", "restriction (or transfer) of a cohomology class");
    add_group(c_res, true);
    c_res->add_option("--degree", degree)->required();
    c_res->add_option("--class", cls_str, "class coordinates")->required();
    c_res->add_option("--subgroup", subgroup_str, "generating elements of the subgroup")->required();
    c_res->add_flag("--co", co_flag, "corestrict from the subgroup instead");
    c_res->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        GModule z = parse_module(g, module_str, in_path);
        std::vector<i64> gens = parse_ivec(subgroup_str);
        std::vector<int> elems;
        for (i64 e : gens) elems.push_back(int(e));
        Subgroup s = make_subgroup(g, z, g.generated_subgroup(elems));
        CohomologyResult hg = cohomology_group(g, z, degree);
        CohomologyResult hs = cohomology_group(s.group, s.module, degree);
        std::vector<i64> coords = parse_ivec(cls_str);
        std::vector<i64> image = co_flag ? corestrict_class(g, z, hg, s, hs, coords)
                                         : restrict_class(g, hg, coords, s, hs);
        payload = J{{"degree", degree},
                    {"direction", co_flag ? "corestriction" : "restriction"},
                    {"parent_invariant_factors", hg.invariant_factors},
                    {"subgroup_invariant_factors", hs.invariant_factors},
                    {"subgroup_order", i64(s.group.n)},
                    {"coords", image}};
    });

    CLI::App* c_syl = sub("sylow-cyclic", "all Sylow subgroups are cyclic");
    add_group(c_syl, false);
    c_syl->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        payload = J{{"group", g.name}, {"order", i64(g.n)}, {"ok", sylow_cyclic_check(g)}};
    });

    CLI::App* c_zas = sub("zassenhaus", "split the group into coprime cyclic factors");
    add_group(c_zas, false);
    c_zas->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        ZassenhausResult r = zassenhaus_decompose(g);
        payload = J{{"group", g.name}, {"order", i64(g.n)}, {"ok", r.ok}};
        if (r.ok) {
            payload["a_subgroup"] = r.a_subgroup;
            payload["b_subgroup"] = r.b_subgroup;
            payload["a_generator"] = r.a_generator;
            payload["b_generator"] = r.b_generator;
        }
    });

    CLI::App* c_h1v = sub("h1-vanishing-check", "degree-1 classes vanishing on cyclic subgroups are zero");
    add_group(c_h1v, true);
    c_h1v->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        GModule z = parse_module(g, module_str, in_path);
        VanishingCheck r = cyclic_sylow_vanishing_check(g, z);
        payload = J{{"group", g.name}, {"ok", r.ok}, {"classes_checked", r.classes_checked}};
        if (r.counterexample) payload["counterexample"] = *r.counterexample;
    });

    CLI::App* c_sec = sub("stable-elements-check", "Sylow restriction image equals the stable classes");
    add_group(c_sec, true);
    c_sec->add_option("--p", prime)->required();
    c_sec->add_option("--degree", degree)->required();
    c_sec->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        GModule z = parse_module(g, module_str, in_path);
        StableElementsCheck r = stable_elements_check(g, z, prime, degree);
        payload = J{{"group", g.name}, {"p", prime}, {"degree", degree},
                    {"ok", r.ok}, {"image_size", r.image_size}, {"stable_size", r.stable_size}};
    });

    CLI::App* c_ext = sub("ext-autos", "automorphism count of the extension of a degree-2 class");
    add_group(c_ext, true);
    c_ext->add_option("--class", cls_str, "degree-2 class coordinates (default zero)");
    c_ext->callback([&] {
        FiniteGroup g = parse_group(group_str, in_path);
        GModule z = parse_module(g, module_str, in_path);
        CohomologyResult h2 = cohomology_group(g, z, 2);
        std::vector<i64> coords = parse_ivec(cls_str);
        coords.resize(h2.invariant_factors.size(), 0);
        ExtensionAutomorphisms r = extension_automorphisms(g, z, h2, coords);
        payload = J{{"group", g.name}, {"class", coords}, {"order", r.order},
                    {"h1_order", r.h1_order}, {"matches_h1", r.matches_h1}};
    });

    // ---- reconstruction commands ----
    auto presentation_for = [&](const std::string& type, const std::string& sigma) {
        RootDatum d = build_root_datum(type);
        DiagramAutomorphism a = parse_sigma(d, sigma);
        if (a.is_identity()) return build_presentation(d, bound);
        return build_presentation(cyclic_extension(d, a), bound);
    };

    CLI::App* c_pres = sub("presentation", "truncated lambda-semiring tables of a group");
    c_pres->add_option("--type", type_str)->required();
    c_pres->add_option("--sigma", sigma_str, "component-group generator (default id)");
    c_pres->add_option("--bound", bound);
    c_pres->callback([&] { payload = presentation_json(presentation_for(type_str, sigma_str)); });

    CLI::App* c_subs = sub("subsemirings", "product-closed label subsets of a presentation");
    c_subs->add_option("--type", type_str)->required();
    c_subs->add_option("--sigma", sigma_str);
    c_subs->add_option("--bound", bound);
    c_subs->callback([&] {
        LambdaSemiringPresentation p = presentation_for(type_str, sigma_str);
        SubsemiringResult r = normal_subsemirings(p);
        payload = J{{"source", p.source}, {"bound", bound},
                    {"subsets", r.subsets}, {"provisional", r.provisional}};
    });

    CLI::App* c_iso = sub("isomorphisms", "label bijections matching the semiring tables");
    c_iso->add_option("--type", type_str)->required();
    c_iso->add_option("--sigma", sigma_str);
    c_iso->add_option("--type2", type2_str, "second group (default: same as --type)");
    c_iso->add_option("--sigma2", sigma2_str);
    c_iso->add_option("--bound", bound);
    c_iso->add_flag("--lambda", lambda_flag, "also require the exterior-square table to match");
    c_iso->callback([&] {
        LambdaSemiringPresentation a = presentation_for(type_str, sigma_str);
        LambdaSemiringPresentation b =
            presentation_for(type2_str.empty() ? type_str : type2_str,
                             type2_str.empty() ? sigma_str : sigma2_str);
        auto isos = find_isomorphisms(a, b, lambda_flag);
        payload = J{{"source", a.source}, {"target", b.source}, {"bound", bound},
                    {"require_lambda", lambda_flag}, {"count", i64(isos.size())},
                    {"isomorphisms", isos}};
    });

    CLI::App* c_fun = sub("functor-isomorphisms",
                          "equivariant family classes between open-subgroup functor data");
    c_fun->add_option("--type", type_str)->required();
    c_fun->add_option("--sigma", sigma_str);
    c_fun->add_option("--bound", bound);
    c_fun->add_flag("--lambda", lambda_flag);
    c_fun->callback([&] {
        RootDatum d = build_root_datum(type_str);
        DiagramAutomorphism a = parse_sigma(d, sigma_str);
        OpenSubgroupFunctorData f = a.is_identity()
                                        ? open_subgroup_functor(d, bound)
                                        : open_subgroup_functor(cyclic_extension(d, a), bound);
        FunctorIsomorphisms iso = functor_isomorphisms(f, f, lambda_flag);
        payload = J{{"type", type_str}, {"bound", bound}, {"require_lambda", lambda_flag},
                    {"subgroups", f.subgroup_names},
                    {"family_count", i64(iso.families.size())},
                    {"family_classes", iso.family_classes}};
    });

    // ---- dispatch ----
    std::vector<const char*> argv;
    argv.push_back("reprings");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (format == "json") {
        J doc{{"status", "ok"}, {"payload", payload}, {"diagnostics", J::array()}};
        out << doc.dump(2) << "\n";
    } else {
        render_text(out, payload);
    }
    return 0;
}

} // namespace reprings
