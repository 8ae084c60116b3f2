/*
   Copyright 2026 The ncfield Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// ncfield: command-line front end.  One verb, one JSON document on stdout.
// Exit codes: 0 success, 1 input/validation error, 2 computation incomplete.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ncfield/json_io.hpp"

namespace {

using namespace ncfield;
using ncfield::io::json;

int g_exit = 0;

void emit(const json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw error("cannot open output file " + out_path);
        f << text;
    }
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open " + path);
    return json::parse(f);
}

std::pair<long, int> parse_q(const std::string& q) {
    auto caret = q.find('^');
    long p = std::stol(q.substr(0, caret));
    int e = caret == std::string::npos ? 1 : std::stoi(q.substr(caret + 1));
    return {p, e};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

std::vector<Real> parse_real_list(const std::string& s) {
    std::vector<Real> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(real_from_string(tok));
    }
    return out;
}

// Shared Drinfeld options.
struct ModuleOpts {
    std::string q = "3^1";
    std::string rho_t = "T+t";
    std::string gamma_t;  // empty = generic carrier k
    int level = 1;
    long long field_bound = 1 << 20;

    TowerPtr tower() const {
        auto [p, e] = parse_q(q);
        return FieldTower::make(p, e, field_bound);
    }
    bool special() const { return !gamma_t.empty(); }
    FFElement gamma(const TowerPtr& tw) const {
        std::vector<int> c = parse_int_list(gamma_t);
        if (c.size() == 1) return tw->from_int(level, c[0]);
        return tw->embed(tw->from_coeffs(1, c), level);
    }
    GenericDrinfeld generic(const TowerPtr& tw) const {
        return GenericDrinfeld(tw, io::ore_k_from_string(tw, rho_t));
    }
    SpecialDrinfeld specialized(const TowerPtr& tw) const {
        return SpecialDrinfeld(tw, io::ore_f_from_string(tw, gamma(tw), rho_t));
    }
};

void add_module_opts(CLI::App* cmd, ModuleOpts& mo) {
    cmd->add_option("--q", mo.q, "field spec p^e");
    cmd->add_option("--rho-t", mo.rho_t, "rho_T as an expression in T and t");
    cmd->add_option("--gamma-t", mo.gamma_t,
                    "gamma(T) for a finite carrier (int or comma coeffs); omit for k");
    cmd->add_option("--level", mo.level, "carrier level m for finite carriers");
    cmd->add_option("--field-bound", mo.field_bound, "largest enumerable field size");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for Drinfeld modules, cluster algebras and "
                 "noncommutative tori"};
    app.require_subcommand(1);

    unsigned precision = 50;
    int max_level = 8;
    int deg_bound = 6;
    std::string height = "1000000";
    long long rng_seed = 0;
    bool require_cert = false;
    std::string out_path;
    app.add_option("--precision", precision, "working precision in decimal digits")
        ->capture_default_str();
    app.add_option("--max-level", max_level, "extension-level search bound")
        ->capture_default_str();
    app.add_option("--deg", deg_bound, "degree bound for certification")
        ->capture_default_str();
    app.add_option("--height", height, "coefficient height bound for certification")
        ->capture_default_str();
    app.add_option("--seed", rng_seed, "deterministic seed for randomized suites");
    app.add_flag("--require-certificate", require_cert,
                 "exit 2 when a requested certificate is absent");
    app.add_option("--out", out_path, "write the JSON document to FILE");

    // ------------------------------------------------------------- field
    auto* field = app.add_subcommand("field", "finite field towers");
    ModuleOpts fm;
    std::string field_poly = "x";
    int poly_level = 1;
    auto* field_make = field->add_subcommand("make", "tower moduli per level");
    add_module_opts(field_make, fm);
    auto* field_roots = field->add_subcommand("roots", "roots over the tower");
    add_module_opts(field_roots, fm);
    field_roots->add_option("--poly", field_poly, "polynomial in x, integer coefficients");
    field_roots->add_option("--poly-level", poly_level, "coefficient level");

    // --------------------------------------------------------------- ore
    auto* ore = app.add_subcommand("ore", "twisted polynomial ring");
    ModuleOpts om;
    std::string lhs = "t", rhs = "t", at = "1";
    auto* ore_mul = ore->add_subcommand("mul", "product in the twisted ring");
    add_module_opts(ore_mul, om);
    ore_mul->add_option("--lhs", lhs, "left factor");
    ore_mul->add_option("--rhs", rhs, "right factor");
    auto* ore_eval = ore->add_subcommand("eval", "additive-form evaluation");
    add_module_opts(ore_eval, om);
    ore_eval->add_option("--poly", lhs, "twisted polynomial");
    ore_eval->add_option("--at", at, "evaluation point (element coeffs at --at-level)");
    int at_level = 1;
    ore_eval->add_option("--at-level", at_level, "level of the evaluation point");

    // ----------------------------------------------------------- drinfeld
    auto* drin = app.add_subcommand("drinfeld", "Drinfeld modules");
    ModuleOpts dm;
    std::string a_str = "T", f_str = "t", rho2_t = "T+t";
    auto* d_rho = drin->add_subcommand("rho", "rho_a from rho_T");
    auto* d_tor = drin->add_subcommand("torsion", "a-torsion submodule");
    auto* d_frob = drin->add_subcommand("frobenius", "Frobenius matrix on torsion");
    auto* d_mor = drin->add_subcommand("morphism", "morphism/isogeny test");
    for (auto* c : {d_rho, d_tor, d_frob, d_mor}) {
        add_module_opts(c, dm);
        c->add_option("--a", a_str, "element a of A = F_q[T]");
    }
    d_mor->add_option("--f", f_str, "candidate morphism");
    d_mor->add_option("--rho2-t", rho2_t, "target module's rho_T");

    // ------------------------------------------------------------ cluster
    auto* cluster = app.add_subcommand("cluster", "cluster algebra mutation");
    std::string seed_file, word_str, tri_file;
    long cong_p = 2;
    auto* c_mut = cluster->add_subcommand("mutate", "apply a mutation word");
    auto* c_lau = cluster->add_subcommand("laurent", "Laurent certification");
    auto* c_con = cluster->add_subcommand("congruence", "level-p coefficient filter");
    for (auto* c : {c_mut, c_lau, c_con}) {
        c->add_option("--seed", seed_file, "seed JSON file")->required();
        c->add_option("--word", word_str, "comma-separated mutation word");
    }
    c_con->add_option("--p", cong_p, "congruence level");
    auto* c_tri = cluster->add_subcommand("triangulate", "exchange matrix of a triangulation");
    c_tri->add_option("--file", tri_file, "triangulation JSON file")->required();

    // -------------------------------------------------------------- torus
    auto* torus = app.add_subcommand("torus", "noncommutative torus data");
    std::string alphas_str, g_file, theta_file, t_str = "1", radius_str = "0";
    auto* t_build = torus->add_subcommand("build", "tridiagonal Theta matrix");
    t_build->add_option("--alphas", alphas_str, "superdiagonal entries")->required();
    t_build->add_option("--radius", radius_str, "error radius");
    auto* t_act = torus->add_subcommand("act", "fractional-linear action");
    t_act->add_option("--g", g_file, "group element JSON file")->required();
    t_act->add_option("--theta", theta_file, "Theta JSON file")->required();
    auto* t_check = torus->add_subcommand("check", "group-element conditions");
    t_check->add_option("--g", g_file, "group element JSON file")->required();
    auto* t_scale = torus->add_subcommand("scale", "scaled commutation constants");
    t_scale->add_option("--alphas", alphas_str, "alpha list")->required();
    t_scale->add_option("--t", t_str, "positive scale");
    auto* t_cert = torus->add_subcommand("rm-certify", "algebraicity certification");
    t_cert->add_option("--alphas", alphas_str, "alpha list")->required();

    // ------------------------------------------------------------ functor
    auto* functor = app.add_subcommand("functor", "Drinfeld -> torus pipeline");
    ModuleOpts um;
    std::string minpoly_str, value_str, im_str, mode = "complex", fa_str = "T";
    long long t0 = 2;
    bool certify = false;
    auto* f_lift = functor->add_subcommand("lift", "integer lift of z = rho_a(z)");
    add_module_opts(f_lift, um);
    f_lift->add_option("--a", fa_str, "element a of A");
    f_lift->add_option("--t0", t0, "integer substituted for T");
    auto* f_map = functor->add_subcommand("map", "minimal polynomial to RM data");
    add_module_opts(f_map, um);
    f_map->add_option("--minpoly", minpoly_str, "monic integer polynomial in x");
    f_map->add_option("--a", fa_str, "element a of A (Drinfeld path)");
    f_map->add_option("--t0", t0, "integer substituted for T (Drinfeld path)");
    auto* f_gen = functor->add_subcommand("generators", "extension generator values");
    f_gen->add_option("--minpoly", minpoly_str, "monic integer polynomial in x")->required();
    f_gen->add_option("--mode", mode, "complex | real");
    f_gen->add_flag("--certify", certify, "attach minimal-polynomial certificates");
    auto* f_img = functor->add_subcommand("torsion-image", "image of the torsion set");
    f_img->add_option("--minpoly", minpoly_str, "monic integer polynomial in x")->required();
    auto* f_det = functor->add_subcommand("detect", "integer-relation detection");
    f_det->add_option("--value", value_str, "real part (decimal string)")->required();
    f_det->add_option("--im", im_str, "imaginary part (decimal string)");

    // allow global flags (--precision etc.) after the verb
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* s : a->get_subcommands([](CLI::App*) { return true; }))
            allow_fallthrough(s);
    };
    allow_fallthrough(&app);

    CLI11_PARSE(app, argc, argv);

    try {
        PrecisionGuard guard(precision, 30);
        cpp_int height_bound(height);

        if (*field_make) {
            auto tw = fm.tower();
            json levels = json::array();
            for (int L = 1; L <= max_level; ++L) {
                try {
                    tw->size(L);
                } catch (const bound_exceeded&) {
                    break;
                }
                levels.push_back(json{{"level", L}, {"modulus", tw->modulus(L)}});
            }
            emit(json{{"p", tw->p()}, {"e", tw->e()}, {"levels", levels}}, out_path);
        } else if (*field_roots) {
            auto tw = fm.tower();
            IntPoly pz = io::intpoly_from_string(field_poly);
            std::vector<FFElement> c;
            for (const auto& x : pz)
                c.push_back(tw->from_int(poly_level,
                                         cpp_int(x % tw->p()).convert_to<long>()));
            UPolyFF f(tw, poly_level, std::move(c));
            RootSet rs = roots_in_extension(f, max_level);
            if (!rs.complete) g_exit = 2;
            emit(io::to_json(rs), out_path);
        } else if (*ore_mul) {
            auto tw = om.tower();
            if (om.special()) {
                FFElement g = om.gamma(tw);
                OreF prod = io::ore_f_from_string(tw, g, lhs) *
                            io::ore_f_from_string(tw, g, rhs);
                emit(json{{"product", io::ore_to_json(prod)},
                          {"pretty", io::ore_to_string(prod)}},
                     out_path);
            } else {
                OreK prod = io::ore_k_from_string(tw, lhs) * io::ore_k_from_string(tw, rhs);
                emit(json{{"product", io::ore_to_json(prod)},
                          {"pretty", io::ore_to_string(prod)}},
                     out_path);
            }
        } else if (*ore_eval) {
            auto tw = om.tower();
            if (!om.special()) throw error("ore eval needs a finite carrier (--gamma-t)");
            FFElement g = om.gamma(tw);
            OreF f = io::ore_f_from_string(tw, g, lhs);
            std::vector<int> c = parse_int_list(at);
            FFElement x = c.size() == 1 ? tw->from_int(at_level, c[0])
                                        : tw->from_coeffs(at_level, c);
            FFElement y = ore_eval_ext(f, x);
            emit(json{{"value", io::to_json(y)}, {"pretty", io::ffelement_to_string(y)}},
                 out_path);
        } else if (*d_rho || *d_tor || *d_frob || *d_mor) {
            auto tw = dm.tower();
            APoly a = io::apoly_from_string(tw, a_str);
            if (*d_rho) {
                if (dm.special()) {
                    auto D = dm.specialized(tw);
                    emit(json{{"module", io::module_to_json(D)},
                              {"rho_a", io::ore_to_json(D.rho_of(a))}},
                         out_path);
                } else {
                    auto D = dm.generic(tw);
                    emit(json{{"module", io::module_to_json(D)},
                              {"rho_a", io::ore_to_json(D.rho_of(a))}},
                         out_path);
                }
            } else if (*d_tor || *d_frob) {
                if (!dm.special())
                    throw error("torsion needs a finite carrier (--gamma-t)");
                auto D = dm.specialized(tw);
                TorsionModule tm = torsion(D, a, max_level);
                if (!tm.complete) g_exit = 2;
                if (*d_tor) {
                    emit(io::torsion_to_json(tm), out_path);
                } else {
                    auto mat = frobenius_matrix(tm);
                    json rows = json::array();
                    for (const auto& row : mat) {
                        json r = json::array();
                        for (const auto& x : row) r.push_back(io::to_json(x));
                        rows.push_back(r);
                    }
                    emit(json{{"matrix", rows}, {"rank", mat.size()},
                              {"a", io::to_json(tm.a)}},
                         out_path);
                }
            } else {
                if (dm.special()) {
                    FFElement g = dm.gamma(tw);
                    auto D1 = dm.specialized(tw);
                    auto D2 = SpecialDrinfeld(tw, io::ore_f_from_string(tw, g, rho2_t));
                    OreF f = io::ore_f_from_string(tw, g, f_str);
                    auto [iso, kernel] = isogeny_with_kernel(f, D1, D2, max_level);
                    emit(json{{"morphism", is_morphism(f, D1, D2)},
                              {"isogeny", iso},
                              {"kernel", io::to_json(kernel)}},
                         out_path);
                } else {
                    auto D1 = dm.generic(tw);
                    auto D2 = GenericDrinfeld(tw, io::ore_k_from_string(tw, rho2_t));
                    OreK f = io::ore_k_from_string(tw, f_str);
                    emit(json{{"morphism", is_morphism(f, D1, D2)},
                              {"isogeny", is_isogeny(f, D1, D2)}},
                         out_path);
                }
            }
        } else if (*c_mut || *c_lau || *c_con) {
            Seed s = io::seed_from_json(load_json(seed_file));
            for (int k : parse_int_list(word_str)) s = mutate(s, k);
            if (*c_mut) {
                emit(io::seed_to_json(s), out_path);
            } else if (*c_lau) {
                auto cert = laurent_certify(s);
                emit(io::laurent_to_json(cert), out_path);
            } else {
                auto cert = laurent_certify(s);
                if (!cert.ok)
                    throw not_laurent("congruence filter needs Laurent variables");
                json per = json::array();
                bool all = true;
                for (const auto& ex : cert.expansions) {
                    bool ok = congruence_level_p(ex, cong_p);
                    per.push_back(ok);
                    all = all && ok;
                }
                emit(json{{"p", cong_p}, {"divisible", per}, {"all", all}}, out_path);
            }
        } else if (*c_tri) {
            SurfaceSpec spec = io::surface_from_json(load_json(tri_file));
            auto tm = triangulation_to_matrix(spec);
            emit(json{{"B", tm.B.b}, {"interior_arcs", tm.interior_arcs}}, out_path);
        } else if (*t_build) {
            ThetaMatrix t = theta_tridiagonal(parse_real_list(alphas_str));
            t.radius = real_from_string(radius_str);
            emit(io::to_json(t, precision), out_path);
        } else if (*t_act) {
            SOmmElement g = io::somm_from_json(load_json(g_file));
            if (!somm_check(g)) throw error("group element fails the block conditions");
            ThetaMatrix t = io::theta_from_json(load_json(theta_file));
            emit(io::to_json(somm_act(g, t, precision), precision), out_path);
        } else if (*t_check) {
            SOmmElement g = io::somm_from_json(load_json(g_file));
            emit(json{{"somm", somm_check(g)}, {"quadratic_form", quadratic_form_check(g)}},
                 out_path);
        } else if (*t_scale) {
            auto rc = scaled_relations(parse_real_list(alphas_str),
                                       real_from_string(t_str), precision);
            emit(io::relations_to_json(rc), out_path);
        } else if (*t_cert) {
            auto certs = certify_real_multiplication(parse_real_list(alphas_str), deg_bound,
                                                     height_bound, precision);
            json out = json::array();
            bool missing = false;
            for (const auto& c : certs) {
                out.push_back(c ? io::intpoly_to_json(*c) : json(nullptr));
                missing = missing || !c;
            }
            if (missing && require_cert) g_exit = 2;
            emit(json{{"certificates", out}}, out_path);
        } else if (*f_lift) {
            auto tw = um.tower();
            LiftSpec spec(io::apoly_from_string(tw, fa_str), t0);
            IntPoly p = um.special() ? lift_to_intpoly(um.specialized(tw), spec)
                                     : lift_to_intpoly(um.generic(tw), spec);
            emit(json{{"poly", io::intpoly_to_json(p)},
                      {"pretty", io::intpoly_to_string(p)}},
                 out_path);
        } else if (*f_map) {
            RMData rm;
            if (!minpoly_str.empty()) {
                rm = functor_map(io::intpoly_from_string(minpoly_str), precision);
            } else {
                auto tw = um.tower();
                LiftSpec spec(io::apoly_from_string(tw, fa_str), t0);
                rm = um.special() ? functor_map(um.specialized(tw), spec, precision)
                                  : functor_map(um.generic(tw), spec, precision);
            }
            emit(io::rmdata_to_json(rm), out_path);
        } else if (*f_gen) {
            RMData rm = functor_map(io::intpoly_from_string(minpoly_str), precision);
            GeneratorMode gm =
                mode == "real" ? GeneratorMode::real_mode : GeneratorMode::complex_mode;
            auto gs = generators(rm, gm, precision, certify || require_cert, deg_bound,
                                 height_bound);
            if (require_cert)
                for (const auto& c : gs.certified)
                    if (!c) g_exit = 2;
            emit(io::generators_to_json(gs), out_path);
        } else if (*f_img) {
            RMData rm = functor_map(io::intpoly_from_string(minpoly_str), precision);
            auto vals = torsion_image(rm, precision);
            json values = json::array();
            for (const auto& v : vals)
                values.push_back(json{{"re", real_to_string(v.re, precision)},
                                      {"im", real_to_string(v.im, precision)}});
            json alphas = json::array();
            for (const auto& a : rm.alphas)
                alphas.push_back(real_to_string(a, precision));
            emit(json{{"values", values},
                      {"epsilon", real_to_string(rm.epsilon, precision)},
                      {"alphas", alphas}},
                 out_path);
        } else if (*f_det) {
            std::optional<IntPoly> hit;
            if (im_str.empty()) {
                hit = detect_minpoly(real_from_string(value_str), precision, deg_bound,
                                     height_bound);
            } else {
                Complex v(real_from_string(value_str), real_from_string(im_str));
                hit = detect_minpoly(v, precision, deg_bound, height_bound);
            }
            if (!hit && require_cert) g_exit = 2;
            emit(json{{"minpoly", hit ? io::intpoly_to_json(*hit) : json(nullptr)},
                      {"pretty", hit ? json(io::intpoly_to_string(*hit)) : json(nullptr)}},
                 out_path);
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ncfield::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
