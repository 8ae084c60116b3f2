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

#ifndef NCFIELD_JSON_IO_HPP
#define NCFIELD_JSON_IO_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "cluster.hpp"
#include "drinfeld.hpp"
#include "errors.hpp"
#include "functor.hpp"
#include "nctorus.hpp"
#include "parse.hpp"

namespace ncfield {
namespace io {

using nlohmann::json;

// std::map-backed objects keep keys sorted, so dump() is deterministic.

// ---------------------------------------------------------------- funcfield

inline json to_json(const FFElement& x) {
    return json{{"level", x.level()}, {"coeffs", x.coeffs()}};
}

inline FFElement ffelement_from_json(const TowerPtr& tower, const json& j) {
    std::vector<int> c = j.at("coeffs").get<std::vector<int>>();
    return tower->from_coeffs(j.at("level").get<int>(), c);
}

inline json to_json(const APoly& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"coeffs", coeffs}};
}

inline APoly apoly_from_json(const TowerPtr& tower, const json& j) {
    std::vector<FFElement> c;
    for (const auto& cj : j.at("coeffs")) c.push_back(ffelement_from_json(tower, cj));
    return APoly(tower, std::move(c));
}

inline json to_json(const RatFunc& f) {
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const TowerPtr& tower, const json& j) {
    return RatFunc(apoly_from_json(tower, j.at("num")),
                   apoly_from_json(tower, j.at("den")));
}

inline json to_json(const RootSet& rs) {
    json roots = json::array();
    for (const auto& r : rs.roots) roots.push_back(to_json(r.first));
    json mult = json::array();
    for (const auto& r : rs.roots) mult.push_back(r.second);
    return json{{"roots", roots},
                {"multiplicities", mult},
                {"level", rs.level},
                {"complete", rs.complete}};
}

// ----------------------------------------------------------------- strings

inline std::string ffelement_to_string(const FFElement& x) {
    const auto& c = x.coeffs();
    if (c.empty()) return "0";
    if (c.size() == 1) return std::to_string(c[0]);
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += "g";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : "(" + s + ")";
}

inline std::string apoly_to_string(const APoly& f) {
    const auto& c = f.coeffs();
    if (c.empty()) return "0";
    std::string s;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = ffelement_to_string(c[i]);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string ratfunc_to_string(const RatFunc& f) {
    std::string den = apoly_to_string(f.den());
    if (den == "1") return apoly_to_string(f.num());
    return "(" + apoly_to_string(f.num()) + ")/(" + den + ")";
}

inline std::string coeff_to_string(const RatFunc& c) { return ratfunc_to_string(c); }
inline std::string coeff_to_string(const FFElement& c) { return ffelement_to_string(c); }

/// Pretty form c0 + c1*t + c2*t^2 with t for the twist.
template <class C>
std::string ore_to_string(const OrePoly<C>& f) {
    if (f.is_zero()) return "0";
    std::string s;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = coeff_to_string(c[i]);
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// ---------------------------------------------------------------------- ore

inline json ore_to_json(const OrePoly<RatFunc>& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"twist", f.twist()}, {"domain", "k"}, {"coeffs", coeffs}};
}

inline json ore_to_json(const OrePoly<FFElement>& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"twist", f.twist()}, {"domain", "F"}, {"coeffs", coeffs}};
}

inline OreK ore_k_from_json(const TowerPtr& tower, const json& j) {
    std::vector<RatFunc> c;
    for (const auto& cj : j.at("coeffs")) c.push_back(ratfunc_from_json(tower, cj));
    return OreK(RatFunc(tower), std::move(c));
}

inline OreF ore_f_from_json(const TowerPtr& tower, int level, const json& j) {
    std::vector<FFElement> c;
    for (const auto& cj : j.at("coeffs"))
        c.push_back(tower->embed(ffelement_from_json(tower, cj), level));
    return OreF(tower->zero(level), std::move(c));
}

// ----------------------------------------------------------------- drinfeld

inline json module_to_json(const GenericDrinfeld& D) {
    return json{{"q", std::to_string(D.tower()->p()) + "^" + std::to_string(D.tower()->e())},
                {"carrier", "k"},
                {"rhoT", ore_to_json(D.rho_T())}};
}

inline json module_to_json(const SpecialDrinfeld& D) {
    int level = D.rho_T().model().level();
    return json{{"q", std::to_string(D.tower()->p()) + "^" + std::to_string(D.tower()->e())},
                {"carrier", json{{"level", level}, {"gammaT", to_json(D.gamma_T())}}},
                {"rhoT", ore_to_json(D.rho_T())}};
}

inline json torsion_to_json(const TorsionModule& tm) {
    json roots = json::array();
    for (const auto& r : tm.roots) roots.push_back(to_json(r));
    json inv = json::array();
    for (const auto& d : tm.invariants) inv.push_back(to_json(d));
    json basis = json::array();
    for (const auto& b : tm.basis) basis.push_back(to_json(b));
    return json{{"a", to_json(tm.a)},       {"roots", roots},
                {"complete", tm.complete},  {"level", tm.level},
                {"invariants", inv},        {"basis", basis},
                {"count", tm.roots.size()}};
}

// ------------------------------------------------------------------ cluster

inline std::string mpoly_to_string(const MPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        cpp_int ac = c < 0 ? cpp_int(-c) : c;
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? "-" : "+";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += ac.str();
        } else {
            if (ac != 1) s += ac.str() + "*";
            s += mono;
        }
    }
    return s;
}

inline std::string clustervar_to_string(const ClusterVar& v) {
    if (v.den().is_one()) return mpoly_to_string(v.num());
    return "(" + mpoly_to_string(v.num()) + ")/(" + mpoly_to_string(v.den()) + ")";
}

/// Parser context over the cluster field Q(x1, ..., xn).
struct ClusterCtx {
    using Value = ClusterVar;
    int nvars;

    Value number(const cpp_int& c) { return ClusterVar::constant(nvars, c); }
    Value symbol(const std::string& name, std::size_t pos) {
        if (name.size() >= 2 && name[0] == 'x') {
            int i = std::atoi(name.c_str() + 1);
            if (i >= 1 && i <= nvars) return ClusterVar::initial(nvars, i - 1);
        }
        if (name == "x" && nvars == 1) return ClusterVar::initial(1, 0);
        throw parse_error("unknown variable '" + name + "'", pos);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) {
        return a + b * ClusterVar::constant(nvars, -1);
    }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t pos) {
        if (b.is_zero()) throw parse_error("division by zero", pos);
        return a / b;
    }
    Value neg(const Value& a) { return a * ClusterVar::constant(nvars, -1); }
    Value pow(const Value& a, long k, std::size_t) { return a.pow(static_cast<int>(k)); }
};

inline ClusterVar clustervar_from_string(int nvars, const std::string& s) {
    ClusterCtx ctx{nvars};
    return parse_expression(ctx, s);
}

inline json seed_to_json(const Seed& s) {
    json vars = json::array();
    for (const auto& v : s.vars) vars.push_back(clustervar_to_string(v));
    return json{{"B", s.B.b}, {"vars", vars}, {"history", s.history}};
}

inline Seed seed_from_json(const json& j) {
    auto b = j.at("B").get<std::vector<std::vector<long long>>>();
    ExchangeMatrix B(std::move(b));
    int n = B.rank();
    std::vector<ClusterVar> vars;
    for (const auto& vs : j.at("vars"))
        vars.push_back(clustervar_from_string(n, vs.get<std::string>()));
    std::vector<int> history;
    if (j.contains("history")) history = j.at("history").get<std::vector<int>>();
    return Seed{std::move(vars), std::move(B), std::move(history)};
}

inline json laurent_to_json(const LaurentCertificate& cert) {
    json out{{"laurent", cert.ok}};
    if (!cert.ok) {
        out["offending_index"] = cert.offending + 1;
        return out;
    }
    json exps = json::array();
    for (const auto& ex : cert.expansions) {
        json terms = json::array();
        for (const auto& [e, c] : ex)
            terms.push_back(json{{"exponents", e}, {"coeff", c.str()}});
        exps.push_back(terms);
    }
    out["expansions"] = exps;
    return out;
}

inline SurfaceSpec surface_from_json(const json& j) {
    SurfaceSpec spec;
    spec.genus = j.value("genus", 0);
    spec.n_cusps = j.value("cusps", 0);
    for (const auto& t : j.at("triangles")) {
        if (t.size() != 3) throw error("triangulation: triangles must have three sides");
        spec.triangles.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    return spec;
}

// -------------------------------------------------------------------- torus

inline json to_json(const ThetaMatrix& t, unsigned digits) {
    json rows = json::array();
    for (const auto& row : t.entries) {
        json r = json::array();
        for (const auto& x : row) r.push_back(real_to_string(x, digits));
        rows.push_back(r);
    }
    return json{{"m", t.m}, {"entries", rows}, {"radius", real_to_string(t.radius, digits)}};
}

inline ThetaMatrix theta_from_json(const json& j) {
    std::vector<std::vector<Real>> e;
    for (const auto& row : j.at("entries")) {
        std::vector<Real> r;
        for (const auto& x : row) r.push_back(real_from_string(x.get<std::string>()));
        e.push_back(std::move(r));
    }
    Real radius(0);
    if (j.contains("radius")) radius = real_from_string(j.at("radius").get<std::string>());
    return ThetaMatrix(std::move(e), std::move(radius));
}

inline json imat_to_json(const IntMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(r);
    }
    return rows;
}

inline IntMat imat_from_json(const json& j) {
    IntMat m;
    for (const auto& row : j) {
        std::vector<cpp_int> r;
        for (const auto& x : row)
            r.push_back(x.is_string() ? cpp_int(x.get<std::string>())
                                      : cpp_int(x.get<long long>()));
        m.push_back(std::move(r));
    }
    return m;
}

inline json somm_to_json(const SOmmElement& g) {
    return json{{"A", imat_to_json(g.A)},
                {"B", imat_to_json(g.B)},
                {"C", imat_to_json(g.C)},
                {"D", imat_to_json(g.D)}};
}

inline SOmmElement somm_from_json(const json& j) {
    return SOmmElement(imat_from_json(j.at("A")), imat_from_json(j.at("B")),
                       imat_from_json(j.at("C")), imat_from_json(j.at("D")));
}

inline json relations_to_json(const RelationConstants& rc) {
    json alphas = json::array();
    for (const auto& a : rc.alphas) alphas.push_back(real_to_string(a, rc.precision));
    json values = json::array();
    for (const auto& v : rc.values)
        values.push_back(json{{"re", real_to_string(v.re, rc.precision)},
                              {"im", real_to_string(v.im, rc.precision)}});
    return json{{"alphas", alphas},
                {"t", real_to_string(rc.t, rc.precision)},
                {"values", values},
                {"precision_digits", rc.precision}};
}

// ------------------------------------------------------------------ functor

inline json intpoly_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(c.str());
    return out;
}

inline IntPoly intpoly_from_json(const json& j) {
    IntPoly p;
    for (const auto& c : j)
        p.push_back(c.is_string() ? cpp_int(c.get<std::string>())
                                  : cpp_int(c.get<long long>()));
    return p;
}

/// "x^2-x-1" and friends.
struct IntPolyCtx {
    using Value = IntPoly;

    static void strip(Value& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    Value number(const cpp_int& c) { return c == 0 ? Value{} : Value{c}; }
    Value symbol(const std::string& name, std::size_t pos) {
        if (name == "x") return Value{0, 1};
        throw parse_error("unknown variable '" + name + "' (expected x)", pos);
    }
    Value add(Value a, const Value& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        strip(a);
        return a;
    }
    Value sub(Value a, const Value& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        strip(a);
        return a;
    }
    Value mul(const Value& a, const Value& b) { return detail::zpoly_mul(a, b); }
    Value div(const Value&, const Value&, std::size_t pos) {
        throw parse_error("division is not supported in integer polynomials", pos);
    }
    Value neg(Value a) {
        for (auto& c : a) c = -c;
        return a;
    }
    Value pow(const Value& a, long k, std::size_t) {
        Value r{1};
        for (long i = 0; i < k; ++i) r = detail::zpoly_mul(r, a);
        return r;
    }
};

inline IntPoly intpoly_from_string(const std::string& s) {
    IntPolyCtx ctx;
    return parse_expression(ctx, s);
}

inline std::string intpoly_to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        cpp_int ac = p[i] < 0 ? cpp_int(-p[i]) : p[i];
        if (s.empty()) {
            if (p[i] < 0) s += "-";
        } else {
            s += p[i] < 0 ? "-" : "+";
        }
        if (i == 0) {
            s += ac.str();
        } else {
            if (ac != 1) s += ac.str() + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

inline json rmdata_to_json(const RMData& rm) {
    json alphas = json::array();
    for (const auto& a : rm.alphas) alphas.push_back(real_to_string(a, rm.precision));
    return json{{"minpoly", intpoly_to_json(rm.minpoly)},
                {"companion", imat_to_json(rm.companion)},
                {"epsilon", real_to_string(rm.epsilon, rm.precision)},
                {"alphas", alphas},
                {"precision_digits", rm.precision},
                {"provenance", rm.provenance},
                {"flags", rm.flags}};
}

inline json generators_to_json(const GeneratorSet& gs) {
    json values = json::array();
    for (const auto& v : gs.values)
        values.push_back(json{{"re", real_to_string(v.re, gs.precision)},
                              {"im", real_to_string(v.im, gs.precision)}});
    json alphas = json::array();
    for (const auto& a : gs.alphas) alphas.push_back(real_to_string(a, gs.precision));
    json certified = json::array();
    for (const auto& c : gs.certified)
        certified.push_back(c ? intpoly_to_json(*c) : json(nullptr));
    return json{{"mode", gs.mode == GeneratorMode::complex_mode ? "complex" : "real"},
                {"values", values},
                {"alphas", alphas},
                {"epsilon", real_to_string(gs.epsilon, gs.precision)},
                {"precision_digits", gs.precision},
                {"certified", certified}};
}

// ----------------------------------------------------- expression contexts

/// "T^2+2T+1" over A = F_q[T].
struct APolyCtx {
    using Value = APoly;
    TowerPtr tower;

    Value number(const cpp_int& c) {
        long v = cpp_int(c % tower->p()).convert_to<long>();
        return APoly::from_ints(tower, {v});
    }
    Value symbol(const std::string& name, std::size_t pos) {
        if (name == "T") return APoly::T(tower);
        throw parse_error("unknown variable '" + name + "' (expected T)", pos);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value div(const Value&, const Value&, std::size_t pos) {
        throw parse_error("division is not supported in A = F_q[T]", pos);
    }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, long k, std::size_t) {
        Value r = APoly::from_ints(tower, {1});
        for (long i = 0; i < k; ++i) r = r * a;
        return r;
    }
};

inline APoly apoly_from_string(const TowerPtr& tower, const std::string& s) {
    APolyCtx ctx{tower};
    return parse_expression(ctx, s);
}

/// Ore expressions over the generic carrier: T is gamma(T) = T in k,
/// t is the twist.
struct OreKCtx {
    using Value = OreK;
    TowerPtr tower;

    Value number(const cpp_int& c) {
        long v = cpp_int(c % tower->p()).convert_to<long>();
        return OreK::constant(RatFunc::from_int(tower, v));
    }
    Value symbol(const std::string& name, std::size_t pos) {
        if (name == "T") return OreK::constant(RatFunc::T(tower));
        if (name == "t") return OreK::tau(RatFunc(tower));
        throw parse_error("unknown symbol '" + name + "' (expected T or t)", pos);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value div(const Value&, const Value&, std::size_t pos) {
        throw parse_error("division is not supported in the twisted ring", pos);
    }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, long k, std::size_t) {
        Value r = OreK::one(RatFunc(tower));
        for (long i = 0; i < k; ++i) r = r * a;
        return r;
    }
};

inline OreK ore_k_from_string(const TowerPtr& tower, const std::string& s) {
    OreKCtx ctx{tower};
    return parse_expression(ctx, s);
}

/// Ore expressions over a finite carrier: T stands for gamma(T).
struct OreFCtx {
    using Value = OreF;
    TowerPtr tower;
    FFElement gammaT;  // already at the carrier level

    Value number(const cpp_int& c) {
        long v = cpp_int(c % tower->p()).convert_to<long>();
        return OreF::constant(tower->from_int(gammaT.level(), v));
    }
    Value symbol(const std::string& name, std::size_t pos) {
        if (name == "T") return OreF::constant(gammaT);
        if (name == "t") return OreF::tau(tower->zero(gammaT.level()));
        throw parse_error("unknown symbol '" + name + "' (expected T or t)", pos);
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value div(const Value&, const Value&, std::size_t pos) {
        throw parse_error("division is not supported in the twisted ring", pos);
    }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, long k, std::size_t) {
        Value r = OreF::one(tower->zero(gammaT.level()));
        for (long i = 0; i < k; ++i) r = r * a;
        return r;
    }
};

inline OreF ore_f_from_string(const TowerPtr& tower, const FFElement& gammaT,
                              const std::string& s) {
    OreFCtx ctx{tower, gammaT};
    return parse_expression(ctx, s);
}

}  // namespace io
}  // namespace ncfield

#endif  // NCFIELD_JSON_IO_HPP
