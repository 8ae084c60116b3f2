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

#ifndef NCFIELD_DRINFELD_HPP
#define NCFIELD_DRINFELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "funcfield.hpp"
#include "ore.hpp"

namespace ncfield {

using boost::multiprecision::cpp_int;

/// Drinfeld module of rank r over A = F_q[T], determined by rho_T.  The
/// carrier is generic (C = RatFunc, coefficients in k) or special
/// (C = FFElement, gamma(T) in F_{q^m}).
template <class C>
class DrinfeldModule {
   public:
    DrinfeldModule(TowerPtr tower, OrePoly<C> rho_T)
        : tower_(std::move(tower)), rho_T_(std::move(rho_T)) {
        if (rho_T_.is_zero() || *rho_T_.degree() < 1)
            throw error("DrinfeldModule: rho_T must have tau-degree >= 1");
    }

    const TowerPtr& tower() const { return tower_; }
    const OrePoly<C>& rho_T() const { return rho_T_; }
    int rank() const { return *rho_T_.degree(); }
    C gamma_T() const { return rho_T_.coeff(0); }

    /// Structure map on constants: the canonical image of c in F_q inside
    /// the carrier.
    C gamma_const(const FFElement& c) const;

    /// rho_a for arbitrary a in A via the ring-homomorphism extension
    /// rho_{sum a_i T^i} = sum gamma(a_i) rho_T^i.
    OrePoly<C> rho_of(const APoly& a) const {
        OrePoly<C> acc = OrePoly<C>::zero(rho_T_.model());
        const auto& coeffs = a.coeffs();
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            acc = acc * rho_T_;
            if (!coeffs[i].is_zero())
                acc = acc + OrePoly<C>::constant(gamma_const(coeffs[i]));
        }
        return acc;
    }

    bool operator==(const DrinfeldModule& o) const { return rho_T_ == o.rho_T_; }

   private:
    TowerPtr tower_;
    OrePoly<C> rho_T_;
};

template <>
inline RatFunc DrinfeldModule<RatFunc>::gamma_const(const FFElement& c) const {
    return RatFunc::constant(tower_, c);
}
template <>
inline FFElement DrinfeldModule<FFElement>::gamma_const(const FFElement& c) const {
    return tower_->embed(c, rho_T_.model().level());
}

using GenericDrinfeld = DrinfeldModule<RatFunc>;
using SpecialDrinfeld = DrinfeldModule<FFElement>;

/// Carlitz module rho_T = T + tau over the generic carrier.
inline GenericDrinfeld carlitz(const TowerPtr& tower) {
    RatFunc model(tower);
    return GenericDrinfeld(tower,
                           OreK(model, {RatFunc::T(tower), RatFunc::from_int(tower, 1)}));
}

/// Carlitz module specialized at gamma(T) = g in F_{q^m}.
inline SpecialDrinfeld carlitz_at(const TowerPtr& tower, const FFElement& g) {
    FFElement model = tower->zero(g.level());
    return SpecialDrinfeld(tower, OreF(model, {g, tower->one(g.level())}));
}

/// Specialize a generic module at T -> g (requires all coefficients of
/// rho_T to be polynomials in T; they are evaluated at g).
inline SpecialDrinfeld specialize(const GenericDrinfeld& D, const FFElement& g) {
    std::vector<FFElement> c;
    for (const auto& rc : D.rho_T().coeffs()) {
        const APoly& den = rc.den();
        bool den_is_one = den.coeffs().size() == 1 && den.coeffs()[0].is_one();
        if (!den_is_one) {
            FFElement dval = den.eval(g);
            if (dval.is_zero())
                throw carrier_mismatch("specialize: coefficient denominator vanishes at gamma(T)");
            c.push_back(rc.num().eval(g) * dval.inverse());
        } else {
            c.push_back(rc.num().eval(g));
        }
    }
    FFElement model = D.tower()->zero(g.level());
    return SpecialDrinfeld(D.tower(), OreF(model, std::move(c)));
}

/// torsion_count_predict: the separable rho_a has p^{r * deg a} roots,
/// where r is the tau_p-degree of rho_T.  When rho is F_q-linear (r a
/// multiple of e) this is q to the q-rank times deg a.
template <class C>
cpp_int torsion_count_predict(const DrinfeldModule<C>& D, const APoly& a) {
    if (a.is_zero()) throw zero_polynomial("torsion_count_predict: a = 0");
    OrePoly<C> rho_a = D.rho_of(a);
    if (!rho_a.is_separable()) throw inseparable_error("torsion_count_predict: rho_a inseparable");
    cpp_int p(D.tower()->p());
    cpp_int n = 1;
    int expo = D.rank() * *a.degree();
    for (int i = 0; i < expo; ++i) n *= p;
    return n;
}

/// Torsion submodule of a special-carrier module: the roots of the
/// additive form of rho_a together with their A/aA-module structure.
struct TorsionModule {
    SpecialDrinfeld module;
    APoly a;                        // the defining a (as given)
    std::vector<FFElement> roots;   // canonically sorted, 0 included
    bool complete = false;
    int level = 0;                  // level the roots live at
    std::vector<APoly> invariants;  // monic invariant factors, decreasing divisibility
    std::vector<FFElement> basis;   // greedy generators matching `invariants`

    bool is_free_of_rank(int r) const {
        if (static_cast<int>(invariants.size()) != r) return false;
        APoly ma = a.monic();
        for (const auto& d : invariants)
            if (d != ma) return false;
        return true;
    }
};

namespace detail {

/// All polynomials over F_q of degree < d (the residues mod a monic a of
/// degree d), in canonical order.
inline std::vector<APoly> residues_mod(const TowerPtr& tower, int d) {
    std::vector<APoly> out;
    std::uint64_t q = static_cast<std::uint64_t>(tower->q());
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FFElement> c;
        std::uint64_t t = idx;
        for (int i = 0; i < d; ++i) {
            c.push_back(tower->element_at(1, t % q));
            t /= q;
        }
        out.emplace_back(tower, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Monic polynomials of exact degree dd over F_q in canonical order.
inline std::vector<APoly> monic_of_degree(const TowerPtr& tower, int dd) {
    std::vector<APoly> out;
    for (APoly& r : residues_mod(tower, dd)) {
        std::vector<FFElement> c = r.coeffs();
        c.resize(dd, tower->zero(1));
        c.push_back(tower->one(1));
        out.emplace_back(tower, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Evaluate rho_b on a torsion element at the search level.
inline FFElement rho_action(const SpecialDrinfeld& D, const APoly& b, const FFElement& x) {
    return ore_eval_ext(D.rho_of(b), x);
}

/// Closure of a set of torsion elements under addition, rho_T and F_q
/// scalars; the result is the A-submodule generated by the set.
inline std::set<FFElement> submodule_closure(const SpecialDrinfeld& D,
                                             std::set<FFElement> s,
                                             const FFElement& zero) {
    const TowerPtr& tower = D.tower();
    s.insert(zero);
    APoly T = APoly::T(tower);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<FFElement> items(s.begin(), s.end());
        for (const auto& x : items) {
            FFElement tx = rho_action(D, T, x);
            if (s.insert(tx).second) changed = true;
            for (std::uint64_t c = 1; c < static_cast<std::uint64_t>(tower->q()); ++c) {
                FFElement sc = tower->embed(tower->element_at(1, c), x.level()) * x;
                if (s.insert(sc).second) changed = true;
            }
            for (const auto& y : items) {
                if (s.insert(x + y).second) changed = true;
            }
        }
    }
    return s;
}

/// Minimal monic b with rho_b(x) inside M (M must contain 0); b divides
/// any monic annihilator of x mod M, in particular a for torsion elements.
inline APoly quotient_order(const SpecialDrinfeld& D, const FFElement& x,
                            const std::set<FFElement>& M, int max_deg) {
    const TowerPtr& tower = D.tower();
    for (int dd = 0; dd <= max_deg; ++dd) {
        for (const APoly& b : monic_of_degree(tower, dd)) {
            if (M.count(rho_action(D, b, x))) return b;
        }
    }
    throw error("quotient_order: no annihilator found (element not torsion?)");
}

}  // namespace detail

/// Compute the a-torsion of a special-carrier Drinfeld module by exhaustive
/// root search.  When the search is complete the A/aA-module structure is
/// derived by greedy invariant-factor extraction (largest quotient order
/// first, lexicographically smallest root on ties).
inline TorsionModule torsion(const SpecialDrinfeld& D, const APoly& a, int max_level) {
    if (a.is_zero()) throw zero_polynomial("torsion: a must be non-zero");
    OreF rho_a = D.rho_of(a);
    UPolyFF f = additive_form(rho_a);
    if (f.is_zero()) throw zero_polynomial("torsion: rho_a vanishes identically");
    RootSet rs = roots_in_extension(f, max_level);

    TorsionModule tm{D, a, {}, rs.complete, rs.level, {}, {}};
    for (const auto& [root, mult] : rs.roots) {
        (void)mult;  // the set Lambda ignores multiplicity
        tm.roots.push_back(root);
    }
    std::sort(tm.roots.begin(), tm.roots.end());

    if (!tm.complete || *a.degree() == 0) {
        if (*a.degree() == 0 && tm.complete) tm.invariants = {};  // Lambda = {0}
        return tm;
    }

    // invariant factors over A/aA
    std::set<FFElement> all(tm.roots.begin(), tm.roots.end());
    FFElement zero = D.tower()->zero(rs.level);
    std::set<FFElement> M = {zero};
    int max_deg = *a.degree();
    while (M.size() < all.size()) {
        APoly best_ord;
        FFElement best_x;
        bool have = false;
        for (const auto& x : tm.roots) {  // lex order
            if (M.count(x)) continue;
            APoly ord = detail::quotient_order(D, x, M, max_deg);
            if (!have || (*ord.degree() > *best_ord.degree())) {
                best_ord = ord;
                best_x = x;
                have = true;
            }
        }
        if (!have) break;
        tm.invariants.push_back(best_ord);
        tm.basis.push_back(best_x);
        std::set<FFElement> gens = M;
        gens.insert(best_x);
        M = detail::submodule_closure(D, std::move(gens), zero);
    }
    return tm;
}

/// Matrix of the q^m-power Frobenius on a complete free torsion module,
/// with entries in A/aA on the greedy basis.  The matrix lies in
/// GL_r(A/aA).
inline std::vector<std::vector<APoly>> frobenius_matrix(const TorsionModule& tm) {
    if (!tm.complete) throw incomplete_torsion("frobenius_matrix: torsion search incomplete");
    const SpecialDrinfeld& D = tm.module;
    int r = D.rank();
    // Free A-rank: an F_q-linear rho_T has tau_p-degree e times its
    // tau_q-degree, and the torsion is free of the tau_q-rank.
    if (r % D.tower()->e() == 0) r /= D.tower()->e();
    if (!tm.is_free_of_rank(r))
        throw nonfree_structure("frobenius_matrix: torsion is not free of rank r over A/aA");
    const TowerPtr& tower = D.tower();
    int d = *tm.a.degree();
    int carrier_level = D.rho_T().model().level();
    std::uint64_t frob_steps = static_cast<std::uint64_t>(tower->e()) * carrier_level;

    std::vector<APoly> residues = detail::residues_mod(tower, d);
    // action table: rho_b(basis_i) for every residue b
    std::vector<std::map<std::size_t, FFElement>> table(r);
    for (int i = 0; i < r; ++i)
        for (std::size_t bi = 0; bi < residues.size(); ++bi)
            table[i][bi] = detail::rho_action(D, residues[bi], tm.basis[i]);

    std::vector<std::vector<APoly>> mat(r, std::vector<APoly>(r, APoly(tower)));
    for (int j = 0; j < r; ++j) {
        FFElement target = frobenius(tm.basis[j], frob_steps);
        // brute-force the coordinate tuple of target on the basis
        std::vector<std::size_t> idx(r, 0);
        bool found = false;
        while (true) {
            FFElement sum = tower->zero(tm.level);
            for (int i = 0; i < r; ++i) sum = sum + table[i][idx[i]];
            if (sum == target) {
                for (int i = 0; i < r; ++i) mat[i][j] = residues[idx[i]];
                found = true;
                break;
            }
            int pos = 0;
            while (pos < r && ++idx[pos] == residues.size()) idx[pos++] = 0;
            if (pos == r) break;
        }
        if (!found)
            throw nonfree_structure("frobenius_matrix: basis does not span the torsion module");
    }

    // invertibility over A/aA: det must be a unit
    APoly ma = tm.a.monic();
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    APoly det(tower);
    std::sort(perm.begin(), perm.end());
    do {
        int sign = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        APoly term = APoly::from_ints(tower, {sign == 1 ? 1L : -1L});
        for (int i = 0; i < r; ++i) term = term * mat[i][perm[i]];
        det = (det + term) % ma;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (APoly::gcd(det, ma) != APoly::from_ints(tower, {1}))
        throw nonfree_structure("frobenius_matrix: matrix not invertible over A/aA");
    return mat;
}

/// f is a morphism D1 -> D2 iff f rho_T = rho~_T f; extension to all a is
/// a consequence (tested as a property).
template <class C>
bool is_morphism(const OrePoly<C>& f, const DrinfeldModule<C>& D1, const DrinfeldModule<C>& D2) {
    if (D1.rank() != D2.rank()) throw carrier_mismatch("is_morphism: rank mismatch");
    return f * D1.rho_T() == D2.rho_T() * f;
}

/// Isogeny test: nonzero morphism.  For special carriers the kernel (the
/// finite root set of f's additive form) is computed as well.
template <class C>
bool is_isogeny(const OrePoly<C>& f, const DrinfeldModule<C>& D1, const DrinfeldModule<C>& D2) {
    return !f.is_zero() && is_morphism(f, D1, D2);
}

inline std::pair<bool, RootSet> isogeny_with_kernel(const OreF& f, const SpecialDrinfeld& D1,
                                                    const SpecialDrinfeld& D2, int max_level) {
    bool ok = is_isogeny(f, D1, D2);
    RootSet kernel;
    if (ok) kernel = roots_in_extension(additive_form(f), max_level);
    return {ok, kernel};
}

}  // namespace ncfield

#endif  // NCFIELD_DRINFELD_HPP
