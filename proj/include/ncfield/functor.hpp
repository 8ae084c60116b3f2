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

#ifndef NCFIELD_FUNCTOR_HPP
#define NCFIELD_FUNCTOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detect.hpp"
#include "drinfeld.hpp"
#include "errors.hpp"
#include "nctorus.hpp"
#include "real.hpp"
#include "rootfind.hpp"

namespace ncfield {

/// How the fixed-point equation z = rho_a(z) is turned into an integer
/// polynomial: coefficients are lifted through the canonical section of the
/// prime field into {0, ..., p-1} and T is sent to the integer t0.
struct LiftSpec {
    APoly a;
    cpp_int t0;

    LiftSpec(APoly a_, cpp_int t0_) : a(std::move(a_)), t0(std::move(t0_)) {
        if (!a.degree()) throw zero_polynomial("LiftSpec: a must be nonzero");
        if (t0 < 2) throw error("LiftSpec: t0 must be at least 2");
    }
};

namespace detail {

/// Canonical section F_p -> {0, ..., p-1}.  The element must lie in the
/// prime subfield, i.e. have a constant representation.
inline cpp_int prime_field_lift(const FFElement& x) {
    const auto& c = x.coeffs();
    if (c.size() > 1)
        throw degenerate_lift("lift: coefficient lies outside the prime field");
    return c.empty() ? cpp_int(0) : cpp_int(c[0]);
}

/// Lift an A-polynomial with prime-field coefficients and evaluate at t0.
inline cpp_int apoly_lift_at(const APoly& f, const cpp_int& t0) {
    cpp_int acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t0 + prime_field_lift(c[i]);
    return acc;
}

}  // namespace detail

/// rho_a(z) - z lifted to Z[z] (ascending coefficients, index = power of z)
/// and divided by its content.
template <class C>
IntPoly lift_to_intpoly(const DrinfeldModule<C>& D, const LiftSpec& spec) {
    OrePoly<C> rho = D.rho_of(spec.a);
    long p = D.tower()->p();
    int deg = rho.is_zero() ? -1 : *rho.degree();
    // exponent of z for tau^i is p^i
    std::size_t top = 1;
    for (int i = 0; i < deg; ++i) top *= static_cast<std::size_t>(p);
    IntPoly out(top + 1, 0);
    std::size_t zpow = 1;
    for (int i = 0; i <= deg; ++i) {
        const C& c = rho.coeff(i);
        cpp_int v;
        if constexpr (std::is_same_v<C, RatFunc>) {
            const APoly& den = c.den();
            bool den_one = den.coeffs().size() == 1 && den.coeffs()[0].is_one();
            if (!den_one)
                throw degenerate_lift("lift: coefficient is not a polynomial in T");
            v = detail::apoly_lift_at(c.num(), spec.t0);
        } else {
            v = detail::prime_field_lift(c);
        }
        out[zpow] += v;
        zpow *= static_cast<std::size_t>(p);
    }
    out[1] -= 1;  // subtract z
    while (!out.empty() && out.back() == 0) out.pop_back();
    if (out.size() < 3)
        throw degenerate_lift("lift: rho_a(z) - z has degree below 2");
    cpp_int g = 0;
    for (const auto& x : out) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : out) x /= g;
    if (out.back() < 0)
        for (auto& x : out) x = -x;
    return out;
}

/// Companion matrix of the monic p(x) = x^m - a_{m-1}x^{m-1} - ... - a_0:
/// ones on the subdiagonal, the a_i down the last column.
inline IntMat companion_matrix(const IntPoly& p) {
    if (p.size() < 2 || p.back() != 1)
        throw error("companion_matrix: polynomial must be monic of degree >= 1");
    int m = static_cast<int>(p.size()) - 1;
    IntMat B(m, std::vector<cpp_int>(m, 0));
    for (int i = 1; i < m; ++i) B[i][i - 1] = 1;
    for (int i = 0; i < m; ++i) B[i][m - 1] = -p[i];
    return B;
}

namespace detail {

inline IntPoly zpoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

}  // namespace detail

/// det(B - xI) as an exact integer polynomial.
inline IntPoly charpoly(const IntMat& B) {
    std::size_t m = B.size();
    std::vector<std::vector<IntPoly>> M(m, std::vector<IntPoly>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            IntPoly e;
            if (B[i][j] != 0) e = IntPoly{B[i][j]};
            if (i == j) {
                e.resize(2, 0);
                e[1] -= 1;
                while (!e.empty() && e.back() == 0) e.pop_back();
            }
            M[i][j] = std::move(e);
        }
    // cofactor expansion along the first column, iteratively on the minor
    struct Rec {
        static IntPoly det(const std::vector<std::vector<IntPoly>>& A) {
            std::size_t n = A.size();
            if (n == 1) return A[0][0];
            IntPoly total;
            for (std::size_t i = 0; i < n; ++i) {
                if (A[i][0].empty()) continue;
                std::vector<std::vector<IntPoly>> minor;
                minor.reserve(n - 1);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == i) continue;
                    minor.emplace_back(A[r].begin() + 1, A[r].end());
                }
                IntPoly term = detail::zpoly_mul(A[i][0], det(minor));
                if (i % 2 == 1)
                    for (auto& c : term) c = -c;
                if (total.size() < term.size()) total.resize(term.size(), 0);
                for (std::size_t t = 0; t < term.size(); ++t) total[t] += term[t];
                while (!total.empty() && total.back() == 0) total.pop_back();
            }
            return total;
        }
    };
    return Rec::det(M);
}

/// charpoly(companion(p)) == +-p, exactly.
inline bool companion_charpoly_check(const IntMat& B, const IntPoly& p) {
    IntPoly c = charpoly(B);
    if (c == p) return true;
    for (auto& x : c) x = -x;
    return c == p;
}

struct RMData {
    IntPoly minpoly;
    IntMat companion;
    Real epsilon;
    std::vector<Real> alphas;  // alpha_1 .. alpha_{m-1}
    unsigned precision = 0;
    std::string provenance;
    std::vector<std::string> flags;
};

namespace detail {

/// Left Perron eigenvector of the companion matrix, first coordinate
/// normalized to 1, by shifted inverse iteration on B^t.
inline std::vector<Real> left_eigenvector(const IntMat& B, const Real& eps,
                                          unsigned digits) {
    int m = static_cast<int>(B.size());
    RealMat Mt(m, std::vector<Real>(m));
    Real shift = eps + pow10(-static_cast<long>(digits) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) Mt[i][j] = Real(B[j][i].str());
    for (int i = 0; i < m; ++i) Mt[i][i] -= shift;
    RealMat inv = real_inverse(std::move(Mt), digits + 15);
    std::vector<Real> v(m, Real(1));
    for (int iter = 0; iter < 4; ++iter) {
        std::vector<Real> w(m, Real(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) w[i] += inv[i][j] * v[j];
        Real norm = 0;
        for (const auto& x : w)
            if (boost::multiprecision::abs(x) > norm) norm = boost::multiprecision::abs(x);
        if (norm == 0) throw no_perron_root("eigenvector iteration collapsed");
        for (auto& x : w) x /= norm;
        v = std::move(w);
    }
    if (v[0] == 0) throw no_perron_root("eigenvector has vanishing first coordinate");
    Real lead = v[0];
    for (auto& x : v) x /= lead;
    return v;
}

}  // namespace detail

/// Core of the functor: monic integer polynomial -> companion matrix,
/// Perron-Frobenius eigenvalue and normalized left eigenvector.
inline RMData functor_map(const IntPoly& p, unsigned digits,
                          std::string provenance = "direct minpoly") {
    if (p.size() < 2 || p.back() != 1)
        throw error("functor_map: polynomial must be monic of degree >= 1");
    PrecisionGuard guard(digits, 25);
    RMData rm;
    rm.minpoly = p;
    rm.companion = companion_matrix(p);
    rm.precision = digits;
    rm.provenance = std::move(provenance);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (-p[i] < 0) {
            rm.flags.push_back("negative-companion-entry");
            break;
        }

    auto roots = poly_roots(p, digits + 10);
    const Real tol = pow10(-static_cast<long>(digits) / 2);
    Real best = 0;
    bool found = false;
    for (const auto& z : roots) {
        if (z.im != 0) continue;
        if (z.re > 1 && z.re > best) {
            best = z.re;
            found = true;
        }
    }
    if (!found) throw no_perron_root("functor_map: no real root greater than 1");
    Real eps = newton_refine(p, best, digits + 10);
    for (const auto& z : roots)
        if (z.abs() > eps + tol)
            throw no_perron_root("functor_map: real root is not dominant");
    rm.epsilon = eps;

    auto v = detail::left_eigenvector(rm.companion, eps, digits);
    rm.alphas.assign(v.begin() + 1, v.end());
    return rm;
}

template <class C>
RMData functor_map(const DrinfeldModule<C>& D, const LiftSpec& spec, unsigned digits) {
    IntPoly p = lift_to_intpoly(D, spec);
    if (p.back() != 1)
        throw degenerate_lift("functor_map: lifted polynomial is not monic");
    return functor_map(p, digits, "drinfeld+lift");
}

/// F(Lambda_rho[a]): the values log(eps) * e^{2 pi i alpha_k}.
inline std::vector<Complex> torsion_image(const RMData& rm, unsigned digits) {
    PrecisionGuard guard(digits, 20);
    Real scale = boost::multiprecision::log(rm.epsilon);
    std::vector<Complex> out;
    out.reserve(rm.alphas.size());
    for (const auto& a : rm.alphas) out.push_back(unit_circle(a) * scale);
    return out;
}

enum class GeneratorMode { complex_mode, real_mode };

struct GeneratorSet {
    GeneratorMode mode = GeneratorMode::complex_mode;
    std::vector<Complex> values;
    std::vector<Real> alphas;
    Real epsilon;
    unsigned precision = 0;
    std::vector<std::optional<IntPoly>> certified;  // empty unless requested
};

/// Generator values of the associated extension: log(eps) e^{2 pi i a_k}
/// (complex) or cos(2 pi a_k) log(eps) (real), optionally with a
/// minimal-polynomial certificate per value.
inline GeneratorSet generators(const RMData& rm, GeneratorMode mode, unsigned digits,
                               bool certify = false, int degree_bound = 6,
                               const cpp_int& height_bound = cpp_int(1000000)) {
    PrecisionGuard guard(digits, 20);
    GeneratorSet gs;
    gs.mode = mode;
    gs.alphas = rm.alphas;
    gs.epsilon = rm.epsilon;
    gs.precision = digits;
    Real scale = boost::multiprecision::log(rm.epsilon);
    for (const auto& a : rm.alphas) {
        if (mode == GeneratorMode::complex_mode) {
            gs.values.push_back(unit_circle(a) * scale);
        } else {
            Real v = boost::multiprecision::cos(2 * real_pi() * a) * scale;
            gs.values.emplace_back(v, Real(0));
        }
    }
    if (certify) {
        for (const auto& v : gs.values) {
            if (mode == GeneratorMode::real_mode)
                gs.certified.push_back(detect_minpoly(v.re, digits, degree_bound, height_bound));
            else
                gs.certified.push_back(detect_minpoly(v, digits, degree_bound, height_bound));
        }
    }
    return gs;
}

}  // namespace ncfield

#endif  // NCFIELD_FUNCTOR_HPP
