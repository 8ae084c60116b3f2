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

#ifndef NCFIELD_NCTORUS_HPP
#define NCFIELD_NCTORUS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "detect.hpp"
#include "errors.hpp"
#include "real.hpp"

namespace ncfield {

/// Skew-symmetric matrix of torus parameters.  Entries carry one shared
/// error radius (ball discipline); the diagonal is exactly zero.
struct ThetaMatrix {
    int m = 0;
    std::vector<std::vector<Real>> entries;
    Real radius;

    ThetaMatrix(std::vector<std::vector<Real>> e, Real r = Real(0))
        : m(static_cast<int>(e.size())), entries(std::move(e)), radius(std::move(r)) {
        if (m < 2) throw shape_mismatch("ThetaMatrix: dimension must be at least 2");
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(entries[i].size()) != m)
                throw shape_mismatch("ThetaMatrix: not square");
            if (entries[i][i] != 0) throw error("ThetaMatrix: nonzero diagonal entry");
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Real s = entries[i][j] + entries[j][i];
                if (boost::multiprecision::abs(s) > 2 * radius)
                    throw error("ThetaMatrix: not skew-symmetric within radius");
            }
    }
};

/// Tridiagonal skew form with superdiagonal alpha_1 .. alpha_{m-1}.
inline ThetaMatrix theta_tridiagonal(const std::vector<Real>& alphas) {
    if (alphas.empty())
        throw shape_mismatch("theta_tridiagonal: need at least one superdiagonal entry");
    int m = static_cast<int>(alphas.size()) + 1;
    std::vector<std::vector<Real>> e(m, std::vector<Real>(m, Real(0)));
    for (int k = 0; k + 1 < m; ++k) {
        e[k][k + 1] = alphas[k];
        e[k + 1][k] = -alphas[k];
    }
    return ThetaMatrix(std::move(e));
}

inline std::vector<Real> theta_superdiagonal(const ThetaMatrix& t) {
    std::vector<Real> out;
    for (int k = 0; k + 1 < t.m; ++k) out.push_back(t.entries[k][k + 1]);
    return out;
}

using IntMat = std::vector<std::vector<cpp_int>>;

namespace detail {

inline IntMat imat_zero(int n) { return IntMat(n, std::vector<cpp_int>(n, 0)); }
inline IntMat imat_identity(int n) {
    IntMat r = imat_zero(n);
    for (int i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}
inline IntMat imat_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    IntMat r = imat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}
inline IntMat imat_transpose(const IntMat& a) {
    int n = static_cast<int>(a.size());
    IntMat r = imat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[j][i] = a[i][j];
    return r;
}
inline IntMat imat_add(const IntMat& a, const IntMat& b) {
    IntMat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
    return r;
}

}  // namespace detail

/// Element of the split orthogonal group over Z, stored as four blocks.
struct SOmmElement {
    IntMat A, B, C, D;

    SOmmElement(IntMat a, IntMat b, IntMat c, IntMat d)
        : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
        std::size_t n = A.size();
        auto check = [&](const IntMat& m) {
            if (m.size() != n) throw shape_mismatch("SOmmElement: blocks differ in size");
            for (const auto& row : m)
                if (row.size() != n) throw shape_mismatch("SOmmElement: block not square");
        };
        check(A);
        check(B);
        check(C);
        check(D);
        if (n == 0) throw shape_mismatch("SOmmElement: empty blocks");
    }

    int m() const { return static_cast<int>(A.size()); }

    static SOmmElement identity(int n) {
        return SOmmElement(detail::imat_identity(n), detail::imat_zero(n),
                           detail::imat_zero(n), detail::imat_identity(n));
    }
    static SOmmElement swap(int n) {
        return SOmmElement(detail::imat_zero(n), detail::imat_identity(n),
                           detail::imat_identity(n), detail::imat_zero(n));
    }
};

/// The three block conditions: A^t D + C^t B = I, A^t C + C^t A = 0,
/// B^t D + D^t B = 0.
inline bool somm_check(const SOmmElement& g) {
    using namespace detail;
    int n = g.m();
    IntMat at = imat_transpose(g.A), ct = imat_transpose(g.C), bt = imat_transpose(g.B),
           dt = imat_transpose(g.D);
    if (imat_add(imat_mul(at, g.D), imat_mul(ct, g.B)) != imat_identity(n)) return false;
    if (imat_add(imat_mul(at, g.C), imat_mul(ct, g.A)) != imat_zero(n)) return false;
    if (imat_add(imat_mul(bt, g.D), imat_mul(dt, g.B)) != imat_zero(n)) return false;
    return true;
}

/// Composition of the assembled 2m x 2m matrices, returned in block form.
inline SOmmElement somm_mul(const SOmmElement& g, const SOmmElement& h) {
    using namespace detail;
    if (g.m() != h.m()) throw shape_mismatch("somm_mul: dimension mismatch");
    return SOmmElement(imat_add(imat_mul(g.A, h.A), imat_mul(g.B, h.C)),
                       imat_add(imat_mul(g.A, h.B), imat_mul(g.B, h.D)),
                       imat_add(imat_mul(g.C, h.A), imat_mul(g.D, h.C)),
                       imat_add(imat_mul(g.C, h.B), imat_mul(g.D, h.D)));
}

/// G^t J G = J for the hyperbolic form x_1 x_{m+1} + ... + x_m x_{2m},
/// whose Gram matrix is J = [[0, I], [I, 0]].
inline bool quadratic_form_check(const SOmmElement& g) {
    using namespace detail;
    int n = g.m();
    int N = 2 * n;
    IntMat G(N, std::vector<cpp_int>(N, 0)), J(N, std::vector<cpp_int>(N, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            G[i][j] = g.A[i][j];
            G[i][j + n] = g.B[i][j];
            G[i + n][j] = g.C[i][j];
            G[i + n][j + n] = g.D[i][j];
        }
    for (int i = 0; i < n; ++i) {
        J[i][i + n] = 1;
        J[i + n][i] = 1;
    }
    return imat_mul(imat_transpose(G), imat_mul(J, G)) == J;
}

namespace detail {

using RealMat = std::vector<std::vector<Real>>;

inline RealMat to_real(const IntMat& a) {
    RealMat r(a.size(), std::vector<Real>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = Real(a[i][j].str());
    return r;
}

inline Real row_norm(const RealMat& a) {
    Real best = 0;
    for (const auto& row : a) {
        Real s = 0;
        for (const auto& x : row) s += boost::multiprecision::abs(x);
        if (s > best) best = s;
    }
    return best;
}

inline Real row_norm(const IntMat& a) {
    Real best = 0;
    for (const auto& row : a) {
        cpp_int s = 0;
        for (const auto& x : row) s += abs(x);
        Real rs(s.str());
        if (rs > best) best = rs;
    }
    return best;
}

/// Inverse by Gaussian elimination with partial pivoting; throws when a
/// pivot falls below the working-precision floor.
inline RealMat real_inverse(RealMat a, unsigned digits) {
    int n = static_cast<int>(a.size());
    RealMat inv(n, std::vector<Real>(n, Real(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    const Real floor = pow10(-static_cast<long>(digits));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (boost::multiprecision::abs(a[r][col]) >
                boost::multiprecision::abs(a[piv][col]))
                piv = r;
        if (boost::multiprecision::abs(a[piv][col]) < floor)
            throw singular_denominator("matrix is singular at working precision");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Real p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Real f = a[r][col];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

inline RealMat real_mul(const RealMat& a, const RealMat& b) {
    int n = static_cast<int>(a.size());
    RealMat r(n, std::vector<Real>(n, Real(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

}  // namespace detail

/// Fractional-linear action Theta' = (A Theta + B)(C Theta + D)^{-1} with
/// first-order error propagation.  The result is re-verified and then
/// exactly skew-symmetrized.
inline ThetaMatrix somm_act(const SOmmElement& g, const ThetaMatrix& theta,
                            unsigned digits) {
    using namespace detail;
    if (g.m() != theta.m) throw shape_mismatch("somm_act: dimension mismatch");
    PrecisionGuard guard(digits, 20);
    int n = theta.m;
    RealMat A = to_real(g.A), B = to_real(g.B), C = to_real(g.C), D = to_real(g.D);
    RealMat num = B, den = D;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                num[i][j] += A[i][k] * theta.entries[k][j];
                den[i][j] += C[i][k] * theta.entries[k][j];
            }
    RealMat den_inv = real_inverse(den, digits);
    RealMat out = real_mul(num, den_inv);

    // dTheta' = (A - Theta' C) dTheta (C Theta + D)^{-1}
    Real amp = (row_norm(g.A) + row_norm(out) * row_norm(g.C)) * row_norm(den_inv);
    Real rounding = pow10(-static_cast<long>(digits) + 5) * (Real(1) + row_norm(out));
    Real radius = amp * theta.radius + rounding;

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (i == j) {
                if (boost::multiprecision::abs(out[i][i]) > 2 * radius + rounding)
                    throw precision_exhausted("somm_act: result is not skew-symmetric");
                out[i][i] = 0;
                continue;
            }
            if (boost::multiprecision::abs(out[i][j] + out[j][i]) > 2 * radius + rounding)
                throw precision_exhausted("somm_act: result is not skew-symmetric");
            Real v = (out[i][j] - out[j][i]) / 2;
            out[i][j] = v;
            out[j][i] = -v;
        }
    }
    return ThetaMatrix(std::move(out), radius);
}

/// Commutation constants rho_k = t e^{2 pi i alpha_k}.
struct RelationConstants {
    std::vector<Real> alphas;
    Real t;
    unsigned precision = 0;
    std::vector<Complex> values;
};

inline RelationConstants scaled_relations(const std::vector<Real>& alphas, const Real& t,
                                          unsigned precision) {
    if (t <= 0) throw nonpositive_scale("scaled_relations: scale must be positive");
    PrecisionGuard guard(precision, 20);
    RelationConstants rc{alphas, t, precision, {}};
    rc.values.reserve(alphas.size());
    for (const auto& a : alphas) rc.values.push_back(unit_circle(a) * t);
    return rc;
}

/// Per-entry algebraicity certification of the torus parameters.
inline std::vector<std::optional<IntPoly>> certify_real_multiplication(
    const std::vector<Real>& alphas, int degree_bound, const cpp_int& height_bound,
    unsigned precision) {
    std::vector<std::optional<IntPoly>> out;
    out.reserve(alphas.size());
    for (const auto& a : alphas)
        out.push_back(detect_minpoly(a, precision, degree_bound, height_bound));
    return out;
}

/// Trace image of K_0 for the 2-dimensional torus: the module Z + theta Z,
/// reported by its generators.  Higher dimensions are not provided.
inline std::pair<Real, Real> trace_module_generators(const ThetaMatrix& theta) {
    if (theta.m != 2)
        throw shape_mismatch("trace_module_generators: only the 2-dimensional case");
    return {Real(1), theta.entries[0][1]};
}

}  // namespace ncfield

#endif  // NCFIELD_NCTORUS_HPP
