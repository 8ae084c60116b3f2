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

#ifndef NCFIELD_ROOTFIND_HPP
#define NCFIELD_ROOTFIND_HPP

#include <algorithm>
#include <vector>

#include "detect.hpp"
#include "errors.hpp"
#include "real.hpp"

namespace ncfield {

namespace detail {

inline Complex cpoly_eval(const std::vector<Complex>& p, const Complex& z) {
    Complex acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline std::vector<Complex> cpoly_derivative(const std::vector<Complex>& p) {
    std::vector<Complex> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Real(static_cast<long>(i)));
    return d;
}

}  // namespace detail

/// All complex roots of a real-coefficient polynomial (ascending coeffs)
/// by Aberth-Ehrlich simultaneous iteration.  Degree must be >= 1 and the
/// leading coefficient nonzero.
inline std::vector<Complex> poly_roots(const std::vector<Real>& coeffs, unsigned digits) {
    std::vector<Real> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2) throw error("poly_roots: degree must be at least 1");
    PrecisionGuard guard(digits, 20);

    std::vector<Complex> roots;
    // split off roots at the origin first
    std::size_t k0 = 0;
    while (k0 < c.size() && c[k0] == 0) ++k0;
    for (std::size_t i = 0; i < k0; ++i) roots.emplace_back(Real(0), Real(0));
    std::vector<Complex> p;
    for (std::size_t i = k0; i < c.size(); ++i) p.emplace_back(c[i] / c.back(), Real(0));
    const int n = static_cast<int>(p.size()) - 1;
    if (n == 0) return roots;

    // Cauchy bound initial ring with an irrational-ish angular offset
    Real radius = 0;
    for (int i = 0; i < n; ++i) {
        Real a = boost::multiprecision::abs(p[i].re);
        if (a > radius) radius = a;
    }
    radius += 1;
    std::vector<Complex> z(n);
    Real two_pi = 2 * real_pi();
    for (int i = 0; i < n; ++i) {
        Real ang = two_pi * Real(i) / n + Real("0.3573");
        z[i] = Complex(radius * boost::multiprecision::cos(ang),
                       radius * boost::multiprecision::sin(ang)) * Real("0.8");
    }

    std::vector<Complex> dp = detail::cpoly_derivative(p);
    const Real tol = pow10(-static_cast<long>(digits));
    for (int iter = 0; iter < 600; ++iter) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            Complex pv = detail::cpoly_eval(p, z[i]);
            Complex dv = detail::cpoly_eval(dp, z[i]);
            if (dv.abs() == 0) {
                z[i] = z[i] + Complex(tol, tol);
                worst = radius;
                continue;
            }
            Complex w = pv / dv;
            Complex s;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (diff.abs() == 0) diff = Complex(tol, tol);
                s = s + Complex(Real(1), Real(0)) / diff;
            }
            Complex denom = Complex(Real(1), Real(0)) - w * s;
            Complex corr = denom.abs() == 0 ? w : w / denom;
            z[i] = z[i] - corr;
            Real step = corr.abs() / (Real(1) + z[i].abs());
            if (step > worst) worst = step;
        }
        if (worst < tol) break;
    }
    // polish real-axis roots: tiny imaginary parts collapse to zero
    const Real snap = pow10(-static_cast<long>(digits) + 5);
    for (auto& r : z) {
        if (boost::multiprecision::abs(r.im) < snap * (Real(1) + boost::multiprecision::abs(r.re)))
            r.im = 0;
    }
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

inline std::vector<Complex> poly_roots(const IntPoly& p, unsigned digits) {
    std::vector<Real> c;
    c.reserve(p.size());
    for (const auto& a : p) c.emplace_back(a.str());
    return poly_roots(c, digits);
}

/// Newton refinement of a real root seed to full working precision.
inline Real newton_refine(const IntPoly& p, Real x, unsigned digits) {
    PrecisionGuard guard(digits, 20);
    IntPoly dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * cpp_int(i));
    const Real tol = pow10(-static_cast<long>(digits));
    for (int iter = 0; iter < 200; ++iter) {
        Real f = intpoly_eval(p, x);
        Real d = intpoly_eval(dp, x);
        if (d == 0) break;
        Real step = f / d;
        x -= step;
        if (boost::multiprecision::abs(step) < tol * (Real(1) + boost::multiprecision::abs(x)))
            break;
    }
    return x;
}

}  // namespace ncfield

#endif  // NCFIELD_ROOTFIND_HPP
