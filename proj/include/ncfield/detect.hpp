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

#ifndef NCFIELD_DETECT_HPP
#define NCFIELD_DETECT_HPP

#include <algorithm>
#include <optional>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "lll.hpp"
#include "real.hpp"

namespace ncfield {

/// Integer polynomial, coefficients ascending by power.
using IntPoly = std::vector<cpp_int>;

inline Real intpoly_eval(const IntPoly& p, const Real& x) {
    Real acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + Real(it->str());
    return acc;
}

inline Complex intpoly_eval(const IntPoly& p, const Complex& x) {
    Complex acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + Complex(Real(it->str()));
    return acc;
}

namespace detail {

inline void normalize_intpoly(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    cpp_int g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    if (g > 1)
        for (auto& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
}

inline cpp_int round_to_int(const Real& x) {
    Real r = boost::multiprecision::round(x);
    std::string s = r.str(0, std::ios_base::fixed);
    if (auto dot = s.find('.'); dot != std::string::npos) s.erase(dot);
    if (s.empty() || s == "-") s = "0";
    return cpp_int(s);
}

/// One lattice search at a fixed degree.  Rows are e_i augmented with the
/// scaled powers of v; short combinations of the power columns give
/// candidate vanishing polynomials in the identity part.
template <typename V>
std::optional<IntPoly> search_degree(const V& v, int d, unsigned precision,
                                     const cpp_int& height_bound) {
    const Real scale = pow10(static_cast<long>(precision));
    std::vector<V> powers(d + 1);
    powers[0] = V(Real(1));
    for (int i = 1; i <= d; ++i) powers[i] = powers[i - 1] * v;

    constexpr bool complex_mode = std::is_same_v<V, Complex>;
    const int extra = complex_mode ? 2 : 1;
    std::vector<std::vector<cpp_int>> basis(d + 1,
                                            std::vector<cpp_int>(d + 1 + extra, 0));
    for (int i = 0; i <= d; ++i) {
        basis[i][i] = 1;
        if constexpr (complex_mode) {
            basis[i][d + 1] = round_to_int(powers[i].re * scale);
            basis[i][d + 2] = round_to_int(powers[i].im * scale);
        } else {
            basis[i][d + 1] = round_to_int(powers[i] * scale);
        }
    }
    lll_reduce(basis);

    const Real threshold = pow10(-static_cast<long>(precision) / 2);
    std::optional<IntPoly> best;
    for (const auto& row : basis) {
        IntPoly p(row.begin(), row.begin() + d + 1);
        normalize_intpoly(p);
        if (p.size() < 2) continue;  // need degree >= 1
        bool tall = false;
        for (const auto& c : p)
            if (abs(c) > height_bound) tall = true;
        if (tall) continue;
        Real resid;
        if constexpr (complex_mode) {
            resid = intpoly_eval(p, v).abs();
        } else {
            Real e = intpoly_eval(p, v);
            resid = e < 0 ? -e : e;
        }
        if (resid >= threshold) continue;
        if (!best || p.size() < best->size() || (p.size() == best->size() && p < *best))
            best = std::move(p);
    }
    return best;
}

}  // namespace detail

/// Search for an integer polynomial of degree <= degree_bound and
/// coefficient height <= height_bound vanishing at v.  A candidate is
/// returned only if |p(v)| < 10^{-precision/2}; degrees are tried in
/// ascending order so the first hit is the minimal polynomial.
template <typename V>
std::optional<IntPoly> detect_minpoly(const V& v, unsigned precision, int degree_bound,
                                      const cpp_int& height_bound) {
    if (degree_bound < 1) throw error("detect_minpoly: degree bound must be positive");
    if (precision < 10u * static_cast<unsigned>(degree_bound))
        throw insufficient_precision(
            "detect_minpoly: precision below floor of 10 digits per degree");
    PrecisionGuard guard(precision, 30);
    for (int d = 1; d <= degree_bound; ++d) {
        auto hit = detail::search_degree(v, d, precision, height_bound);
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace ncfield

#endif  // NCFIELD_DETECT_HPP
