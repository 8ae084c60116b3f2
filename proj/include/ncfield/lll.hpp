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

#ifndef NCFIELD_LLL_HPP
#define NCFIELD_LLL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "errors.hpp"

namespace ncfield {

using boost::multiprecision::cpp_int;

/// All-integer LLL reduction (delta = 3/4) of a basis given as rows.
/// Rows must be linearly independent.  Exact arithmetic throughout.
inline void lll_reduce(std::vector<std::vector<cpp_int>>& b) {
    const int n = static_cast<int>(b.size());
    if (n <= 1) return;
    auto dot = [&](int i, int j) {
        cpp_int s = 0;
        for (std::size_t t = 0; t < b[i].size(); ++t) s += b[i][t] * b[j][t];
        return s;
    };
    // d[i+1] = Gram determinant d_i; d[0] = 1
    std::vector<cpp_int> d(n + 1);
    std::vector<std::vector<cpp_int>> lam(n, std::vector<cpp_int>(n, 0));
    d[0] = 1;
    d[1] = dot(0, 0);
    if (d[1] == 0) throw error("lll_reduce: dependent basis");

    auto redi = [&](int k, int l) {
        if (2 * abs(lam[k][l]) > d[l + 1]) {
            cpp_int num = 2 * lam[k][l] + d[l + 1];
            cpp_int den = 2 * d[l + 1];
            // round(lam/d) via floor((2*lam + d) / (2*d))
            cpp_int q = num >= 0 ? cpp_int(num / den) : cpp_int(-((-num + den - 1) / den));
            for (std::size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
            lam[k][l] -= q * d[l + 1];
            for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
        }
    };
    auto swapi = [&](int k, int kmax) {
        std::swap(b[k], b[k - 1]);
        for (int j = 0; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        cpp_int l = lam[k][k - 1];
        cpp_int B = (d[k - 1] * d[k + 1] + l * l) / d[k];
        for (int i = k + 1; i <= kmax; ++i) {
            cpp_int t = lam[i][k];
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - l * t) / d[k];
            lam[i][k - 1] = (B * t + l * lam[i][k]) / d[k + 1];
        }
        d[k] = B;
    };

    int k = 1, kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (int j = 0; j <= k; ++j) {
                cpp_int u = dot(k, j);
                for (int i = 0; i < j; ++i) u = (d[i + 1] * u - lam[k][i] * lam[j][i]) / d[i];
                if (j < k) lam[k][j] = u;
                else {
                    d[k + 1] = u;
                    if (u == 0) throw error("lll_reduce: dependent basis");
                }
            }
        }
        while (true) {
            redi(k, k - 1);
            if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
                swapi(k, kmax);
                k = std::max(1, k - 1);
            } else {
                for (int l = k - 2; l >= 0; --l) redi(k, l);
                ++k;
                break;
            }
        }
    }
}

}  // namespace ncfield

#endif  // NCFIELD_LLL_HPP
