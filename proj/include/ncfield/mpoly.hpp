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

#ifndef NCFIELD_MPOLY_HPP
#define NCFIELD_MPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ncfield {

using boost::multiprecision::cpp_int;

/// Sparse multivariate polynomial over Z with a fixed number of variables.
/// Exponent vectors are non-negative; terms are kept in lexicographic order
/// by the std::map, which doubles as the monomial order for division.
class MPoly {
   public:
    using Expo = std::vector<int>;
    using Terms = std::map<Expo, cpp_int>;

    explicit MPoly(int nvars = 0) : n_(nvars) {}

    static MPoly constant(int nvars, cpp_int c) {
        MPoly r(nvars);
        if (c != 0) r.t_[Expo(nvars, 0)] = std::move(c);
        return r;
    }
    static MPoly var(int nvars, int i, int power = 1) {
        MPoly r(nvars);
        Expo e(nvars, 0);
        e[i] = power;
        r.t_[std::move(e)] = 1;
        return r;
    }
    static MPoly monomial(Expo e, cpp_int c) {
        MPoly r(static_cast<int>(e.size()));
        if (c != 0) r.t_[std::move(e)] = std::move(c);
        return r;
    }

    int nvars() const { return n_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->second == 1 &&
               t_.begin()->first == Expo(n_, 0);
    }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo(n_, 0));
    }
    bool is_monomial() const { return t_.size() == 1; }

    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) {
            auto& v = r.t_[e];
            v += c;
            if (v == 0) r.t_.erase(e);
        }
        return r;
    }
    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [e, c] : o.t_) {
            auto& v = r.t_[e];
            v -= c;
            if (v == 0) r.t_.erase(e);
        }
        return r;
    }
    MPoly operator-() const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) r.t_[e] = -c;
        return r;
    }
    MPoly operator*(const MPoly& o) const {
        MPoly r(n_);
        for (const auto& [e1, c1] : t_) {
            for (const auto& [e2, c2] : o.t_) {
                Expo e(n_);
                for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
                r.t_[std::move(e)] += c1 * c2;
            }
        }
        // drop explicit zeros
        for (auto it = r.t_.begin(); it != r.t_.end();) {
            if (it->second == 0) it = r.t_.erase(it);
            else ++it;
        }
        return r;
    }
    MPoly operator*(const cpp_int& c) const {
        if (c == 0) return MPoly(n_);
        MPoly r(n_);
        for (const auto& [e, v] : t_) r.t_[e] = v * c;
        return r;
    }

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return t_ < o.t_; }

    /// Leading term in the map's lexicographic order (largest key).
    std::pair<Expo, cpp_int> leading() const {
        if (t_.empty()) throw zero_polynomial("MPoly::leading of zero");
        return *t_.rbegin();
    }

    cpp_int content() const {
        cpp_int g = 0;
        for (const auto& [e, c] : t_) g = boost::multiprecision::gcd(g, c);
        return g;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : t_) d = std::max(d, e[var]);
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// Exact division by d; std::nullopt when d does not divide this.
    std::optional<MPoly> divided_by(const MPoly& d) const {
        if (d.is_zero()) throw division_by_zero("MPoly: division by zero polynomial");
        MPoly rem = *this;
        MPoly quot(n_);
        auto [de, dc] = d.leading();
        while (!rem.is_zero()) {
            auto [re, rc] = rem.leading();
            Expo qe(n_);
            for (int i = 0; i < n_; ++i) {
                qe[i] = re[i] - de[i];
                if (qe[i] < 0) return std::nullopt;
            }
            if (rc % dc != 0) return std::nullopt;
            MPoly term = MPoly::monomial(qe, rc / dc);
            quot = quot + term;
            rem = rem - term * d;
        }
        return quot;
    }

    /// Substitute: var i -> value (used by the seed reducers and tests).
    MPoly eval_partial(int var, const cpp_int& value) const {
        MPoly r(n_);
        for (const auto& [e, c] : t_) {
            cpp_int v = c;
            for (int k = 0; k < e[var]; ++k) v *= value;
            Expo e2 = e;
            e2[var] = 0;
            auto& slot = r.t_[std::move(e2)];
            slot += v;
        }
        for (auto it = r.t_.begin(); it != r.t_.end();) {
            if (it->second == 0) it = r.t_.erase(it);
            else ++it;
        }
        return r;
    }

   private:
    int n_;
    Terms t_;
};

namespace mpdetail {

/// View an n-variable polynomial as univariate in variable `var` with
/// (n)-variable coefficient polynomials (the variable itself removed from
/// the exponents of the coefficients).
inline std::vector<MPoly> to_univariate(const MPoly& f, int var) {
    std::vector<MPoly> c(f.degree_in(var) + 1, MPoly(f.nvars()));
    if (f.is_zero()) return {};
    for (const auto& [e, coeff] : f.terms()) {
        MPoly::Expo e2 = e;
        int d = e2[var];
        e2[var] = 0;
        c[d] = c[d] + MPoly::monomial(std::move(e2), coeff);
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return c;
}

inline MPoly from_univariate(const std::vector<MPoly>& c, int var) {
    int n = c.empty() ? 0 : c[0].nvars();
    MPoly r(n);
    for (std::size_t d = 0; d < c.size(); ++d)
        r = r + c[d] * MPoly::var(n, var, static_cast<int>(d));
    return r;
}

MPoly gcd(const MPoly& a, const MPoly& b);  // forward

/// gcd of a list of polynomials.
inline MPoly gcd_list(const std::vector<MPoly>& v, int n) {
    MPoly g(n);
    for (const auto& f : v) {
        g = gcd(g, f);
        if (g.is_one()) break;
    }
    return g;
}

inline std::pair<MPoly, std::vector<MPoly>> primitive_part(const std::vector<MPoly>& u, int n) {
    MPoly cont = gcd_list(u, n);
    if (cont.is_zero()) return {cont, u};
    std::vector<MPoly> pp;
    pp.reserve(u.size());
    for (const auto& c : u) pp.push_back(*c.divided_by(cont));
    return {cont, pp};
}

/// Pseudo-remainder of univariate polynomial sequences with MPoly
/// coefficients: prem(a, b) = (lc(b)^{da-db+1} * a) mod b.
inline std::vector<MPoly> pseudo_rem(std::vector<MPoly> a, const std::vector<MPoly>& b) {
    const MPoly& lcb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        MPoly lca = a.back();
        std::vector<MPoly> next(a.size() - 1, MPoly(lca.nvars()));
        // lcb * a - lca * b * x^{da-db}
        for (int i = 0; i < da; ++i) next[i] = a[i] * lcb;
        for (int i = 0; i < db; ++i)
            next[i + (da - db)] = next[i + (da - db)] - b[i] * lca;
        while (!next.empty() && next.back().is_zero()) next.pop_back();
        a = std::move(next);
    }
    return a;
}

/// Multivariate gcd over Z via primitive pseudo-remainder sequences.  Sign
/// convention: the result's leading coefficient (recursively) is positive.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
    int n = a.nvars() ? a.nvars() : b.nvars();
    if (a.is_zero() && b.is_zero()) return MPoly(n);
    if (a.is_zero()) return gcd(b, a);
    if (b.is_zero()) {
        cpp_int c = a.content();
        MPoly r = *a.divided_by(MPoly::constant(n, c));
        if (r.leading().second < 0) r = -r;
        return r * c;  // |content| * positive primitive part
    }
    if (a.is_constant() || b.is_constant()) {
        cpp_int ca = a.content(), cb = b.content();
        return MPoly::constant(n, boost::multiprecision::gcd(ca, cb));
    }
    // pick the first variable actually present in both
    int var = -1;
    for (int i = 0; i < n; ++i) {
        if (a.degree_in(i) > 0 && b.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    if (var < 0) {
        // no shared variable: gcd is the gcd of contents w.r.t. any var of each
        for (int i = 0; i < n; ++i)
            if (a.degree_in(i) > 0) {
                auto [cont, pp] = primitive_part(to_univariate(a, i), n);
                return gcd(cont, b);
            }
        return gcd(MPoly::constant(n, a.content()), b);
    }
    auto ua = to_univariate(a, var);
    auto ub = to_univariate(b, var);
    auto [ca, pa] = primitive_part(ua, n);
    auto [cb, pb] = primitive_part(ub, n);
    MPoly cont_gcd = gcd(ca, cb);
    std::vector<MPoly> r0 = pa, r1 = pb;
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        std::vector<MPoly> r2 = pseudo_rem(r0, r1);
        auto [c2, p2] = primitive_part(r2, n);
        (void)c2;
        r0 = std::move(r1);
        r1 = std::move(p2);
    }
    MPoly g = from_univariate(r0, var);
    // primitive part in var, positive leading sign
    auto [cg, pg] = primitive_part(to_univariate(g, var), n);
    (void)cg;
    g = from_univariate(pg, var);
    if (g.leading().second < 0) g = -g;
    return g * cont_gcd;
}

}  // namespace mpdetail

inline MPoly mpoly_gcd(const MPoly& a, const MPoly& b) { return mpdetail::gcd(a, b); }

}  // namespace ncfield

#endif  // NCFIELD_MPOLY_HPP
