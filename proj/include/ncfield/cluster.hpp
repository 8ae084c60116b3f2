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

#ifndef NCFIELD_CLUSTER_HPP
#define NCFIELD_CLUSTER_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "mpoly.hpp"

namespace ncfield {

/// Skew-symmetric integer exchange matrix.
struct ExchangeMatrix {
    std::vector<std::vector<long long>> b;

    explicit ExchangeMatrix(std::vector<std::vector<long long>> m) : b(std::move(m)) {
        std::size_t n = b.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (b[i].size() != n) throw shape_mismatch("ExchangeMatrix: not square");
            for (std::size_t j = 0; j < n; ++j)
                if (b[i][j] != -b[j][i])
                    throw error("ExchangeMatrix: matrix is not skew-symmetric");
        }
    }
    int rank() const { return static_cast<int>(b.size()); }
    bool operator==(const ExchangeMatrix& o) const { return b == o.b; }
};

/// Cluster variable as a reduced rational function in the initial
/// variables.  Denominators are sign-normalized (positive leading
/// coefficient); reduction prefers exact division (the Laurent fast path)
/// and falls back to a multivariate gcd.
class ClusterVar {
   public:
    ClusterVar() = default;
    ClusterVar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    static ClusterVar initial(int nvars, int i) {
        return ClusterVar(MPoly::var(nvars, i), MPoly::constant(nvars, 1));
    }
    static ClusterVar constant(int nvars, cpp_int c) {
        return ClusterVar(MPoly::constant(nvars, std::move(c)), MPoly::constant(nvars, 1));
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    ClusterVar operator+(const ClusterVar& o) const {
        return ClusterVar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    ClusterVar operator*(const ClusterVar& o) const {
        return ClusterVar(num_ * o.num_, den_ * o.den_);
    }
    ClusterVar operator/(const ClusterVar& o) const {
        if (o.is_zero()) throw division_by_zero("ClusterVar: division by zero");
        return ClusterVar(num_ * o.den_, den_ * o.num_);
    }
    ClusterVar pow(int k) const {
        ClusterVar r = constant(num_.nvars(), 1);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const ClusterVar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ClusterVar& o) const { return !(*this == o); }
    bool operator<(const ClusterVar& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

   private:
    void reduce() {
        if (den_.is_zero()) throw division_by_zero("ClusterVar: zero denominator");
        int n = num_.nvars();
        if (num_.is_zero()) {
            den_ = MPoly::constant(n, 1);
            return;
        }
        // strip the common monomial factor
        std::vector<int> mins(n, 1 << 30);
        auto scan = [&](const MPoly& f) {
            for (const auto& [e, c] : f.terms())
                for (int i = 0; i < n; ++i) mins[i] = std::min(mins[i], e[i]);
        };
        scan(num_);
        scan(den_);
        bool any = false;
        for (int i = 0; i < n; ++i) any = any || mins[i] > 0;
        if (any) {
            MPoly mono = MPoly::monomial(mins, 1);
            num_ = *num_.divided_by(mono);
            den_ = *den_.divided_by(mono);
        }
        cpp_int c = boost::multiprecision::gcd(num_.content(), den_.content());
        if (c > 1) {
            num_ = *num_.divided_by(MPoly::constant(n, c));
            den_ = *den_.divided_by(MPoly::constant(n, c));
        }
        if (!den_.is_constant() || den_.leading().second != 1) {
            if (auto q = num_.divided_by(den_)) {
                num_ = std::move(*q);
                den_ = MPoly::constant(n, 1);
            } else if (auto qd = den_.divided_by(num_)) {
                den_ = std::move(*qd);
                num_ = MPoly::constant(n, 1);
            } else {
                MPoly g = mpoly_gcd(num_, den_);
                if (!g.is_one()) {
                    num_ = *num_.divided_by(g);
                    den_ = *den_.divided_by(g);
                }
            }
        }
        if (den_.leading().second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    MPoly num_;
    MPoly den_;
};

/// Laurent expansion: exponent vector (possibly negative entries) -> coeff.
using LaurentExpansion = std::map<std::vector<int>, cpp_int>;

struct LaurentCertificate {
    bool ok = false;
    int offending = -1;  // index of the first non-Laurent variable when !ok
    std::vector<LaurentExpansion> expansions;
};

/// Certify that v is a Laurent polynomial: the reduced denominator must be
/// a monomial with coefficient +-1.
inline std::optional<LaurentExpansion> laurent_expansion(const ClusterVar& v) {
    const MPoly& d = v.den();
    if (!d.is_monomial()) return std::nullopt;
    auto [de, dc] = d.leading();
    if (dc != 1 && dc != -1) return std::nullopt;
    LaurentExpansion ex;
    for (const auto& [e, c] : v.num().terms()) {
        std::vector<int> shifted(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) shifted[i] = e[i] - de[i];
        ex[std::move(shifted)] = dc == 1 ? c : -c;
    }
    return ex;
}

/// Every Laurent coefficient divisible by p (the level-p congruence
/// filter).
inline bool congruence_level_p(const LaurentExpansion& ex, long p) {
    for (const auto& [e, c] : ex)
        if (c % p != 0) return false;
    return true;
}

/// A seed: n cluster variables as exact rational functions plus the
/// exchange matrix and the mutation word that produced it.
struct Seed {
    std::vector<ClusterVar> vars;
    ExchangeMatrix B;
    std::vector<int> history;

    static Seed initial(ExchangeMatrix B0) {
        int n = B0.rank();
        std::vector<ClusterVar> v;
        v.reserve(n);
        for (int i = 0; i < n; ++i) v.push_back(ClusterVar::initial(n, i));
        return Seed{std::move(v), std::move(B0), {}};
    }

    bool operator==(const Seed& o) const { return vars == o.vars && B == o.B; }
};

/// Seed mutation in direction k (1-based) by the exchange relations.
inline Seed mutate(const Seed& s, int k) {
    int n = s.B.rank();
    if (k < 1 || k > n) throw direction_out_of_range("mutate: direction out of range");
    int kk = k - 1;
    ClusterVar mplus = ClusterVar::constant(n, 1);
    ClusterVar mminus = ClusterVar::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        long long bik = s.B.b[i][kk];
        if (bik > 0) mplus = mplus * s.vars[i].pow(static_cast<int>(bik));
        if (bik < 0) mminus = mminus * s.vars[i].pow(static_cast<int>(-bik));
    }
    ClusterVar xk = (mplus + mminus) / s.vars[kk];

    std::vector<std::vector<long long>> b2 = s.B.b;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == kk || j == kk) {
                b2[i][j] = -s.B.b[i][j];
            } else {
                long long bik = s.B.b[i][kk], bkj = s.B.b[kk][j];
                b2[i][j] = s.B.b[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
            }
        }
    }
    Seed out{s.vars, ExchangeMatrix(std::move(b2)), s.history};
    out.vars[kk] = std::move(xk);
    out.history.push_back(k);
    return out;
}

inline LaurentCertificate laurent_certify(const Seed& s) {
    LaurentCertificate cert;
    cert.ok = true;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        auto ex = laurent_expansion(s.vars[i]);
        if (!ex) {
            cert.ok = false;
            cert.offending = static_cast<int>(i);
            cert.expansions.clear();
            return cert;
        }
        cert.expansions.push_back(std::move(*ex));
    }
    return cert;
}

/// A triangulated surface: triangles are ordered arc-index triples
/// (clockwise).  Arcs appearing in exactly two triangle sides are interior
/// and index the exchange matrix; arcs appearing once are boundary/frozen
/// and excluded.
struct SurfaceSpec {
    int genus = 0;
    int n_cusps = 0;
    std::vector<std::array<int, 3>> triangles;  // 1-based arc indices
};

struct TriangulationMatrix {
    ExchangeMatrix B;
    std::vector<int> interior_arcs;  // original 1-based labels, ascending
};

inline TriangulationMatrix triangulation_to_matrix(const SurfaceSpec& spec) {
    if (spec.triangles.empty()) throw invalid_triangulation("empty triangulation");
    std::map<int, int> occurrences;
    for (const auto& t : spec.triangles)
        for (int arc : t) {
            if (arc < 1) throw invalid_triangulation("arc indices are 1-based");
            ++occurrences[arc];
        }
    std::vector<int> interior;
    bool has_boundary = false;
    for (const auto& [arc, cnt] : occurrences) {
        if (cnt == 2) interior.push_back(arc);
        else if (cnt == 1) has_boundary = true;
        else throw invalid_triangulation("arc " + std::to_string(arc) +
                                         " appears in more than two triangle sides");
    }
    if (interior.empty()) throw invalid_triangulation("no interior arcs");
    if (!has_boundary) {
        // closed/punctured case: Euler characteristic must match (g, n)
        long long chi = static_cast<long long>(spec.n_cusps) -
                        static_cast<long long>(occurrences.size()) +
                        static_cast<long long>(spec.triangles.size());
        if (chi != 2 - 2 * static_cast<long long>(spec.genus))
            throw invalid_triangulation("Euler characteristic does not match genus/cusps");
    }
    std::map<int, int> index;
    for (std::size_t i = 0; i < interior.size(); ++i) index[interior[i]] = static_cast<int>(i);
    int n = static_cast<int>(interior.size());
    std::vector<std::vector<long long>> b(n, std::vector<long long>(n, 0));
    for (const auto& t : spec.triangles) {
        for (int s = 0; s < 3; ++s) {
            int u = t[s], v = t[(s + 1) % 3];  // v immediately follows u clockwise
            auto iu = index.find(u), iv = index.find(v);
            if (iu == index.end() || iv == index.end()) continue;
            b[iu->second][iv->second] += 1;
            b[iv->second][iu->second] -= 1;
        }
    }
    return TriangulationMatrix{ExchangeMatrix(std::move(b)), std::move(interior)};
}

}  // namespace ncfield

#endif  // NCFIELD_CLUSTER_HPP
