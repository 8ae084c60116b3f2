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

#ifndef NCFIELD_FUNCFIELD_HPP
#define NCFIELD_FUNCFIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ncfield {

class FieldTower;
class FFElement;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Dense polynomials over F_p with int coefficients, constant term first.
/// Used for extension moduli and the internal representation of field elements.
namespace fpx {

using Poly = std::vector<int>;

inline void strip(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = static_cast<int>(v % p);
    }
    strip(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, long p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = static_cast<int>(((v % p) + p) % p);
    }
    strip(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<int>((r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
        }
    }
    strip(r);
    return r;
}

inline long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw division_by_zero("fpx: element not invertible mod p");
    return ((t % p) + p) % p;
}

/// Remainder of a modulo monic-or-not b (b nonzero).
inline Poly mod(Poly a, const Poly& b, long p) {
    if (b.empty()) throw division_by_zero("fpx::mod: zero modulus");
    long lcinv = inv_mod(b.back(), p);
    while (deg(a) >= deg(b)) {
        long c = (a.back() * lcinv) % p;
        int shift = deg(a) - deg(b);
        for (std::size_t i = 0; i < b.size(); ++i) {
            long v = a[i + shift] - c * b[i];
            a[i + shift] = static_cast<int>(((v % p) + p) % p);
        }
        strip(a);
    }
    return a;
}

inline Poly divq(Poly a, const Poly& b, long p) {
    if (b.empty()) throw division_by_zero("fpx::divq: zero divisor");
    long lcinv = inv_mod(b.back(), p);
    Poly q(std::max<int>(deg(a) - deg(b) + 1, 0), 0);
    while (deg(a) >= deg(b)) {
        long c = (a.back() * lcinv) % p;
        int shift = deg(a) - deg(b);
        q[shift] = static_cast<int>(c);
        for (std::size_t i = 0; i < b.size(); ++i) {
            long v = a[i + shift] - c * b[i];
            a[i + shift] = static_cast<int>(((v % p) + p) % p);
        }
        strip(a);
    }
    strip(q);
    return q;
}

inline Poly gcd(Poly a, Poly b, long p) {
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long c = inv_mod(a.back(), p);
        for (auto& x : a) x = static_cast<int>((x * c) % p);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    return mod(mul(a, b, p), m, p);
}

/// Extended Euclid based inverse of a modulo m.
inline Poly invmod(const Poly& a, const Poly& m, long p) {
    Poly t, nt = {1}, r = m, nr = mod(a, m, p);
    if (nr.empty()) throw division_by_zero("fpx::invmod: zero element");
    while (!nr.empty()) {
        Poly q = divq(r, nr, p);
        Poly tmp = sub(t, mul(q, nt, p), p);
        t = std::move(nt);
        nt = std::move(tmp);
        tmp = sub(r, mul(q, nr, p), p);
        r = std::move(nr);
        nr = std::move(tmp);
    }
    if (deg(r) != 0) throw division_by_zero("fpx::invmod: element not invertible");
    long c = inv_mod(r[0], p);
    for (auto& x : t) x = static_cast<int>((x * c) % p);
    strip(t);
    return t;
}

/// Irreducibility over F_p by trial division against all monic polynomials
/// of degree <= d/2.
inline bool is_irreducible(const Poly& f, long p) {
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        // enumerate monic polynomials of degree dd
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(dd + 1, 0);
            std::uint64_t t = idx;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// Lexicographically smallest monic irreducible of degree d over F_p, where
/// coefficient tuples (c_0, c_1, ..., c_{d-1}) are compared constant-first.
inline Poly smallest_irreducible(long p, int d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    // odometer over (c_0,...,c_{d-1}) in lexicographic order, c_0 outermost
    std::vector<int> c(d, 0);
    while (true) {
        for (int i = 0; i < d; ++i) g[i] = c[i];
        Poly f = g;
        strip(f);
        if (is_irreducible(f, p)) return g;
        int i = d - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw error("fpx: no irreducible polynomial found (unreachable)");
}

}  // namespace fpx

/// Element of F_{q^m} = F_p[x]/(g) with g the tower modulus of degree e*m.
/// Immutable after construction; arithmetic is closed at its level.
class FFElement {
   public:
    FFElement() = default;
    FFElement(TowerPtr tower, int level, fpx::Poly coeffs);

    const TowerPtr& tower() const { return tower_; }
    int level() const { return level_; }
    const fpx::Poly& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator-() const;
    FFElement operator*(const FFElement& o) const;
    FFElement inverse() const;
    FFElement pow(std::uint64_t n) const;
    /// x^{p^s}; same level as x.
    FFElement frobenius_p(std::uint64_t s) const;

    bool operator==(const FFElement& o) const;
    bool operator!=(const FFElement& o) const { return !(*this == o); }
    /// Canonical order: by level, then coefficient vector (degree-major).
    bool operator<(const FFElement& o) const;

   private:
    void check_compatible(const FFElement& o) const;

    TowerPtr tower_;
    int level_ = 0;
    fpx::Poly coeffs_;  // reduced mod tower modulus, trailing zeros stripped
};

/// A prime power q = p^e with a deterministic system of extension fields
/// F_{q^m}.  The modulus of every level is the lexicographically smallest
/// monic irreducible of the right degree over F_p, so towers with equal
/// (p, e) are interchangeable.  Caches are internally synchronized.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
   public:
    static constexpr long long kDefaultBound = 1LL << 20;

    static TowerPtr make(long p, int e, long long bound = kDefaultBound) {
        if (p < 2) throw non_prime_error("make_tower: p must be >= 2");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw non_prime_error("make_tower: p = " + std::to_string(p) + " is composite");
        if (e < 1) throw error("make_tower: e must be >= 1");
        long long q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            if (q > bound) throw bound_exceeded("make_tower: p^e exceeds bound");
        }
        return TowerPtr(new FieldTower(p, e, bound));
    }

    long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    long long bound() const { return bound_; }

    /// Number of elements of F_{q^m}; throws when above the bound.
    std::uint64_t size(int level) const {
        std::uint64_t n = 1;
        for (int i = 0; i < level * e_; ++i) {
            n *= static_cast<std::uint64_t>(p_);
            if (n > static_cast<std::uint64_t>(bound_))
                throw bound_exceeded("field size q^m exceeds configured bound");
        }
        return n;
    }

    /// Modulus of F_{q^m} over F_p (degree e*m), cached and deterministic.
    const fpx::Poly& modulus(int level) const {
        if (level < 1) throw error("modulus: level must be >= 1");
        std::lock_guard<std::mutex> lock(mu_);
        auto it = moduli_.find(level);
        if (it != moduli_.end()) return it->second;
        auto g = fpx::smallest_irreducible(p_, e_ * level);
        return moduli_.emplace(level, std::move(g)).first->second;
    }

    FFElement zero(int level) const { return FFElement(shared_from_this(), level, {}); }
    FFElement one(int level) const { return FFElement(shared_from_this(), level, {1}); }
    FFElement from_int(int level, long v) const {
        long c = ((v % p_) + p_) % p_;
        return FFElement(shared_from_this(), level, c == 0 ? fpx::Poly{} : fpx::Poly{static_cast<int>(c)});
    }
    FFElement from_coeffs(int level, fpx::Poly c) const {
        for (auto& x : c) x = static_cast<int>(((x % p_) + p_) % p_);
        c = fpx::mod(c, modulus(level), p_);
        return FFElement(shared_from_this(), level, std::move(c));
    }
    /// Residue class of x, a generator of F_{q^m} as an F_p-algebra.
    FFElement gen(int level) const { return from_coeffs(level, {0, 1}); }

    /// Element with index idx in the canonical enumeration of F_{q^m}
    /// (base-p digits of idx are the coefficients, constant first).
    FFElement element_at(int level, std::uint64_t idx) const {
        fpx::Poly c;
        int d = e_ * level;
        c.reserve(d);
        for (int i = 0; i < d; ++i) {
            c.push_back(static_cast<int>(idx % static_cast<std::uint64_t>(p_)));
            idx /= static_cast<std::uint64_t>(p_);
        }
        fpx::strip(c);
        return FFElement(shared_from_this(), level, std::move(c));
    }

    /// Embed x from its level into to_level (levels must divide).  The map
    /// sends the residue class of x at the lower level to the canonical
    /// (lexicographically smallest) root of the lower modulus in the
    /// higher field.
    FFElement embed(const FFElement& x, int to_level) const;

   private:
    FieldTower(long p, int e, long long bound) : p_(p), e_(e), bound_(bound) {
        q_ = 1;
        for (int i = 0; i < e; ++i) q_ *= p;
        modulus(1);  // construct eagerly so invalid towers fail early
    }

    const fpx::Poly& embedding_root(int from_level, int to_level) const;

    long p_;
    int e_;
    long long q_;
    long long bound_;
    mutable std::mutex mu_;
    mutable std::map<int, fpx::Poly> moduli_;
    mutable std::map<std::pair<int, int>, fpx::Poly> embed_roots_;
};

inline FFElement::FFElement(TowerPtr tower, int level, fpx::Poly coeffs)
    : tower_(std::move(tower)), level_(level), coeffs_(std::move(coeffs)) {
    fpx::strip(coeffs_);
}

inline void FFElement::check_compatible(const FFElement& o) const {
    if (!tower_ || !o.tower_) throw domain_mismatch("FFElement: uninitialized element");
    if (tower_->p() != o.tower_->p() || tower_->e() != o.tower_->e() || level_ != o.level_)
        throw domain_mismatch("FFElement: mixed fields in arithmetic");
}

inline FFElement FFElement::operator+(const FFElement& o) const {
    check_compatible(o);
    return FFElement(tower_, level_, fpx::add(coeffs_, o.coeffs_, tower_->p()));
}

inline FFElement FFElement::operator-(const FFElement& o) const {
    check_compatible(o);
    return FFElement(tower_, level_, fpx::sub(coeffs_, o.coeffs_, tower_->p()));
}

inline FFElement FFElement::operator-() const {
    return FFElement(tower_, level_, fpx::sub({}, coeffs_, tower_->p()));
}

inline FFElement FFElement::operator*(const FFElement& o) const {
    check_compatible(o);
    return FFElement(tower_, level_,
                     fpx::mulmod(coeffs_, o.coeffs_, tower_->modulus(level_), tower_->p()));
}

inline FFElement FFElement::inverse() const {
    if (is_zero()) throw division_by_zero("FFElement::inverse of zero");
    return FFElement(tower_, level_, fpx::invmod(coeffs_, tower_->modulus(level_), tower_->p()));
}

inline FFElement FFElement::pow(std::uint64_t n) const {
    FFElement r = tower_->one(level_);
    FFElement b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

inline FFElement FFElement::frobenius_p(std::uint64_t s) const {
    FFElement r = *this;
    for (std::uint64_t i = 0; i < s; ++i) r = r.pow(static_cast<std::uint64_t>(tower_->p()));
    return r;
}

inline bool FFElement::operator==(const FFElement& o) const {
    check_compatible(o);
    return coeffs_ == o.coeffs_;
}

inline bool FFElement::operator<(const FFElement& o) const {
    if (level_ != o.level_) return level_ < o.level_;
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    // degree-major: compare from the top coefficient down
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

/// frobenius(x, s) = x^{p^s}.
inline FFElement frobenius(const FFElement& x, std::uint64_t s) { return x.frobenius_p(s); }

inline const fpx::Poly& FieldTower::embedding_root(int from_level, int to_level) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(from_level, to_level);
    auto it = embed_roots_.find(key);
    if (it != embed_roots_.end()) return it->second;

    const fpx::Poly& g = moduli_.count(from_level) ? moduli_.at(from_level)
                                                   : moduli_.emplace(from_level, fpx::smallest_irreducible(p_, e_ * from_level)).first->second;
    const fpx::Poly& big = moduli_.count(to_level) ? moduli_.at(to_level)
                                                   : moduli_.emplace(to_level, fpx::smallest_irreducible(p_, e_ * to_level)).first->second;
    std::uint64_t n = 1;
    for (int i = 0; i < e_ * to_level; ++i) {
        n *= static_cast<std::uint64_t>(p_);
        if (n > static_cast<std::uint64_t>(bound_))
            throw bound_exceeded("embedding: target field exceeds bound");
    }
    std::optional<fpx::Poly> best;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        fpx::Poly y;
        std::uint64_t t = idx;
        for (int i = 0; i < e_ * to_level; ++i) {
            y.push_back(static_cast<int>(t % static_cast<std::uint64_t>(p_)));
            t /= static_cast<std::uint64_t>(p_);
        }
        fpx::strip(y);
        // evaluate g at y inside F_p[x]/(big), Horner
        fpx::Poly acc;
        for (std::size_t i = g.size(); i-- > 0;) {
            acc = fpx::mulmod(acc, y, big, p_);
            if (g[i] != 0) acc = fpx::add(acc, {g[i]}, p_);
        }
        if (acc.empty()) {
            auto lex_less = [](const fpx::Poly& a, const fpx::Poly& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                for (std::size_t i = a.size(); i-- > 0;)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            };
            if (!best || lex_less(y, *best)) best = y;
        }
    }
    if (!best) throw error("embedding: modulus has no root in target field (levels must divide)");
    return embed_roots_.emplace(key, std::move(*best)).first->second;
}

inline FFElement FieldTower::embed(const FFElement& x, int to_level) const {
    if (x.level() == to_level) return x;
    if (to_level % x.level() != 0)
        throw domain_mismatch("embed: source level must divide target level");
    const fpx::Poly& root = embedding_root(x.level(), to_level);
    const fpx::Poly& big = modulus(to_level);
    fpx::Poly acc;
    const fpx::Poly& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = fpx::mulmod(acc, root, big, p_);
        if (c[i] != 0) acc = fpx::add(acc, {c[i]}, p_);
    }
    return FFElement(shared_from_this(), to_level, std::move(acc));
}

/// Polynomial in A = F_q[T]; coefficients are level-1 elements indexed by
/// T-degree.  The zero polynomial has no coefficients and its degree is a
/// sentinel (std::nullopt).
class APoly {
   public:
    APoly() = default;
    explicit APoly(TowerPtr tower) : tower_(std::move(tower)) {}
    APoly(TowerPtr tower, std::vector<FFElement> coeffs)
        : tower_(std::move(tower)), c_(std::move(coeffs)) {
        strip();
    }

    static APoly from_ints(const TowerPtr& tower, const std::vector<long>& v) {
        std::vector<FFElement> c;
        c.reserve(v.size());
        for (long x : v) c.push_back(tower->from_int(1, x));
        return APoly(tower, std::move(c));
    }
    static APoly T(const TowerPtr& tower) { return from_ints(tower, {0, 1}); }
    static APoly constant(const TowerPtr& tower, FFElement x) {
        if (x.level() != 1) throw domain_mismatch("APoly: coefficients live at level 1");
        std::vector<FFElement> c;
        if (!x.is_zero()) c.push_back(std::move(x));
        return APoly(tower, std::move(c));
    }

    const TowerPtr& tower() const { return tower_; }
    const std::vector<FFElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    FFElement coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : tower_->zero(1);
    }
    FFElement leading() const {
        if (c_.empty()) throw zero_polynomial("APoly::leading of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    APoly operator+(const APoly& o) const {
        check(o);
        std::vector<FFElement> r(std::max(c_.size(), o.c_.size()), tower_->zero(1));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return APoly(tower_, std::move(r));
    }
    APoly operator-(const APoly& o) const {
        check(o);
        std::vector<FFElement> r(std::max(c_.size(), o.c_.size()), tower_->zero(1));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return APoly(tower_, std::move(r));
    }
    APoly operator-() const {
        std::vector<FFElement> r = c_;
        for (auto& x : r) x = -x;
        return APoly(tower_, std::move(r));
    }
    APoly operator*(const APoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return APoly(tower_);
        std::vector<FFElement> r(c_.size() + o.c_.size() - 1, tower_->zero(1));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return APoly(tower_, std::move(r));
    }

    std::pair<APoly, APoly> divmod(const APoly& d) const {
        check(d);
        if (d.is_zero()) throw division_by_zero("APoly::divmod by zero");
        APoly r = *this;
        std::vector<FFElement> q(
            c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, tower_->zero(1));
        FFElement lcinv = d.leading().inverse();
        while (!r.is_zero() && r.c_.size() >= d.c_.size()) {
            FFElement f = r.c_.back() * lcinv;
            std::size_t shift = r.c_.size() - d.c_.size();
            q[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r.c_[i + shift] = r.c_[i + shift] - f * d.c_[i];
            r.strip();
        }
        return {APoly(tower_, std::move(q)), std::move(r)};
    }
    APoly operator%(const APoly& d) const { return divmod(d).second; }
    APoly operator/(const APoly& d) const { return divmod(d).first; }

    APoly monic() const {
        if (is_zero()) return *this;
        FFElement inv = leading().inverse();
        std::vector<FFElement> r = c_;
        for (auto& x : r) x = x * inv;
        return APoly(tower_, std::move(r));
    }

    static APoly gcd(APoly a, APoly b) {
        while (!b.is_zero()) {
            APoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Evaluate at an element of F_{q^m}; coefficients are embedded up.
    FFElement eval(const FFElement& x) const {
        FFElement acc = x.tower()->zero(x.level());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x;
            if (!c_[i].is_zero()) acc = acc + tower_->embed(c_[i], x.level());
        }
        return acc;
    }

    bool operator==(const APoly& o) const { return c_ == o.c_; }
    bool operator!=(const APoly& o) const { return !(*this == o); }
    bool operator<(const APoly& o) const {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        }
        return false;
    }

   private:
    void check(const APoly& o) const {
        if (!tower_ || !o.tower_) throw domain_mismatch("APoly: uninitialized");
        if (tower_->p() != o.tower_->p() || tower_->e() != o.tower_->e())
            throw domain_mismatch("APoly: mixed towers");
    }
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    TowerPtr tower_;
    std::vector<FFElement> c_;
};

/// Element of k = F_q(T).  Denominator monic and coprime to the numerator
/// after every operation; normalization is idempotent.
class RatFunc {
   public:
    RatFunc() = default;
    explicit RatFunc(TowerPtr tower)
        : num_(APoly(tower)), den_(APoly::from_ints(tower, {1})) {}
    RatFunc(APoly num, APoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    explicit RatFunc(APoly num)
        : num_(std::move(num)), den_(APoly::from_ints(num_.tower(), {1})) {}

    static RatFunc T(const TowerPtr& tower) { return RatFunc(APoly::T(tower)); }
    static RatFunc constant(const TowerPtr& tower, const FFElement& x) {
        return RatFunc(APoly::constant(tower, x));
    }
    static RatFunc from_int(const TowerPtr& tower, long v) {
        return RatFunc(APoly::from_ints(tower, {v}));
    }

    const APoly& num() const { return num_; }
    const APoly& den() const { return den_; }
    const TowerPtr& tower() const { return num_.tower(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw division_by_zero("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc inverse() const {
        if (is_zero()) throw division_by_zero("RatFunc::inverse of zero");
        return RatFunc(den_, num_);
    }

    /// x^{p^s} computed coefficient-wise; Frobenius is a field homomorphism.
    RatFunc frobenius_p(std::uint64_t s) const {
        RatFunc r = *this;
        std::uint64_t n = 1;
        long p = tower()->p();
        for (std::uint64_t i = 0; i < s; ++i) n *= static_cast<std::uint64_t>(p);
        return r.pow(n);
    }
    RatFunc pow(std::uint64_t n) const {
        RatFunc r = from_int(tower(), 1);
        RatFunc b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

   private:
    void normalize() {
        if (den_.is_zero()) throw division_by_zero("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = APoly::from_ints(num_.tower(), {1});
            return;
        }
        APoly g = APoly::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        FFElement lcinv = den_.leading().inverse();
        num_ = num_ * APoly::constant(num_.tower(), lcinv);
        den_ = den_ * APoly::constant(num_.tower(), lcinv);
    }

    APoly num_;
    APoly den_;
};

/// Univariate polynomial over F_{q^m} (all coefficients at one level); the
/// root engine below works on these.
class UPolyFF {
   public:
    UPolyFF() = default;
    UPolyFF(TowerPtr tower, int level, std::vector<FFElement> coeffs)
        : tower_(std::move(tower)), level_(level), c_(std::move(coeffs)) {
        strip();
    }

    const TowerPtr& tower() const { return tower_; }
    int level() const { return level_; }
    const std::vector<FFElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    FFElement eval(const FFElement& x) const {
        FFElement acc = tower_->zero(x.level());
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x;
            if (!c_[i].is_zero()) acc = acc + tower_->embed(c_[i], x.level());
        }
        return acc;
    }

    /// Polynomial with coefficients embedded into to_level.
    UPolyFF lift(int to_level) const {
        std::vector<FFElement> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(tower_->embed(x, to_level));
        return UPolyFF(tower_, to_level, std::move(r));
    }

    /// Divide by (x - r); returns quotient, requires r to be a root.
    UPolyFF deflate(const FFElement& r) const {
        std::vector<FFElement> q(c_.size() > 0 ? c_.size() - 1 : 0, tower_->zero(level_));
        FFElement acc = tower_->zero(level_);
        for (std::size_t i = c_.size(); i-- > 1;) {
            acc = c_[i] + acc * r;
            q[i - 1] = acc;
        }
        return UPolyFF(tower_, level_, std::move(q));
    }

   private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    TowerPtr tower_;
    int level_ = 0;
    std::vector<FFElement> c_;
};

struct RootSet {
    std::vector<std::pair<FFElement, int>> roots;  // sorted canonically
    bool complete = false;
    int level = 0;  // level the roots live at
    std::uint64_t count_with_multiplicity() const {
        std::uint64_t n = 0;
        for (const auto& r : roots) n += static_cast<std::uint64_t>(r.second);
        return n;
    }
};

namespace detail {

inline int worker_count() {
    if (const char* env = std::getenv("NCFIELD_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace detail

/// Exhaustive root search of f over the extensions F_{q^{jm}} of its
/// coefficient field, for j*m <= max_level and field size within the tower
/// bound.  Stops at the lowest level where the root count (with
/// multiplicity) reaches deg f; otherwise reports the roots of the deepest
/// searched level with complete=false.  Output order is canonical.
inline RootSet roots_in_extension(const UPolyFF& f, int max_level) {
    if (f.is_zero()) throw zero_polynomial("roots_in_extension: zero polynomial");
    const TowerPtr& tower = f.tower();
    const int m = f.level();
    const int degf = *f.degree();
    RootSet result;
    result.level = m;
    for (int L = m; L <= max_level; L += m) {
        std::uint64_t n;
        try {
            n = tower->size(L);
        } catch (const bound_exceeded&) {
            break;
        }
        UPolyFF g = f.lift(L);
        std::vector<FFElement> found;
        int workers = detail::worker_count();
        if (workers > 1 && n >= 4096) {
            std::vector<std::vector<FFElement>> parts(workers);
            std::vector<std::thread> threads;
            std::uint64_t chunk = n / workers + 1;
            for (int w = 0; w < workers; ++w) {
                threads.emplace_back([&, w]() {
                    std::uint64_t lo = w * chunk, hi = std::min<std::uint64_t>(n, lo + chunk);
                    for (std::uint64_t idx = lo; idx < hi; ++idx) {
                        FFElement x = tower->element_at(L, idx);
                        if (g.eval(x).is_zero()) parts[w].push_back(std::move(x));
                    }
                });
            }
            for (auto& t : threads) t.join();
            for (auto& part : parts)
                for (auto& x : part) found.push_back(std::move(x));
        } else {
            for (std::uint64_t idx = 0; idx < n; ++idx) {
                FFElement x = tower->element_at(L, idx);
                if (g.eval(x).is_zero()) found.push_back(std::move(x));
            }
        }
        std::sort(found.begin(), found.end());
        RootSet rs;
        rs.level = L;
        for (const auto& x : found) {
            int mult = 0;
            UPolyFF h = g;
            while (!h.is_zero() && h.eval(x).is_zero()) {
                h = h.deflate(x);
                ++mult;
            }
            rs.roots.emplace_back(x, mult);
        }
        rs.complete = (rs.count_with_multiplicity() == static_cast<std::uint64_t>(degf));
        result = std::move(rs);
        if (result.complete) return result;
    }
    return result;
}

}  // namespace ncfield

#endif  // NCFIELD_FUNCFIELD_HPP
