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

#ifndef NCFIELD_ORE_HPP
#define NCFIELD_ORE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "funcfield.hpp"

namespace ncfield {

namespace detail {

// Coefficient domain shims: the Ore ring is generic over its coefficients;
// the two instantiations are RatFunc (domain k) and FFElement (finite
// carrier F_{q^m}).

inline bool same_domain(const RatFunc& a, const RatFunc& b) {
    return a.tower() && b.tower() && a.tower()->p() == b.tower()->p() &&
           a.tower()->e() == b.tower()->e();
}
inline bool same_domain(const FFElement& a, const FFElement& b) {
    return a.tower() && b.tower() && a.tower()->p() == b.tower()->p() &&
           a.tower()->e() == b.tower()->e() && a.level() == b.level();
}
inline RatFunc domain_one(const RatFunc& model) { return RatFunc::from_int(model.tower(), 1); }
inline FFElement domain_one(const FFElement& model) { return model.tower()->one(model.level()); }
inline RatFunc domain_zero(const RatFunc& model) { return RatFunc(model.tower()); }
inline FFElement domain_zero(const FFElement& model) { return model.tower()->zero(model.level()); }
inline long domain_char(const RatFunc& model) { return model.tower()->p(); }
inline long domain_char(const FFElement& model) { return model.tower()->p(); }

}  // namespace detail

/// Twisted polynomial f = c_0 + c_1 t + ... + c_d t^d in k<t> with the
/// commutation rule t*c = c^p * t (t is the p-power Frobenius).  Also acts
/// as the additive polynomial x -> sum c_i x^{p^i}.
template <class C>
class OrePoly {
   public:
    OrePoly() = default;
    explicit OrePoly(C model) : model_(std::move(model)) {}
    OrePoly(C model, std::vector<C> coeffs) : model_(std::move(model)), c_(std::move(coeffs)) {
        strip();
    }

    static OrePoly zero(const C& model) { return OrePoly(model); }
    static OrePoly one(const C& model) { return OrePoly(model, {detail::domain_one(model)}); }
    static OrePoly tau(const C& model) {
        return OrePoly(model, {detail::domain_zero(model), detail::domain_one(model)});
    }
    static OrePoly constant(const C& value) {
        OrePoly r(value);
        if (!value.is_zero()) r.c_ = {value};
        return r;
    }

    long twist() const { return detail::domain_char(model_); }
    const C& model() const { return model_; }
    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : detail::domain_zero(model_); }

    OrePoly operator+(const OrePoly& o) const {
        check(o);
        std::vector<C> r;
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
        return OrePoly(model_, std::move(r));
    }
    OrePoly operator-(const OrePoly& o) const {
        check(o);
        std::vector<C> r;
        std::size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) - o.coeff(i));
        return OrePoly(model_, std::move(r));
    }
    OrePoly operator-() const {
        std::vector<C> r = c_;
        for (auto& x : r) x = -x;
        return OrePoly(model_, std::move(r));
    }

    /// Product under (a t^i)(b t^j) = a b^{p^i} t^{i+j}.
    OrePoly operator*(const OrePoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return OrePoly(model_);
        std::vector<C> r(c_.size() + o.c_.size() - 1, detail::domain_zero(model_));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                r[i + j] = r[i + j] + c_[i] * o.c_[j].frobenius_p(i);
            }
        }
        return OrePoly(model_, std::move(r));
    }

    bool operator==(const OrePoly& o) const { return c_ == o.c_; }
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    /// The additive form is separable iff the constant coefficient is nonzero.
    bool is_separable() const {
        if (is_zero()) throw zero_polynomial("ore_is_separable: zero polynomial");
        return !c_[0].is_zero();
    }

   private:
    void check(const OrePoly& o) const {
        if (!detail::same_domain(model_, o.model_))
            throw domain_mismatch("OrePoly: mixed coefficient domains");
    }
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    C model_;  // carries the domain (tower, level) even when c_ is empty
    std::vector<C> c_;
};

template <class C>
OrePoly<C> ore_mul(const OrePoly<C>& f, const OrePoly<C>& g) {
    return f * g;
}

/// Evaluate the additive form sum c_i x^{p^i} at x in the coefficient
/// domain itself.
template <class C>
C ore_eval(const OrePoly<C>& f, const C& x) {
    if (!detail::same_domain(f.model(), x))
        throw domain_mismatch("ore_eval: argument outside coefficient domain");
    C acc = detail::domain_zero(x);
    C xp = x;  // x^{p^i}
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) xp = xp.frobenius_p(1);
        if (!f.coeffs()[i].is_zero()) acc = acc + f.coeffs()[i] * xp;
    }
    return acc;
}

/// Evaluate an OrePoly with finite-field coefficients at a point of an
/// extension of the coefficient field (levels must divide).
inline FFElement ore_eval_ext(const OrePoly<FFElement>& f, const FFElement& x) {
    const TowerPtr& tower = x.tower();
    if (!tower || f.model().tower()->p() != tower->p() || f.model().tower()->e() != tower->e())
        throw domain_mismatch("ore_eval_ext: mixed towers");
    if (x.level() % f.model().level() != 0)
        throw domain_mismatch("ore_eval_ext: coefficient level must divide argument level");
    FFElement acc = tower->zero(x.level());
    FFElement xp = x;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) xp = xp.frobenius_p(1);
        if (!f.coeffs()[i].is_zero()) acc = acc + tower->embed(f.coeffs()[i], x.level()) * xp;
    }
    return acc;
}

template <class C>
bool ore_is_separable(const OrePoly<C>& f) {
    return f.is_separable();
}

/// The additive polynomial sum c_i x^{p^i} of an OrePoly over a finite
/// carrier, as a univariate polynomial ready for the root engine.
inline UPolyFF additive_form(const OrePoly<FFElement>& f) {
    const TowerPtr& tower = f.model().tower();
    int level = f.model().level();
    if (f.is_zero()) return UPolyFF(tower, level, {});
    long p = tower->p();
    std::uint64_t top = 1;
    for (int i = 0; i < *f.degree(); ++i) top *= static_cast<std::uint64_t>(p);
    std::vector<FFElement> c(top + 1, tower->zero(level));
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        c[pw] = f.coeffs()[i];
        pw *= static_cast<std::uint64_t>(p);
    }
    return UPolyFF(tower, level, std::move(c));
}

using OreK = OrePoly<RatFunc>;    // coefficients in k = F_q(T)
using OreF = OrePoly<FFElement>;  // coefficients in a finite carrier

}  // namespace ncfield

#endif  // NCFIELD_ORE_HPP
