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

#ifndef NCFIELD_REAL_HPP
#define NCFIELD_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <utility>

namespace ncfield {

using Real = boost::multiprecision::mpfr_float;

/// Scoped working precision in decimal digits.  Callers pass the digit
/// count explicitly; the guard keeps a few extra digits internally and
/// restores the previous precision on exit.
class PrecisionGuard {
   public:
    explicit PrecisionGuard(unsigned digits, unsigned guard_digits = 10)
        : old_(Real::default_precision()) {
        Real::default_precision(digits + guard_digits);
    }
    ~PrecisionGuard() { Real::default_precision(old_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

   private:
    unsigned old_;
};

inline Real real_pi() { return boost::multiprecision::acos(Real(-1)); }

inline Real pow10(long k) { return boost::multiprecision::pow(Real(10), k); }

struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(Real r) : re(std::move(r)), im(0) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& s) const { return {re * s, im * s}; }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex conj() const { return {re, -im}; }
    Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

/// e^{2 pi i a}.
inline Complex unit_circle(const Real& a) {
    Real t = 2 * real_pi() * a;
    return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

/// Decimal-string round trip used by all JSON surfaces (never binary
/// floats).
inline std::string real_to_string(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::fmtflags(0));
}
inline Real real_from_string(const std::string& s) { return Real(s); }

}  // namespace ncfield

#endif  // NCFIELD_REAL_HPP
