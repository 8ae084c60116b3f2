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

#ifndef NCFIELD_ERRORS_HPP
#define NCFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncfield {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_prime_error : error {
    explicit non_prime_error(const std::string& m) : error(m) {}
};
struct bound_exceeded : error {
    explicit bound_exceeded(const std::string& m) : error(m) {}
};
struct domain_mismatch : error {
    explicit domain_mismatch(const std::string& m) : error(m) {}
};
struct zero_polynomial : error {
    explicit zero_polynomial(const std::string& m) : error(m) {}
};
struct division_by_zero : error {
    explicit division_by_zero(const std::string& m) : error(m) {}
};
struct carrier_mismatch : error {
    explicit carrier_mismatch(const std::string& m) : error(m) {}
};
struct inseparable_error : error {
    explicit inseparable_error(const std::string& m) : error(m) {}
};
struct incomplete_torsion : error {
    explicit incomplete_torsion(const std::string& m) : error(m) {}
};
struct nonfree_structure : error {
    explicit nonfree_structure(const std::string& m) : error(m) {}
};
struct direction_out_of_range : error {
    explicit direction_out_of_range(const std::string& m) : error(m) {}
};
struct not_laurent : error {
    explicit not_laurent(const std::string& m) : error(m) {}
};
struct invalid_triangulation : error {
    explicit invalid_triangulation(const std::string& m) : error(m) {}
};
struct shape_mismatch : error {
    explicit shape_mismatch(const std::string& m) : error(m) {}
};
struct singular_denominator : error {
    explicit singular_denominator(const std::string& m) : error(m) {}
};
struct precision_exhausted : error {
    explicit precision_exhausted(const std::string& m) : error(m) {}
};
struct nonpositive_scale : error {
    explicit nonpositive_scale(const std::string& m) : error(m) {}
};
struct no_perron_root : error {
    explicit no_perron_root(const std::string& m) : error(m) {}
};
struct degenerate_lift : error {
    explicit degenerate_lift(const std::string& m) : error(m) {}
};
struct insufficient_precision : error {
    explicit insufficient_precision(const std::string& m) : error(m) {}
};

/// Parse error with a character position (0-based) into the input text.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& m, std::size_t pos)
        : error(m + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace ncfield

#endif  // NCFIELD_ERRORS_HPP
