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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "ncfield/nctorus.hpp"

using namespace ncfield;

namespace {

IntMat random_imat(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    IntMat m = detail::imat_zero(n);
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

// Elementary valid elements: diag(U, U^-t) for a unimodular transvection
// or permutation U, shears (I, S; 0, I) and (I, 0; S, I) with S
// skew-symmetric, and the block swap.
SOmmElement random_valid(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3), idx(0, n - 1), val(-2, 2);
    SOmmElement g = SOmmElement::identity(n);
    for (int step = 0; step < 4; ++step) {
        SOmmElement e = SOmmElement::identity(n);
        switch (kind(rng)) {
            case 0: {  // diag(U, U^-t), U = I + c E_ij
                int i = idx(rng), j = idx(rng);
                if (i == j) break;
                cpp_int c = val(rng);
                e.A[i][j] = c;
                e.D[j][i] = -c;  // (I + c E_ij)^-t = I - c E_ji
                break;
            }
            case 1: {  // upper shear with skew S
                int i = idx(rng), j = idx(rng);
                if (i == j) break;
                cpp_int c = val(rng);
                e.B[i][j] = c;
                e.B[j][i] = -c;
                break;
            }
            case 2: {  // lower shear with skew S
                int i = idx(rng), j = idx(rng);
                if (i == j) break;
                cpp_int c = val(rng);
                e.C[i][j] = c;
                e.C[j][i] = -c;
                break;
            }
            default:
                e = SOmmElement::swap(n);
        }
        g = somm_mul(g, e);
    }
    return g;
}

Real norm_diff(const ThetaMatrix& a, const ThetaMatrix& b) {
    Real m = 0;
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.m; ++j) {
            Real d = boost::multiprecision::abs(a.entries[i][j] - b.entries[i][j]);
            if (d > m) m = d;
        }
    return m;
}

}  // namespace

TEST_CASE("tridiagonal Theta form") {
    PrecisionGuard guard(60);
    auto t = theta_tridiagonal({Real("0.5")});
    REQUIRE(t.m == 2);
    REQUIRE(t.entries[0][1] == Real("0.5"));
    REQUIRE(t.entries[1][0] == Real("-0.5"));

    auto t3 = theta_tridiagonal({Real(1), Real(2)});
    REQUIRE(t3.m == 3);
    REQUIRE(t3.entries[0][2] == 0);
    REQUIRE(theta_superdiagonal(t3) == std::vector<Real>{Real(1), Real(2)});

    REQUIRE_THROWS_AS(theta_tridiagonal({}), shape_mismatch);
}

TEST_CASE("somm_check examples") {
    REQUIRE(somm_check(SOmmElement::identity(2)));
    REQUIRE(somm_check(SOmmElement::swap(2)));

    // m = 1, A = D = I, B = I, C = 0: B^t D + D^t B = 2 != 0
    SOmmElement bad(detail::imat_identity(1), detail::imat_identity(1),
                    detail::imat_zero(1), detail::imat_identity(1));
    REQUIRE_FALSE(somm_check(bad));

    REQUIRE(quadratic_form_check(SOmmElement::identity(3)));
    REQUIRE(quadratic_form_check(SOmmElement::swap(3)));
    REQUIRE_FALSE(quadratic_form_check(bad));
}

TEST_CASE("somm_check agrees with quadratic_form_check on 200 random tuples") {
    std::mt19937_64 rng(20260824);
    for (int n : {2, 3})
        for (int t = 0; t < 100; ++t) {
            SOmmElement g(random_imat(n, rng), random_imat(n, rng),
                          random_imat(n, rng), random_imat(n, rng));
            REQUIRE(somm_check(g) == quadratic_form_check(g));
        }
}

TEST_CASE("somm_act examples") {
    PrecisionGuard guard(80);
    Real th("0.731");
    auto T = theta_tridiagonal({th});

    // identity acts trivially, exactly
    auto T1 = somm_act(SOmmElement::identity(2), T, 60);
    REQUIRE(T1.entries[0][1] == th);

    // the swap inverts: theta -> -1/theta
    auto T2 = somm_act(SOmmElement::swap(2), T, 60);
    REQUIRE(boost::multiprecision::abs(T2.entries[0][1] + 1 / th) < pow10(-50));
    // result is skew within tracked radius
    REQUIRE(boost::multiprecision::abs(T2.entries[0][1] + T2.entries[1][0]) <=
            2 * T2.radius + pow10(-50));

    // singular denominator: swap with theta = 0
    std::vector<std::vector<Real>> z(2, std::vector<Real>(2, Real(0)));
    REQUIRE_THROWS_AS(somm_act(SOmmElement::swap(2), ThetaMatrix(z), 60),
                      singular_denominator);
}

TEST_CASE("group law and action composition on 50 random valid pairs") {
    PrecisionGuard guard(80);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dth(0.1, 0.9);
    int done = 0;
    while (done < 50) {
        int n = 2 + (done % 2);
        SOmmElement g = random_valid(n, rng);
        SOmmElement h = random_valid(n, rng);
        SOmmElement gh = somm_mul(g, h);
        REQUIRE(somm_check(g));
        REQUIRE(somm_check(h));
        REQUIRE(somm_check(gh));

        std::vector<Real> alphas;
        for (int k = 0; k + 1 < n; ++k) alphas.push_back(Real(dth(rng)));
        auto T = theta_tridiagonal(alphas);
        ThetaMatrix lhs(T.entries), rhs(T.entries);
        try {
            ThetaMatrix inner = somm_act(h, T, 60);
            lhs = somm_act(g, inner, 60);
            rhs = somm_act(gh, T, 60);
        } catch (const singular_denominator&) {
            continue;  // the orbit left the domain; draw again
        } catch (const precision_exhausted&) {
            continue;
        }
        Real tol = 10 * (lhs.radius + rhs.radius) + pow10(-45);
        REQUIRE(norm_diff(lhs, rhs) <= tol);
        ++done;
    }
}

TEST_CASE("scaled relation constants") {
    PrecisionGuard guard(80);

    // t = 1, alpha = 0 -> rho = 1
    auto r0 = scaled_relations({Real(0)}, Real(1), 60);
    REQUIRE(boost::multiprecision::abs(r0.values[0].re - 1) < pow10(-55));
    REQUIRE(boost::multiprecision::abs(r0.values[0].im) < pow10(-55));

    // t = e, alpha = 1/4 -> rho = e i
    auto r1 = scaled_relations({Real(1) / 4}, exp(Real(1)), 60);
    REQUIRE(boost::multiprecision::abs(r1.values[0].re) < pow10(-55));
    REQUIRE(boost::multiprecision::abs(r1.values[0].im - exp(Real(1))) < pow10(-55));

    // t = log(phi), alpha = phi; value pinned from two independent
    // evaluations at 40 digits
    Real phi = (1 + sqrt(Real(5))) / 2;
    auto r2 = scaled_relations({phi}, log(phi), 60);
    REQUIRE(boost::multiprecision::abs(
                r2.values[0].re - Real("-0.3548306235622205399544352583509")) <
            Real("1e-25"));
    REQUIRE(boost::multiprecision::abs(
                r2.values[0].im - Real("-0.3250539173116363695024518043580")) <
            Real("1e-25"));

    // unit modulus before scaling: |rho| / t = 1
    for (const auto* rc : {&r0, &r1, &r2})
        REQUIRE(boost::multiprecision::abs(rc->values[0].abs() / rc->t - 1) < pow10(-50));

    REQUIRE_THROWS_AS(scaled_relations({Real(0)}, Real(0), 60), nonpositive_scale);
    REQUIRE_THROWS_AS(scaled_relations({Real(0)}, Real(-1), 60), nonpositive_scale);
}

TEST_CASE("real-multiplication certification") {
    PrecisionGuard guard(80);
    auto certs = certify_real_multiplication(
        {sqrt(Real(2)), Real(1) / 2,
         Real("0.1234567890123456789012345678901234567890123456789012345678")},
        4, cpp_int(1000), 60);
    REQUIRE(certs.size() == 3);
    REQUIRE(certs[0]);
    REQUIRE(*certs[0] == IntPoly{-2, 0, 1});
    REQUIRE(certs[1]);
    REQUIRE(*certs[1] == IntPoly{-1, 2});
    REQUIRE_FALSE(certs[2]);
}

TEST_CASE("trace module generators (m = 2)") {
    PrecisionGuard guard(60);
    auto T = theta_tridiagonal({Real("0.25")});
    auto gens = trace_module_generators(T);
    REQUIRE(gens.first == 1);
    REQUIRE(gens.second == Real("0.25"));
    auto T3 = theta_tridiagonal({Real(1), Real(2)});
    REQUIRE_THROWS_AS(trace_module_generators(T3), shape_mismatch);
}
