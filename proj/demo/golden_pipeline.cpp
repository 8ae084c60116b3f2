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

// End-to-end walk for x^2 - x - 1: Perron data, torus generators in both
// modes, and LLL re-certification of the real generator scale.

#include <iostream>

#include "ncfield/functor.hpp"

using namespace ncfield;

int main() {
    PrecisionGuard guard(60);
    IntPoly p{-1, -1, 1};

    RMData rm = functor_map(p, 50);
    std::cout << "epsilon       = " << real_to_string(rm.epsilon, 50) << "\n";
    std::cout << "alpha_1       = " << real_to_string(rm.alphas[0], 50) << "\n";
    std::cout << "provenance    = " << rm.provenance << "\n";

    GeneratorSet gc = generators(rm, GeneratorMode::complex_mode, 50);
    std::cout << "complex gen   = " << real_to_string(gc.values[0].re, 50) << " + "
              << real_to_string(gc.values[0].im, 50) << " i\n";

    GeneratorSet gr = generators(rm, GeneratorMode::real_mode, 60, true);
    std::cout << "real gen      = " << real_to_string(gr.values[0].re, 50) << "\n";

    auto cert = detect_minpoly(rm.epsilon, 60, 6, cpp_int(1000000));
    if (cert) {
        std::cout << "epsilon cert  =";
        for (const cpp_int& c : *cert) std::cout << " " << c;
        std::cout << "\n";
    } else {
        std::cout << "epsilon cert  = none\n";
    }
    return 0;
}
