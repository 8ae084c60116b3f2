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

// Carlitz module over F_3 at gamma(T) = 1: enumerate the T^2-torsion,
// report the module structure and the Frobenius matrix mod T^2.

#include <iostream>

#include "ncfield/drinfeld.hpp"
#include "ncfield/json_io.hpp"

using namespace ncfield;

int main() {
    auto tower = FieldTower::make(3, 1);
    SpecialDrinfeld D = carlitz_at(tower, tower->from_int(1, 1));
    APoly a = APoly::from_ints(tower, {0, 0, 1});  // a = T^2

    std::cout << "predicted |Lambda[T^2]| = " << torsion_count_predict(D, a) << "\n";
    TorsionModule tm = torsion(D, a, 6);
    std::cout << "found " << tm.roots.size() << " torsion points at level " << tm.level
              << (tm.complete ? "" : " (incomplete)") << "\n";

    std::cout << "invariant factors:";
    for (const auto& d : tm.invariants) std::cout << " (" << io::apoly_to_string(d) << ")";
    std::cout << "\n";
    std::cout << "free of rank 1 over A/(T^2): " << (tm.is_free_of_rank(1) ? "yes" : "no")
              << "\n";

    auto mat = frobenius_matrix(tm);
    std::cout << "Frobenius matrix mod T^2:\n";
    for (const auto& row : mat) {
        for (const auto& x : row) std::cout << "  [" << io::apoly_to_string(x) << "]";
        std::cout << "\n";
    }
    return 0;
}
