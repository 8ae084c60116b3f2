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

// From a triangulated once-punctured torus to its exchange matrix, then a
// short mutation walk with Laurent certificates at every step.

#include <iostream>

#include "ncfield/cluster.hpp"
#include "ncfield/json_io.hpp"

using namespace ncfield;

int main() {
    SurfaceSpec surface;
    surface.genus = 1;
    surface.n_cusps = 1;
    surface.triangles = {{1, 2, 3}, {1, 2, 3}};

    auto tri = triangulation_to_matrix(surface);
    std::cout << "exchange matrix of the once-punctured torus:\n";
    for (int i = 0; i < tri.B.rank(); ++i) {
        for (int j = 0; j < tri.B.rank(); ++j) std::cout << "  " << tri.B.b[i][j];
        std::cout << "\n";
    }

    Seed s = Seed::initial(tri.B);
    for (int k : {1, 2, 3, 1}) {
        s = mutate(s, k);
        auto cert = laurent_certify(s);
        std::cout << "after mu_" << k << ": Laurent "
                  << (cert.ok ? "certified" : "FAILED") << ", x_" << k << " has "
                  << cert.expansions[static_cast<std::size_t>(k) - 1].size()
                  << " monomials\n";
    }
    std::cout << "final variable x_1 = " << io::clustervar_to_string(s.vars[0]) << "\n";
    return 0;
}
