#pragma once

#include <random>

#include "ratcycle/cycles.hpp"

namespace ratcycle::testing {

// Random valid composition: q in [-5,5]\{0}, p_i in [-9,9]\{0} coprime to q,
// k_i in [-9,9], n in [1,8], D != 0.
inline Composition random_composition(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> q_dist(-5, 5);
    std::uniform_int_distribution<int> pk_dist(-9, 9);
    std::uniform_int_distribution<int> n_dist(1, 8);
    for (;;) {
        int q = q_dist(rng);
        if (q == 0) continue;
        int n = n_dist(rng);
        std::vector<AffineStep> steps;
        while (static_cast<int>(steps.size()) < n) {
            int p = pk_dist(rng);
            if (p == 0 || gcd(Int(p), Int(q)) != 1) continue;
            steps.push_back({Int(p), Int(pk_dist(rng))});
        }
        Composition c(q, std::move(steps));
        if (discriminant(c) != 0) return c;
    }
}

inline const char* kSpec4 = "q=3\nsteps=(-5,-2) (2,1) (7,6) (-1,-3)";
inline const char* kSpec5 = "q=2\np=11\nword=T0 T0 T0 T0 S5 T0 S3";

}  // namespace ratcycle::testing
