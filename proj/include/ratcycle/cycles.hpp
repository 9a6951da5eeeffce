#pragma once

#include <vector>

#include "ratcycle/composition.hpp"

namespace ratcycle {

// Exact solution of the cycle equations for one composition.
struct CycleSolution {
    Int D;                    // q^n - p_0...p_{n-1}
    std::vector<Rational> U;  // U_i = q^i / D for i = 0..n
    std::vector<Rational> x;  // x_i fixed by rotate(c, i), i = 0..n-1
    Int common_den;           // shared reduced denominator of every x_i
};

// q^n - prod p_i. Zero is a legal return; the solvers reject it.
Int discriminant(const Composition& c);

// All cycle terms via the closed-form sums. Throws degenerate_cycle when
// D = 0. The result always satisfies x_i = B_i(x_{i+1}).
CycleSolution solve_cycle(const Composition& c);

// Independent route to x_0: fold the steps innermost-first into one affine
// map (A*x + C)/q^n and solve its fixed-point equation. Exists to catch
// index-arithmetic mistakes in the closed form.
Rational affine_fold_fixed_point(const Composition& c);

// True iff x_i = B_i(x_{i+1}) for all i and each x_i matches the fold oracle
// on the corresponding rotation.
bool verify_closure(const Composition& c, const CycleSolution& sol);

}  // namespace ratcycle
