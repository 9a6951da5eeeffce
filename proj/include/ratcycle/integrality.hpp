#pragma once

#include <utility>
#include <vector>

#include "ratcycle/cycles.hpp"

namespace ratcycle {

// A certified divisibility witness: nonzero alpha, beta and 0 < b < n with
// D | alpha + beta*q^b. Construction checks the certificate.
struct Witness {
    Int alpha;
    Int beta;
    long b;
    friend bool operator==(const Witness&, const Witness&) = default;
};

// The M_j terms from the combination's expansion over the step shifts k_j,
// together with the combination value they sum to.
struct DecompositionReport {
    std::vector<Int> M;  // length n
    Int combination;     // = sum_j k_j * M_j
};

// True iff D | alpha + beta*q^b; cross-checked against alpha*U_0 + beta*U_b
// being an integer (the two must agree).
bool is_witness(const Composition& c, const Int& alpha, const Int& beta, long b);

// Checked constructor; throws not_certified when the divisibility fails.
Witness make_witness(const Composition& c, const Int& alpha, const Int& beta, long b);

// (alpha, beta, b) -> ((prod p)*beta, alpha, n-b), again a valid witness.
Witness lemma1_transform(const Composition& c, const Witness& w);

// The pair (alpha*U_i + beta*U_{i+b}, (prod p)*beta*U_i + alpha*U_{n+i-b}),
// both verified integers.
std::pair<Int, Int> lemma2_shift(const Composition& c, const Witness& w, long i);

// alpha*x_i + beta*p_i...p_{i+b-1}*x_{i+b}, an exact integer for any i
// (wraparound included; x indices reduce mod n). A non-integer here is a
// program bug, not a user error.
Int theorem_combination(const Composition& c, const Witness& w, long i);
// Same, reusing an already-computed solution (hot loops).
Int theorem_combination(const Composition& c, const CycleSolution& sol, const Witness& w, long i);

// The M_j expansion for the non-wraparound case 0 <= i < i+b < n; every M_j
// is verified integer and sum k_j*M_j equals theorem_combination.
DecompositionReport decompose_m(const Composition& c, const Witness& w, long i);

// The edge cases b = 0 and b = n, kept apart from Witness: returns the
// per-i integers (alpha+beta)*x_i (b=0) or (alpha + (prod p)*beta)*x_i (b=n).
std::vector<Int> remark_edge(const Composition& c, const Int& alpha, const Int& beta, long b);

// Every witness with 0 < |alpha| <= alpha_bound, 0 < |beta| <= beta_bound,
// 0 < b < n, ordered lexicographically by (b, alpha, beta).
std::vector<Witness> search_witnesses(const Composition& c, const Int& alpha_bound,
                                      const Int& beta_bound);

// The totient family (k, -k*q^(phi(|D|)-1), 1). Unavailable for n = 1.
Witness canonical_witness(const Composition& c, const Int& k);

}  // namespace ratcycle
