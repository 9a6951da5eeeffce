#pragma once

#include <string>
#include <vector>

#include "ratcycle/cycles.hpp"

namespace ratcycle {

// Eventually periodic base-p digit stream of a rational with denominator
// coprime to p, least significant digit first. The preperiod is minimal and
// the period primitive: both fall out of detecting the first repeated state
// of the digit recurrence.
struct PAdicExpansion {
    Int base;
    std::vector<Int> preperiod;
    std::vector<Int> period;

    // Digit at place value base^t.
    const Int& digit(std::size_t t) const {
        if (t < preperiod.size()) return preperiod[t];
        return period[(t - preperiod.size()) % period.size()];
    }
};

// How the digit tails of the two scaled cycle terms compare: identical
// beyond some place value, or differing everywhere (the persistent-carry
// case, as with the expansions of 0 and -1).
enum class TailAgreement { tail_equal, tail_complement };

struct PatternReport {
    long l;
    long i;
    long b;
    Int sigma_value;  // sigma(i, i+b)
    Int difference;   // p^l*x_i - p^sigma*x_{i+b}, exact integer
    TailAgreement agreement;
};

// Digit recurrence: with x = a/den, d_t = a_t*den^{-1} mod p and
// a_{t+1} = (a_t - d_t*den)/p; preperiod/period from the first repeated a_t.
PAdicExpansion expand(const Rational& x, const Int& p, long max_digits = 100000);

// The relation p^l*x_i - p^sigma(i,i+b)*x_{i+b} in Z for two-type
// compositions, certified by D | p^l - q^b. b may be anywhere in [0, n].
PatternReport pattern_check(const Composition& c, long l, long i, long b);

// Digit table in the row order x_0, x_{n-1}, ..., x_1, x_0, most significant
// displayed digit leftmost, digits >= 10 as letters A, B, ... Each row but
// the last carries the step taking it to the next row in the right margin.
std::string render_table(const Composition& c, const Int& p, long digit_count);

// CSV rows: i, numerator, denominator, preperiod digits, period digits
// (digits least significant first).
std::string render_table_csv(const Composition& c, const Int& p);

std::string digit_glyph(const Int& d);

}  // namespace ratcycle
