#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ratcycle/rational.hpp"

namespace ratcycle {

// One affine step B_i(x) = (p*x + k)/q. The common q lives on the
// Composition.
struct AffineStep {
    Int p;
    Int k;
    friend bool operator==(const AffineStep&, const AffineStep&) = default;
};

// The composition P = B_0 o B_1 o ... o B_{n-1}.
//
// ORDER CONVENTION: B_{n-1} is applied FIRST (innermost), B_0 last, so
// P(x) = B_0(B_1(...B_{n-1}(x)...)). Equivalently the cycle terms satisfy
// x_i = B_i(x_{i+1}) with indices mod n. Everything downstream (closed
// forms, witnesses, digit tables) hangs off this convention.
class Composition {
public:
    // Validates q != 0, n >= 1, every p_i != 0 and gcd(p_i, q) = 1.
    Composition(Int q, std::vector<AffineStep> steps,
                std::optional<Int> declared_p = std::nullopt);

    const Int& q() const { return q_; }
    std::size_t size() const { return steps_.size(); }
    // Index reduced mod n, so callers may roam freely.
    const AffineStep& step(long i) const { return steps_[reduce(i)]; }
    const std::vector<AffineStep>& steps() const { return steps_; }

    std::size_t reduce(long i) const {
        long n = static_cast<long>(steps_.size());
        long r = i % n;
        return static_cast<std::size_t>(r < 0 ? r + n : r);
    }

    // (p_i*x + k_i)/q, exact.
    Rational apply_step(long i, const Rational& x) const;

    // prod p_t for t = i..j-1 with indices mod n; requires 0 <= j-i <= n.
    Int p_product(long i, long j) const;

    // prod of all p_i.
    Int p_full() const { return p_product(0, static_cast<long>(size())); }

    // Two-type means every p_i is 1 or one fixed p (the S/T setting of the
    // applications section).
    bool is_two_type() const;
    // The two-type multiplier p; the declared p of a word-form spec wins,
    // otherwise the unique p_i != 1 (or 1 for an all-T composition).
    Int two_type_p() const;
    // Count of S-type steps (p_t != 1) among t = i..j-1; requires two-type
    // and 0 <= j-i <= n.
    Int sigma(long i, long j) const;

    // Steps reordered to start at index i (the composition fixing x_i).
    Composition rotate(long i) const;

    // Step list concatenated k times; requires k >= 1.
    Composition power(long k) const;

    // Spec-file text that parse_spec maps back to *this.
    std::string render() const;

    const std::optional<Int>& declared_p() const { return declared_p_; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.q_ == b.q_ && a.steps_ == b.steps_;
    }

private:
    Int q_;
    std::vector<AffineStep> steps_;
    std::optional<Int> declared_p_;
};

// Parses the spec-file grammar:
//   q=3
//   steps=(-5,-2) (2,1) (7,6) (-1,-3)
// or the word form
//   q=2
//   p=11
//   word=T0 T0 T0 T0 S5 T0 S3
// '#' starts a comment; tokens T and S without a subscript mean (1,0) and
// (p,1). Throws ParseError with line/column, or Error(validation_error) when
// the parsed values break the Composition invariants.
Composition parse_spec(const std::string& text);

}  // namespace ratcycle
