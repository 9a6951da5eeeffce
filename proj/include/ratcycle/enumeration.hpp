#pragma once

#include <string>
#include <vector>

#include "ratcycle/cycles.hpp"

namespace ratcycle {

// One S/T word together with its cycle data. The leftmost letter is B_0
// (applied last), matching the composition order convention.
struct CycleRecord {
    std::string word;  // over {S, T}
    long n;            // word length
    long m;            // count of S letters
    Int D;             // q^n - p^m
    Rational x0;
    bool is_integer;
    std::string rotation_class;  // lexicographically least rotation
};

struct RotationClassification {
    std::string canonical;
    std::vector<Rational> x;  // per-rotation fixed points = the cycle terms
};

// The composition of an S/T word: S -> (p, kS), T -> (1, kT).
Composition word_composition(const std::string& word, const Int& q, const Int& p, const Int& kS,
                             const Int& kT);

std::string canonical_rotation(const std::string& word);

// Every word of each length 1..max_len in length-then-lex order (T < S),
// skipping (and not emitting) words with D = 0.
std::vector<CycleRecord> enumerate_words(const Int& q, const Int& p, const Int& kS, const Int& kT,
                                         long max_len);

// The integer-x0 subset; optionally one record per rotation class.
std::vector<CycleRecord> find_integer_cycles(const Int& q, const Int& p, const Int& kS,
                                             const Int& kT, long max_len,
                                             bool dedup_rotations = false);

// Canonical rotation plus the fixed points of every rotation of the word.
RotationClassification classify_rotations(const std::string& word, const Int& q, const Int& p,
                                          const Int& kS, const Int& kT);

}  // namespace ratcycle
