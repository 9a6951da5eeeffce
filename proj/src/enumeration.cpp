#include "ratcycle/enumeration.hpp"

#include <algorithm>

namespace ratcycle {

Composition word_composition(const std::string& word, const Int& q, const Int& p, const Int& kS,
                             const Int& kT) {
    require(!word.empty(), errc::bad_argument, "word must be nonempty");
    std::vector<AffineStep> steps;
    steps.reserve(word.size());
    for (char letter : word) {
        require(letter == 'S' || letter == 'T', errc::bad_argument,
                std::string("word letter must be S or T, got '") + letter + "'");
        steps.push_back(letter == 'S' ? AffineStep{p, kS} : AffineStep{Int(1), kT});
    }
    return Composition(q, std::move(steps), p);
}

std::string canonical_rotation(const std::string& word) {
    std::string best = word;
    std::string candidate = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
        if (candidate < best) best = candidate;
    }
    return best;
}

std::vector<CycleRecord> enumerate_words(const Int& q, const Int& p, const Int& kS, const Int& kT,
                                         long max_len) {
    require(max_len >= 1, errc::bad_argument, "max length must be >= 1");
    require(q != 0 && p != 0, errc::validation_error, "q and p must be nonzero");
    require(gcd(p, q) == 1, errc::validation_error,
            "gcd(p, q) = gcd(" + p.get_str() + ", " + q.get_str() + ") != 1");

    std::vector<CycleRecord> records;
    std::string word;
    for (long len = 1; len <= max_len; ++len) {
        // Lex order per length with T < S: count masks, most significant bit
        // is the leftmost letter (B_0).
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            word.clear();
            long m = 0;
            for (long t = 0; t < len; ++t) {
                bool s = (mask >> (len - 1 - t)) & 1ul;
                word.push_back(s ? 'S' : 'T');
                m += s;
            }
            Int d = ipow(q, static_cast<unsigned long>(len)) - ipow(p, static_cast<unsigned long>(m));
            if (d == 0) continue;
            Composition c = word_composition(word, q, p, kS, kT);
            Rational x0 = affine_fold_fixed_point(c);
            records.push_back(
                {word, len, m, std::move(d), x0, x0.is_integer(), canonical_rotation(word)});
        }
    }
    return records;
}

std::vector<CycleRecord> find_integer_cycles(const Int& q, const Int& p, const Int& kS,
                                             const Int& kT, long max_len, bool dedup_rotations) {
    std::vector<CycleRecord> integers;
    std::vector<std::string> seen_classes;
    for (CycleRecord& rec : enumerate_words(q, p, kS, kT, max_len)) {
        if (!rec.is_integer) continue;
        if (dedup_rotations) {
            if (std::find(seen_classes.begin(), seen_classes.end(), rec.rotation_class) !=
                seen_classes.end())
                continue;
            seen_classes.push_back(rec.rotation_class);
        }
        integers.push_back(std::move(rec));
    }
    return integers;
}

RotationClassification classify_rotations(const std::string& word, const Int& q, const Int& p,
                                          const Int& kS, const Int& kT) {
    Composition c = word_composition(word, q, p, kS, kT);
    require(discriminant(c) != 0, errc::degenerate_cycle, "word has D = 0");
    RotationClassification out;
    out.canonical = canonical_rotation(word);
    out.x.reserve(word.size());
    for (long i = 0; i < static_cast<long>(word.size()); ++i)
        out.x.push_back(affine_fold_fixed_point(c.rotate(i)));
    return out;
}

}  // namespace ratcycle
