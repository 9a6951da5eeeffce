#include "ratcycle/integrality.hpp"

namespace ratcycle {

namespace {

Int checked_discriminant(const Composition& c) {
    Int d = discriminant(c);
    require(d != 0, errc::degenerate_cycle, "witness machinery needs D != 0");
    return d;
}

Rational u_value(const Composition& c, const Int& d, long i) {
    require(i >= 0, errc::bad_argument, "U index must be nonnegative");
    return Rational(ipow(c.q(), static_cast<unsigned long>(i)), d);
}

Int as_integer(const Rational& r, const char* what) {
    invariant(r.is_integer(), std::string(what) + " is not an integer: " + r.str());
    return r.num();
}

}  // namespace

bool is_witness(const Composition& c, const Int& alpha, const Int& beta, long b) {
    require(alpha != 0 && beta != 0, errc::zero_coefficient,
            "witness coefficients must be nonzero");
    require(b > 0 && b < static_cast<long>(c.size()), errc::bad_b,
            "witness shift b must satisfy 0 < b < n");
    Int d = checked_discriminant(c);
    bool by_divisibility = divides(d, alpha + beta * ipow(c.q(), static_cast<unsigned long>(b)));
    Rational combo = Rational(alpha) * u_value(c, d, 0) + Rational(beta) * u_value(c, d, b);
    invariant(by_divisibility == combo.is_integer(),
              "divisibility and U-combination certification disagree");
    return by_divisibility;
}

Witness make_witness(const Composition& c, const Int& alpha, const Int& beta, long b) {
    Int d = discriminant(c);
    require(is_witness(c, alpha, beta, b), errc::not_certified,
            d.get_str() + " does not divide " +
                Int(alpha + beta * ipow(c.q(), static_cast<unsigned long>(b))).get_str());
    return Witness{alpha, beta, b};
}

Witness lemma1_transform(const Composition& c, const Witness& w) {
    Witness out{c.p_full() * w.beta, w.alpha, static_cast<long>(c.size()) - w.b};
    invariant(is_witness(c, out.alpha, out.beta, out.b),
              "lemma 2.1 transform produced an uncertified witness");
    return out;
}

std::pair<Int, Int> lemma2_shift(const Composition& c, const Witness& w, long i) {
    require(i >= 0, errc::bad_argument, "shift index must be nonnegative");
    Int d = checked_discriminant(c);
    long n = static_cast<long>(c.size());
    Rational first = Rational(w.alpha) * u_value(c, d, i) + Rational(w.beta) * u_value(c, d, i + w.b);
    Rational second = Rational(c.p_full() * w.beta) * u_value(c, d, i) +
                      Rational(w.alpha) * u_value(c, d, n + i - w.b);
    return {as_integer(first, "lemma 2.2 first combination"),
            as_integer(second, "lemma 2.2 second combination")};
}

Int theorem_combination(const Composition& c, const Witness& w, long i) {
    return theorem_combination(c, solve_cycle(c), w, i);
}

Int theorem_combination(const Composition& c, const CycleSolution& sol, const Witness& w, long i) {
    long i0 = static_cast<long>(c.reduce(i));
    Rational value = Rational(w.alpha) * sol.x[i0] +
                     Rational(w.beta * c.p_product(i0, i0 + w.b)) * sol.x[c.reduce(i0 + w.b)];
    return as_integer(value, "theorem combination");
}

DecompositionReport decompose_m(const Composition& c, const Witness& w, long i) {
    long n = static_cast<long>(c.size());
    require(i >= 0, errc::bad_argument, "decomposition index must be nonnegative");
    require(i + w.b < n, errc::wraparound_unsupported,
            "i + b >= n: use theorem_combination for the wraparound corollary case");
    Int d = checked_discriminant(c);
    Int pfull = c.p_full();

    DecompositionReport report;
    report.M.reserve(n);
    Rational total(0);
    for (long j = 0; j < n; ++j) {
        Rational mj;
        if (j >= i && j < i + w.b) {
            mj = Rational(c.p_product(i, j)) *
                 (Rational(w.alpha) * u_value(c, d, n + i - 1 - j) +
                  Rational(w.beta * pfull) * u_value(c, d, i + w.b - 1 - j));
        } else if (j < i) {
            mj = Rational(c.p_product(i, n + j)) *
                 (Rational(w.alpha) * u_value(c, d, i - 1 - j) +
                  Rational(w.beta) * u_value(c, d, i + w.b - 1 - j));
        } else {  // i + b <= j < n
            mj = Rational(c.p_product(i, j)) *
                 (Rational(w.alpha) * u_value(c, d, n + i - 1 - j) +
                  Rational(w.beta) * u_value(c, d, n + i + w.b - 1 - j));
        }
        Int m = as_integer(mj, "decomposition term M_j");
        total = total + Rational(c.step(j).k * m);
        report.M.push_back(std::move(m));
    }
    report.combination = as_integer(total, "decomposition sum");
    invariant(report.combination == theorem_combination(c, w, i),
              "sum k_j*M_j disagrees with the theorem combination");
    return report;
}

std::vector<Int> remark_edge(const Composition& c, const Int& alpha, const Int& beta, long b) {
    long n = static_cast<long>(c.size());
    require(alpha != 0 && beta != 0, errc::zero_coefficient,
            "edge-case coefficients must be nonzero");
    require(b == 0 || b == n, errc::bad_b, "remark_edge handles only b = 0 and b = n");
    Int d = checked_discriminant(c);
    Int factor = b == 0 ? Int(alpha + beta) : Int(alpha + c.p_full() * beta);
    require(divides(d, factor), errc::not_certified,
            d.get_str() + " does not divide " + factor.get_str());
    CycleSolution sol = solve_cycle(c);
    std::vector<Int> values;
    values.reserve(n);
    for (long i = 0; i < n; ++i)
        values.push_back(as_integer(Rational(factor) * sol.x[i], "remark edge value"));
    return values;
}

std::vector<Witness> search_witnesses(const Composition& c, const Int& alpha_bound,
                                      const Int& beta_bound) {
    require(alpha_bound >= 1 && beta_bound >= 1, errc::bad_argument, "search bounds must be >= 1");
    checked_discriminant(c);
    long n = static_cast<long>(c.size());
    std::vector<Witness> found;
    for (long b = 1; b < n; ++b)
        for (Int alpha = -alpha_bound; alpha <= alpha_bound; ++alpha) {
            if (alpha == 0) continue;
            for (Int beta = -beta_bound; beta <= beta_bound; ++beta) {
                if (beta == 0) continue;
                if (is_witness(c, alpha, beta, b)) found.push_back(Witness{alpha, beta, b});
            }
        }
    return found;
}

Witness canonical_witness(const Composition& c, const Int& k) {
    require(k != 0, errc::zero_coefficient, "canonical witness scale k must be nonzero");
    require(c.size() > 1, errc::no_valid_b, "no b with 0 < b < 1: canonical witness needs n > 1");
    Int d = checked_discriminant(c);
    // Euler's theorem needs gcd(q, D) = 1; always true since D = -prod p (mod q).
    invariant(gcd(c.q(), d) == 1, "gcd(q, D) != 1");
    Int exponent = euler_totient(abs(d)) - 1;
    Int beta = -k * ipow(c.q(), exponent.get_ui());
    return make_witness(c, k, beta, 1);
}

}  // namespace ratcycle
