#include "ratcycle/cycles.hpp"

namespace ratcycle {

Int discriminant(const Composition& c) {
    return ipow(c.q(), static_cast<unsigned long>(c.size())) - c.p_full();
}

CycleSolution solve_cycle(const Composition& c) {
    const long n = static_cast<long>(c.size());
    CycleSolution sol;
    sol.D = discriminant(c);
    require(sol.D != 0, errc::degenerate_cycle,
            "degenerate cycle: q^n = p_0...p_{n-1}, no unique fixed point");

    sol.U.reserve(n + 1);
    for (long i = 0; i <= n; ++i)
        sol.U.emplace_back(ipow(c.q(), static_cast<unsigned long>(i)), sol.D);

    // x_i = sum_t (prod_{s=0}^{n-2-t} p_{i+s}) * k_{i-1-t} * U_t; the term
    // t = n-1 has the empty product and coefficient k_i.
    sol.x.reserve(n);
    for (long i = 0; i < n; ++i) {
        Rational xi(0);
        for (long t = 0; t < n; ++t) {
            Int coeff = c.p_product(i, i + n - 1 - t) * c.step(i - 1 - t).k;
            xi = xi + Rational(coeff) * sol.U[t];
        }
        sol.x.push_back(xi);
    }

    sol.common_den = sol.x[0].den();
    for (long i = 0; i < n; ++i) {
        invariant(sol.x[i].den() == sol.common_den, "cycle terms are not like fractions");
        invariant(c.apply_step(i, sol.x[(i + 1) % n]) == sol.x[i],
                  "closed-form cycle term fails x_i = B_i(x_{i+1}) at i=" + std::to_string(i));
    }
    invariant(divides(sol.common_den, sol.D), "common denominator does not divide D");
    return sol;
}

Rational affine_fold_fixed_point(const Composition& c) {
    const long n = static_cast<long>(c.size());
    // Accumulate P(x) = (A*x + C)/q^n, applying B_{n-1} first. A and C stay
    // un-reduced integers; the single reduction happens in the Rational ctor.
    Int a = 1, cshift = 0;
    Int qpow = 1;  // q^(number of folded steps)
    for (long i = n - 1; i >= 0; --i) {
        const AffineStep& s = c.step(i);
        cshift = s.p * cshift + s.k * qpow;
        a = s.p * a;
        qpow *= c.q();
    }
    require(a != qpow, errc::degenerate_cycle,
            "degenerate cycle: composed multiplier equals q^n, no unique fixed point");
    // A*x + C = q^n * x  =>  x = C / (q^n - A)
    return Rational(cshift, qpow - a);
}

bool verify_closure(const Composition& c, const CycleSolution& sol) {
    const long n = static_cast<long>(c.size());
    if (static_cast<long>(sol.x.size()) != n) return false;
    for (long i = 0; i < n; ++i) {
        if (c.apply_step(i, sol.x[(i + 1) % n]) != sol.x[i]) return false;
        if (affine_fold_fixed_point(c.rotate(i)) != sol.x[i]) return false;
    }
    return true;
}

}  // namespace ratcycle
