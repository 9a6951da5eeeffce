#include "ratcycle/rational.hpp"

namespace ratcycle {

Int mod_inverse(const Int& a, const Int& m) {
    require(m >= 2, errc::bad_modulus, "modulus must be >= 2, got " + m.get_str());
    // Extended Euclid on (a mod m, m): old_r tracks gcd, old_s the Bezout
    // coefficient of a.
    Int old_r = a % m;
    if (old_r < 0) old_r += m;
    Int r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int qt = old_r / r;
        Int tmp = old_r - qt * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qt * s;
        old_s = s;
        s = tmp;
    }
    require(old_r == 1, errc::not_coprime,
            "no inverse: gcd(" + a.get_str() + ", " + m.get_str() + ") = " + old_r.get_str());
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

Int euler_totient(const Int& n) {
    require(n >= 1, errc::bad_argument, "totient argument must be >= 1, got " + n.get_str());
    Int rest = n;
    Int phi = 1;
    for (Int d = 2; d * d <= rest; ++d) {
        if (rest % d != 0) continue;
        Int pk = 1;
        while (rest % d == 0) {
            rest /= d;
            pk *= d;
        }
        phi *= pk - pk / d;
    }
    if (rest > 1) phi *= rest - 1;
    return phi;
}

}  // namespace ratcycle
