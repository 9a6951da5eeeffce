#include "ratcycle/padic.hpp"

#include <map>
#include <sstream>

namespace ratcycle {

namespace {

Int nonneg_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

std::string digit_glyph(const Int& d) {
    if (d < 10) return d.get_str();
    if (d < 36) return std::string(1, static_cast<char>('A' + d.get_si() - 10));
    return "[" + d.get_str() + "]";
}

PAdicExpansion expand(const Rational& x, const Int& p, long max_digits) {
    require(p >= 2, errc::bad_base, "digit base must be >= 2, got " + p.get_str());
    require(gcd(x.den(), p) == 1, errc::base_not_coprime,
            "denominator " + x.den().get_str() + " shares a factor with base " + p.get_str());

    const Int& den = x.den();
    Int inv = mod_inverse(den, p);

    PAdicExpansion out;
    out.base = p;
    std::vector<Int> digits;
    std::map<Int, std::size_t> seen;
    Int state = x.num();
    for (long t = 0; t < max_digits; ++t) {
        auto [it, fresh] = seen.emplace(state, digits.size());
        if (!fresh) {
            std::size_t start = it->second;
            out.preperiod.assign(digits.begin(), digits.begin() + start);
            out.period.assign(digits.begin() + start, digits.end());
            return out;
        }
        Int d = nonneg_mod(state * inv, p);
        state = (state - d * den) / p;
        digits.push_back(std::move(d));
    }
    fail(errc::no_period_within_bound,
         "no repeated state within " + std::to_string(max_digits) + " digits");
}

PatternReport pattern_check(const Composition& c, long l, long i, long b) {
    require(l >= 0, errc::bad_argument, "exponent l must be nonnegative");
    long n = static_cast<long>(c.size());
    require(b >= 0 && b <= n, errc::bad_b, "pattern shift b must satisfy 0 <= b <= n");
    Int p = c.two_type_p();

    Int d = discriminant(c);
    require(d != 0, errc::degenerate_cycle, "pattern check needs D != 0");
    Int certificand = ipow(p, static_cast<unsigned long>(l)) -
                      ipow(c.q(), static_cast<unsigned long>(b));
    require(divides(d, certificand), errc::not_certified,
            d.get_str() + " does not divide p^l - q^b = " + certificand.get_str());

    long i0 = static_cast<long>(c.reduce(i));
    CycleSolution sol = solve_cycle(c);
    Int sigma = c.sigma(i0, i0 + b);

    const Rational& xi = sol.x[i0];
    const Rational& xib = sol.x[c.reduce(i0 + b)];
    Rational scaled_i = Rational(ipow(p, static_cast<unsigned long>(l))) * xi;
    Rational scaled_ib = Rational(ipow(p, sigma.get_ui())) * xib;
    Rational diff = scaled_i - scaled_ib;
    invariant(diff.is_integer(), "pattern difference is not an integer: " + diff.str());

    PatternReport report{l, i, b, sigma, diff.num(), TailAgreement::tail_equal};

    // The two streams are periodic past their preperiods; if the tails ever
    // coincide they coincide over one full joint period there.
    PAdicExpansion e1 = expand(scaled_i, p);
    PAdicExpansion e2 = expand(scaled_ib, p);
    std::size_t t0 = std::max(e1.preperiod.size(), e2.preperiod.size());
    Int joint = lcm(Int(e1.period.size()), Int(e2.period.size()));
    for (std::size_t t = t0; t < t0 + joint.get_ui(); ++t) {
        if (e1.digit(t) != e2.digit(t)) {
            report.agreement = TailAgreement::tail_complement;
            break;
        }
    }
    return report;
}

std::string render_table(const Composition& c, const Int& p, long digit_count) {
    require(digit_count >= 1, errc::bad_argument, "digit count must be >= 1");
    long n = static_cast<long>(c.size());
    CycleSolution sol = solve_cycle(c);

    // Paper row order: x_0, then x_{n-1} down to x_1, then x_0 again.
    std::vector<long> rows;
    rows.push_back(0);
    for (long j = n - 1; j >= 1; --j) rows.push_back(j);
    rows.push_back(0);

    std::vector<std::string> labels;
    std::size_t label_width = 0;
    for (long j : rows) {
        labels.push_back("x_" + std::to_string(j) + "=" + sol.x[j].str());
        label_width = std::max(label_width, labels.back().size());
    }

    std::ostringstream out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        long j = rows[r];
        PAdicExpansion e = expand(sol.x[j], p);
        out << labels[r] << std::string(label_width - labels[r].size(), ' ') << "  = …";
        for (long t = digit_count - 1; t >= 0; --t)
            out << ' ' << digit_glyph(e.digit(static_cast<std::size_t>(t)));
        if (r + 1 < rows.size()) {
            // The step sending this row to the next: x_{j-1} = B_{j-1}(x_j).
            long idx = static_cast<long>(c.reduce(j - 1));
            const AffineStep& s = c.step(idx);
            out << "   " << (s.p == 1 ? "T" : "S") << "_" << s.k.get_str() << "=B_" << idx;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_table_csv(const Composition& c, const Int& p) {
    CycleSolution sol = solve_cycle(c);
    std::ostringstream out;
    out << "i,num,den,preperiod,period\n";
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        PAdicExpansion e = expand(sol.x[i], p);
        out << i << ',' << sol.x[i].num().get_str() << ',' << sol.x[i].den().get_str() << ',';
        out << '"';
        for (std::size_t t = 0; t < e.preperiod.size(); ++t)
            out << (t ? " " : "") << e.preperiod[t].get_str();
        out << "\",\"";
        for (std::size_t t = 0; t < e.period.size(); ++t)
            out << (t ? " " : "") << e.period[t].get_str();
        out << "\"\n";
    }
    return out.str();
}

}  // namespace ratcycle
