#include <doctest.h>

#include <sstream>

#include "ratcycle/padic.hpp"
#include "random_compositions.hpp"

using namespace ratcycle;
using namespace ratcycle::testing;

namespace {

std::vector<Int> digits_of(const PAdicExpansion& e, std::size_t count) {
    std::vector<Int> out;
    for (std::size_t t = 0; t < count; ++t) out.push_back(e.digit(t));
    return out;
}

}  // namespace

TEST_CASE("expand on the table values") {
    PAdicExpansion e = expand(rat_make(53, 7), 11);
    CHECK(e.preperiod == std::vector<Int>{6, 8});
    CHECK(e.period == std::vector<Int>{4, 9, 7});

    PAdicExpansion zero = expand(Rational(0), 11);
    CHECK(zero.preperiod.empty());
    CHECK(zero.period == std::vector<Int>{0});

    PAdicExpansion neg = expand(Rational(-5), 11);
    CHECK(neg.preperiod == std::vector<Int>{6});
    CHECK(neg.period == std::vector<Int>{10});
}

TEST_CASE("expand rejects bad bases") {
    CHECK_THROWS_AS(expand(rat_make(1, 3), 1), Error);
    CHECK_THROWS_AS(expand(rat_make(1, 22), 11), Error);  // gcd(den, p) != 1
    CHECK_THROWS_AS(expand(rat_make(53, 7), 11, 2), Error);  // bound too tight
}

TEST_CASE("reconstruction: partial sums are divisible by p^N") {
    Composition c5 = parse_spec(kSpec5);
    CycleSolution sol = solve_cycle(c5);
    for (const Rational& x : sol.x) {
        PAdicExpansion e = expand(x, 11);
        Rational partial(0);
        Int ppow = 1;
        for (int t = 0; t < 30; ++t) {
            partial = partial + Rational(e.digit(t) * ppow);
            ppow *= 11;
            Rational remainder = x - partial;
            // reduced numerator divisible by 11^(t+1)
            CHECK(divides(ppow, remainder.num()));
        }
    }
}

TEST_CASE("periodicity: re-expanding from the repeated state reproduces the period") {
    Composition c5 = parse_spec(kSpec5);
    CycleSolution sol = solve_cycle(c5);
    for (const Rational& x : sol.x) {
        PAdicExpansion e = expand(x, 11);
        // walk the recurrence up to the preperiod boundary, then re-expand
        Int state = x.num();
        Int inv = mod_inverse(x.den(), 11);
        for (std::size_t t = 0; t < e.preperiod.size(); ++t) {
            Int d = state * inv % 11;
            if (d < 0) d += 11;
            state = (state - d * x.den()) / 11;
        }
        PAdicExpansion tail = expand(Rational(state, x.den()), 11);
        CHECK(tail.preperiod.empty());
        CHECK(tail.period == e.period);
    }
}

TEST_CASE("pattern_check on the application example") {
    Composition c5 = parse_spec(kSpec5);

    PatternReport r1 = pattern_check(c5, 0, 0, 3);
    CHECK(r1.sigma_value == 0);
    CHECK(r1.difference == -53);  // (53 - 424)/7
    CHECK(r1.agreement == TailAgreement::tail_equal);

    PatternReport r2 = pattern_check(c5, 1, 0, 2);
    CHECK(r2.sigma_value == 0);
    CHECK(r2.difference == 53);  // (11*53 - 212)/7

    PatternReport r3 = pattern_check(c5, 3, 0, 0);  // 11^3 x_0 - x_0
    CHECK(r3.sigma_value == 0);
    CHECK(r3.difference == 10070);  // 190*53

    CHECK_THROWS_AS(pattern_check(c5, 1, 0, 1), Error);       // 7 does not divide 11 - 2
    CHECK_THROWS_AS(pattern_check(parse_spec(kSpec4), 0, 0, 1), Error);  // not two-type
}

TEST_CASE("pattern integrality across all i and certified (l, b)") {
    Composition c5 = parse_spec(kSpec5);
    long n = static_cast<long>(c5.size());
    int certified = 0;
    for (long l = 0; l <= 4; ++l)
        for (long b = 0; b <= n; ++b) {
            Int cert = ipow(11, l) - ipow(2, b);
            if (!divides(discriminant(c5), cert)) continue;
            ++certified;
            for (long i = 0; i < n; ++i) (void)pattern_check(c5, l, i, b);  // throws on failure
        }
    CHECK(certified >= 4);  // at least the four relations named in the text
}

TEST_CASE("tail-complement is reported when expansions differ everywhere") {
    // T over q=2: x_0 = 0; scaling relation 2^0... use a 1-step S word with
    // x_0 = -1 and l s.t. p^l = 1: D = -1 divides everything. x_i vs x_i
    // scaled by p gives expansions of -1 and -3.
    Composition s = parse_spec("q=2\np=3\nword=S");
    // l=1, b=1(=n): certificand 3 - 2 = 1, divisible by D = -1.
    PatternReport r = pattern_check(s, 1, 0, 1);
    // 3*(-1) - 3^1*(-1) = 0, but digit streams of 3x_0 and p^sigma x_0 are
    // identical here, so this one is tail-equal.
    CHECK(r.agreement == TailAgreement::tail_equal);

    // Directly exercise the classifier's complement case: 0 vs -1 in base 3.
    PAdicExpansion a = expand(Rational(0), 3);
    PAdicExpansion b = expand(Rational(-1), 3);
    std::size_t t0 = std::max(a.preperiod.size(), b.preperiod.size());
    bool all_equal = true;
    for (std::size_t t = t0; t < t0 + 6; ++t) all_equal = all_equal && a.digit(t) == b.digit(t);
    CHECK_FALSE(all_equal);
}

TEST_CASE("render_table reproduces the published digit rows") {
    Composition c5 = parse_spec(kSpec5);
    std::string table = render_table(c5, 11, 10);

    // Paper rows, most significant digit first, as displayed.
    const char* expected[] = {
        "7 9 4 7 9 4 8 6",       // x_0, 8 digits
        "9 4 7 9 4 7 9 8 7",     // x_6
        "4 7 9 4 7 9 4 9 9",     // x_5
        "7 9 4 7 9 4 7 A 4 8",   // x_4
        "9 4 7 9 4 7 9 5 2 4",   // x_3
        "4 7 9 4 7 9 4 8 1 2",   // x_2
        "7 9 4 7 9 4 7 9 6 1",   // x_1
        "9 4 7 9 4 7 9 4 8 6",   // x_0 again
    };
    std::istringstream lines(table);
    std::string line;
    for (const char* suffix : expected) {
        REQUIRE(std::getline(lines, line));
        // the displayed digits must end with the known reference digits
        std::string digits = line;
        if (auto start = digits.find("\u2026 "); start != std::string::npos)
            digits.erase(0, start + std::string("\u2026 ").size());
        if (auto margin = digits.find("   "); margin != std::string::npos)
            digits.resize(margin);
        while (!digits.empty() && digits.back() == ' ') digits.pop_back();
        std::string tail = digits.size() >= std::string(suffix).size()
                               ? digits.substr(digits.size() - std::string(suffix).size())
                               : digits;
        CHECK(tail == suffix);
    }

    // margin labels name the producing steps
    CHECK(table.find("S_3=B_6") != std::string::npos);
    CHECK(table.find("S_5=B_4") != std::string::npos);
    CHECK(table.find("T_0=B_0") != std::string::npos);
}

TEST_CASE("nonnegative integer rows pad with leading zeros") {
    // q=2, word TS: cycle 1 -> 2 -> 1, both finite expansions
    Composition ts = parse_spec("q=2\np=3\nword=T S");
    std::string table = render_table(ts, 11, 6);
    CHECK(table.find("0 0 0 0 0 1") != std::string::npos);
    CHECK(table.find("0 0 0 0 0 2") != std::string::npos);
}

TEST_CASE("csv digit dump") {
    Composition c5 = parse_spec(kSpec5);
    std::string csv = render_table_csv(c5, 11);
    CHECK(csv.find("i,num,den,preperiod,period") == 0);
    CHECK(csv.find("0,53,7,\"6 8\",\"4 9 7\"") != std::string::npos);
}

TEST_CASE("digit glyphs") {
    CHECK(digit_glyph(7) == "7");
    CHECK(digit_glyph(10) == "A");
    CHECK(digit_glyph(35) == "Z");
    CHECK(digit_glyph(40) == "[40]");
}
