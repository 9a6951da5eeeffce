#include "ratcycle/composition.hpp"

#include <cctype>
#include <sstream>

namespace ratcycle {

Composition::Composition(Int q, std::vector<AffineStep> steps, std::optional<Int> declared_p)
    : q_(std::move(q)), steps_(std::move(steps)), declared_p_(std::move(declared_p)) {
    require(q_ != 0, errc::validation_error, "q must be nonzero");
    require(!steps_.empty(), errc::validation_error, "composition needs at least one step");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        require(steps_[i].p != 0, errc::validation_error,
                "p_" + std::to_string(i) + " must be nonzero");
        require(gcd(steps_[i].p, q_) == 1, errc::validation_error,
                "gcd(p_" + std::to_string(i) + ", q) = gcd(" + steps_[i].p.get_str() + ", " +
                    q_.get_str() + ") != 1");
    }
}

Rational Composition::apply_step(long i, const Rational& x) const {
    const AffineStep& s = steps_[reduce(i)];
    return (Rational(s.p) * x + Rational(s.k)) / Rational(q_);
}

Int Composition::p_product(long i, long j) const {
    require(j >= i && j - i <= static_cast<long>(size()), errc::bad_range,
            "p_product range [" + std::to_string(i) + ", " + std::to_string(j) +
                ") must have length 0.." + std::to_string(size()));
    Int prod = 1;
    for (long t = i; t < j; ++t) prod *= steps_[reduce(t)].p;
    return prod;
}

bool Composition::is_two_type() const {
    Int p = declared_p_.value_or(Int(1));
    for (const AffineStep& s : steps_) {
        if (s.p == 1) continue;
        if (p == 1) p = s.p;
        if (s.p != p) return false;
    }
    return true;
}

Int Composition::two_type_p() const {
    require(is_two_type(), errc::not_two_type,
            "composition is not of the two-type S/T form (mixed multipliers)");
    if (declared_p_) return *declared_p_;
    for (const AffineStep& s : steps_)
        if (s.p != 1) return s.p;
    return 1;
}

Int Composition::sigma(long i, long j) const {
    require(j >= i && j - i <= static_cast<long>(size()), errc::bad_range,
            "sigma range [" + std::to_string(i) + ", " + std::to_string(j) +
                ") must have length 0.." + std::to_string(size()));
    two_type_p();  // rejects mixed-multiplier compositions
    Int count = 0;
    for (long t = i; t < j; ++t)
        if (steps_[reduce(t)].p != 1) ++count;
    return count;
}

Composition Composition::rotate(long i) const {
    std::size_t start = reduce(i);
    std::vector<AffineStep> rotated;
    rotated.reserve(steps_.size());
    for (std::size_t t = 0; t < steps_.size(); ++t)
        rotated.push_back(steps_[(start + t) % steps_.size()]);
    return Composition(q_, std::move(rotated), declared_p_);
}

Composition Composition::power(long k) const {
    require(k >= 1, errc::bad_argument, "power exponent must be >= 1, got " + std::to_string(k));
    std::vector<AffineStep> repeated;
    repeated.reserve(steps_.size() * static_cast<std::size_t>(k));
    for (long r = 0; r < k; ++r) repeated.insert(repeated.end(), steps_.begin(), steps_.end());
    return Composition(q_, std::move(repeated), declared_p_);
}

std::string Composition::render() const {
    std::ostringstream out;
    out << "q=" << q_.get_str() << "\nsteps=";
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out << ' ';
        out << '(' << steps_[i].p.get_str() << ',' << steps_[i].k.get_str() << ')';
    }
    out << '\n';
    return out.str();
}

namespace {

// Cursor over one logical line, tracking 1-based column for diagnostics.
struct LineCursor {
    const std::string& text;
    int line;
    std::size_t pos = 0;
    int col_offset = 0;  // column of text[0] within the raw line, 0-based

    int column() const { return col_offset + static_cast<int>(pos) + 1; }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    void skip_spaces() {
        while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, column(), what); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    Int signed_int() {
        std::size_t start = pos;
        if (peek() == '-' || peek() == '+') ++pos;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return Int(text.substr(start, pos - start));
    }
};

struct Assignment {
    std::string key;
    std::string value;  // raw text after '='
    int line;
    int value_column;  // 1-based column where value starts
};

std::vector<Assignment> split_assignments(const std::string& text) {
    std::vector<Assignment> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::size_t i = 0;
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i == raw.size()) continue;
        std::size_t eq = raw.find('=', i);
        if (eq == std::string::npos)
            throw ParseError(lineno, static_cast<int>(i) + 1, "expected 'key=value' assignment");
        std::size_t key_end = eq;
        while (key_end > i && std::isspace(static_cast<unsigned char>(raw[key_end - 1]))) --key_end;
        out.push_back({raw.substr(i, key_end - i), raw.substr(eq + 1), lineno,
                       static_cast<int>(eq) + 2});
    }
    return out;
}

std::vector<AffineStep> parse_steps(const Assignment& a) {
    LineCursor cur{a.value, a.line, 0, a.value_column - 1};
    std::vector<AffineStep> steps;
    cur.skip_spaces();
    while (!cur.done()) {
        cur.expect('(');
        Int p = cur.signed_int();
        cur.skip_spaces();
        cur.expect(',');
        cur.skip_spaces();
        Int k = cur.signed_int();
        cur.expect(')');
        steps.push_back({std::move(p), std::move(k)});
        cur.skip_spaces();
    }
    if (steps.empty()) cur.fail("expected at least one (p,k) pair");
    return steps;
}

std::vector<AffineStep> parse_word(const Assignment& a, const Int& p) {
    LineCursor cur{a.value, a.line, 0, a.value_column - 1};
    std::vector<AffineStep> steps;
    cur.skip_spaces();
    while (!cur.done()) {
        char letter = cur.peek();
        if (letter != 'S' && letter != 'T') cur.fail("expected token 'S' or 'T'");
        ++cur.pos;
        // Bare T is (1,0), bare S is (p,1); a subscript overrides the shift.
        bool has_sub = cur.peek() == '-' || cur.peek() == '+' ||
                       std::isdigit(static_cast<unsigned char>(cur.peek()));
        Int k = has_sub ? cur.signed_int() : (letter == 'S' ? Int(1) : Int(0));
        steps.push_back({letter == 'S' ? p : Int(1), std::move(k)});
        cur.skip_spaces();
    }
    if (steps.empty()) cur.fail("expected at least one word token");
    return steps;
}

}  // namespace

Composition parse_spec(const std::string& text) {
    std::vector<Assignment> lines = split_assignments(text);
    if (lines.empty()) throw ParseError(1, 1, "empty spec: expected 'q=...'");

    std::size_t at = 0;
    auto next = [&](const std::string& wanted) -> const Assignment& {
        if (at >= lines.size())
            throw ParseError(lines.back().line + 1, 1, "expected '" + wanted + "=...'");
        const Assignment& a = lines[at++];
        if (a.key != wanted)
            throw ParseError(a.line, 1, "expected '" + wanted + "=...', got '" + a.key + "'");
        return a;
    };
    auto parse_int = [](const Assignment& a) {
        LineCursor cur{a.value, a.line, 0, a.value_column - 1};
        cur.skip_spaces();
        Int v = cur.signed_int();
        cur.skip_spaces();
        if (!cur.done()) cur.fail("trailing characters after integer");
        return v;
    };

    Int q = parse_int(next("q"));
    if (at >= lines.size()) throw ParseError(lines.back().line + 1, 1, "expected 'steps' or 'p'");
    if (lines[at].key == "steps") {
        std::vector<AffineStep> steps = parse_steps(lines[at++]);
        if (at != lines.size()) throw ParseError(lines[at].line, 1, "unexpected extra line");
        return Composition(std::move(q), std::move(steps));
    }
    Int p = parse_int(next("p"));
    std::vector<AffineStep> steps = parse_word(next("word"), p);
    if (at != lines.size()) throw ParseError(lines[at].line, 1, "unexpected extra line");
    return Composition(std::move(q), std::move(steps), std::move(p));
}

}  // namespace ratcycle
