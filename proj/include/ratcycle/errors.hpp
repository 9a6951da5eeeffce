#pragma once

#include <stdexcept>
#include <string>

namespace ratcycle {

// Error categories map onto the CLI exit-code contract:
// parse -> 3, domain -> 2, internal -> 1.
enum class errc {
    // exact
    zero_denominator,
    division_by_zero,
    not_coprime,
    bad_modulus,
    bad_argument,
    // composition
    parse_error,
    validation_error,
    bad_range,
    not_two_type,
    // cycles
    degenerate_cycle,
    // integrality
    bad_b,
    zero_coefficient,
    not_certified,
    no_valid_b,
    wraparound_unsupported,
    // padic
    bad_base,
    base_not_coprime,
    no_period_within_bound,
    // invariant violations (program bugs, not user errors)
    internal_error,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

    bool is_parse() const { return code_ == errc::parse_error; }
    bool is_internal() const { return code_ == errc::internal_error; }

private:
    errc code_;
};

// Parse failures carry the 1-based position of the offending input.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(errc::parse_error,
                "parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

// For conditions the theory guarantees; a trip here is a bug, not bad input.
inline void invariant(bool cond, const std::string& what) {
    if (!cond) fail(errc::internal_error, "invariant violation: " + what);
}

}  // namespace ratcycle
