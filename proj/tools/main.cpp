#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ratcycle/json_io.hpp"
#include "ratcycle/padic.hpp"

namespace rc = ratcycle;

namespace {

// Exit codes: 0 success, 1 internal invariant violation, 2 domain validation,
// 3 parse failure.
constexpr int kExitInternal = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;

struct SpecSource {
    std::string path;
    std::string inline_text;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--spec", path, "spec file path");
        cmd->add_option("--spec-inline", inline_text, "spec text given inline");
    }

    rc::Composition load() const {
        if (!inline_text.empty()) return rc::parse_spec(inline_text);
        rc::require(!path.empty(), rc::errc::validation_error,
                    "one of --spec or --spec-inline is required");
        std::ifstream in(path);
        rc::require(in.good(), rc::errc::validation_error, "cannot open spec file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return rc::parse_spec(buf.str());
    }
};

std::string agreement_name(rc::TailAgreement a) {
    return a == rc::TailAgreement::tail_equal ? "tail-equal" : "tail-complement";
}

void run_solve(const SpecSource& spec, const std::string& format) {
    rc::Composition c = spec.load();
    rc::CycleSolution sol = rc::solve_cycle(c);
    if (format == "json") {
        std::cout << rc::solution_to_json(c, sol).dump(2) << '\n';
        return;
    }
    std::cout << "D = " << sol.D.get_str() << '\n';
    for (std::size_t i = 0; i < sol.U.size(); ++i)
        std::cout << "U_" << i << " = " << sol.U[i].str() << '\n';
    for (std::size_t i = 0; i < sol.x.size(); ++i)
        std::cout << "x_" << i << " = " << sol.x[i].str() << '\n';
    std::cout << "commonDen = " << sol.common_den.get_str() << '\n';
}

void run_witness(const SpecSource& spec, long alpha_bound, long beta_bound, long canonical_k,
                 const std::string& format) {
    rc::Composition c = spec.load();
    std::vector<rc::Witness> witnesses;
    if (canonical_k != 0) {
        witnesses.push_back(rc::canonical_witness(c, canonical_k));
    } else {
        witnesses = rc::search_witnesses(c, alpha_bound, beta_bound);
    }
    if (format == "json") {
        rc::json out = rc::json::array();
        for (const rc::Witness& w : witnesses) out.push_back(rc::witness_to_json(c, w));
        std::cout << out.dump(2) << '\n';
        return;
    }
    if (witnesses.empty()) {
        std::cout << "no witnesses in window\n";
        return;
    }
    for (const rc::Witness& w : witnesses)
        std::cout << '(' << w.alpha.get_str() << ", " << w.beta.get_str() << ", " << w.b << ")\n";
}

void run_check(const SpecSource& spec, long alpha, long beta, long b, bool decompose,
               const std::string& format) {
    rc::Composition c = spec.load();
    long n = static_cast<long>(c.size());

    if (b == 0 || b == n) {
        std::vector<rc::Int> values = rc::remark_edge(c, alpha, beta, b);
        if (format == "json") {
            rc::json rows = rc::json::array();
            for (long i = 0; i < n; ++i)
                rows.push_back({{"i", i}, {"combination", values[i].get_str()}});
            std::cout << rows.dump(2) << '\n';
            return;
        }
        for (long i = 0; i < n; ++i)
            std::cout << "i = " << i << ": combination = " << values[i].get_str() << '\n';
        return;
    }

    rc::Witness w = rc::make_witness(c, alpha, beta, b);
    if (format == "json") {
        rc::json rows = rc::json::array();
        for (long i = 0; i < n; ++i)
            rows.push_back({{"i", i}, {"combination", rc::theorem_combination(c, w, i).get_str()}});
        std::cout << rows.dump(2) << '\n';
        return;
    }
    for (long i = 0; i < n; ++i) {
        std::cout << "i = " << i
                  << ": combination = " << rc::theorem_combination(c, w, i).get_str();
        if (decompose && i + b < n) {
            rc::DecompositionReport report = rc::decompose_m(c, w, i);
            std::cout << "  M = [";
            for (std::size_t j = 0; j < report.M.size(); ++j)
                std::cout << (j ? ", " : "") << report.M[j].get_str();
            std::cout << ']';
        }
        std::cout << '\n';
    }
}

void run_padic(const SpecSource& spec, long base, long digits, const std::string& pattern,
               const std::string& format) {
    rc::Composition c = spec.load();
    if (!pattern.empty()) {
        long l, i, b;
        char c1, c2;
        std::istringstream in(pattern);
        if (!(in >> l >> c1 >> i >> c2 >> b) || c1 != ',' || c2 != ',')
            throw rc::Error(rc::errc::validation_error, "--pattern expects 'l,i,b'");
        rc::PatternReport report = rc::pattern_check(c, l, i, b);
        if (format == "json") {
            std::cout << rc::json{{"l", report.l},
                                  {"i", report.i},
                                  {"b", report.b},
                                  {"sigma", report.sigma_value.get_str()},
                                  {"difference", report.difference.get_str()},
                                  {"agreement", agreement_name(report.agreement)}}
                             .dump(2)
                      << '\n';
            return;
        }
        std::cout << "sigma = " << report.sigma_value.get_str()
                  << ", difference = " << report.difference.get_str() << ", "
                  << agreement_name(report.agreement) << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << rc::render_table_csv(c, base);
        return;
    }
    std::cout << rc::render_table(c, base, digits);
}

void run_enumerate(long q, long p, long kS, long kT, long max_len, bool integers_only,
                   bool dedup_rotations, const std::string& format) {
    std::vector<rc::CycleRecord> records =
        integers_only ? rc::find_integer_cycles(q, p, kS, kT, max_len, dedup_rotations)
                      : rc::enumerate_words(q, p, kS, kT, max_len);
    if (format == "json") {
        rc::json out = rc::json::array();
        for (const rc::CycleRecord& rec : records) out.push_back(rc::record_to_json(rec));
        std::cout << out.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        std::cout << rc::record_csv_header() << '\n';
        for (const rc::CycleRecord& rec : records) std::cout << rc::record_to_csv(rec) << '\n';
        return;
    }
    for (const rc::CycleRecord& rec : records) {
        std::cout << rec.word << "  n=" << rec.n << " m=" << rec.m << " D=" << rec.D.get_str()
                  << " x0=" << rec.x0.str() << (rec.is_integer ? " integer" : "") << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational cycles of generalized Collatz compositions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text|json|csv")->capture_default_str();

    SpecSource spec;
    auto* solve = app.add_subcommand("solve", "compute D, U_i and all cycle terms x_i");
    solve->fallthrough();
    spec.add_options(solve);

    auto* witness = app.add_subcommand("witness", "search or construct divisibility witnesses");
    witness->fallthrough();
    spec.add_options(witness);
    long alpha_bound = 5, beta_bound = 5, canonical_k = 0;
    witness->add_option("--alpha-bound", alpha_bound, "search window for |alpha|")
        ->capture_default_str();
    witness->add_option("--beta-bound", beta_bound, "search window for |beta|")
        ->capture_default_str();
    witness->add_option("--canonical", canonical_k, "emit the totient-based witness scaled by k");

    auto* check = app.add_subcommand("check", "evaluate the integer linear combinations");
    check->fallthrough();
    spec.add_options(check);
    long alpha = 0, beta = 0, b = 0;
    bool decompose = false;
    check->add_option("--alpha", alpha, "coefficient of x_i")->required();
    check->add_option("--beta", beta, "coefficient of the shifted term")->required();
    check->add_option("--b", b, "index shift")->required();
    check->add_flag("--decompose", decompose, "also print the M_j lists (non-wraparound i)");

    auto* padic = app.add_subcommand("padic", "digit tables and pattern reports");
    padic->fallthrough();
    spec.add_options(padic);
    long base = 11, digits = 10;
    std::string pattern;
    padic->add_option("--base", base, "digit base p")->capture_default_str();
    padic->add_option("--digits", digits, "digits per table row")->capture_default_str();
    padic->add_option("--pattern", pattern, "check p^l*x_i - p^sigma*x_{i+b} for 'l,i,b'");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate S/T words and their cycles");
    enumerate->fallthrough();
    long q = 2, p = 3, kS = 1, kT = 0, max_len = 11;
    bool integers_only = false, dedup_rotations = false;
    enumerate->add_option("--q", q, "common denominator q")->capture_default_str();
    enumerate->add_option("--p", p, "S-step multiplier p")->capture_default_str();
    enumerate->add_option("--kS", kS, "S-step shift")->capture_default_str();
    enumerate->add_option("--kT", kT, "T-step shift")->capture_default_str();
    enumerate->add_option("--max-len", max_len, "maximum word length")->capture_default_str();
    enumerate->add_flag("--integers-only", integers_only, "only integer-x0 records");
    enumerate->add_flag("--dedup-rotations", dedup_rotations, "one record per rotation class");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) run_solve(spec, format);
        if (witness->parsed()) run_witness(spec, alpha_bound, beta_bound, canonical_k, format);
        if (check->parsed()) run_check(spec, alpha, beta, b, decompose, format);
        if (padic->parsed()) run_padic(spec, base, digits, pattern, format);
        if (enumerate->parsed())
            run_enumerate(q, p, kS, kT, max_len, integers_only, dedup_rotations, format);
    } catch (const rc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.is_parse()) return kExitParse;
        return e.is_internal() ? kExitInternal : kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
