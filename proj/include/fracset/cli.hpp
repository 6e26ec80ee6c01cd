#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracset/constructions.hpp"
#include "fracset/divisors.hpp"
#include "fracset/exponents.hpp"
#include "fracset/fracstat.hpp"
#include "fracset/gaps.hpp"
#include "fracset/generators.hpp"
#include "fracset/numeric.hpp"
#include "fracset/setcore.hpp"

namespace fracset::cli {

using nlohmann::json;

// Exact integers: JSON numbers while they fit 2^53, decimal strings beyond.
inline json json_big(const BigInt& v) {
    static const BigInt lim = BigInt(1) << 53;
    if (v > -lim && v < lim) return v.convert_to<std::int64_t>();
    return v.str();
}

inline json json_count(std::uint64_t v) {
    if (v < (std::uint64_t{1} << 53)) return v;
    return std::to_string(v);
}

// Reals carry 15 significant digits.
inline double round_sig15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

inline std::string json_rat(const BigRat& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace detail {

inline void csv_escape(const json& v, std::ostream& out) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") != std::string::npos) {
            out << '"';
            for (char c : s) {
                if (c == '"') out << '"';
                out << c;
            }
            out << '"';
        } else {
            out << s;
        }
    } else {
        out << v.dump();
    }
}

// Plot-ready CSV: arrays of objects become tables, everything else becomes
// key,value lines (arrays of scalars one element per line).
inline void emit_csv(const json& report, std::ostream& out) {
    for (auto& [key, value] : report.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::vector<std::string> cols;
            for (auto& [col, cell] : value.front().items()) cols.push_back(col);
            for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
            out << '\n';
            for (const auto& row : value) {
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    if (i) out << ',';
                    if (row.contains(cols[i])) csv_escape(row.at(cols[i]), out);
                }
                out << '\n';
            }
        } else if (value.is_array()) {
            for (const auto& item : value) {
                out << key << ',';
                csv_escape(item, out);
                out << '\n';
            }
        } else if (value.is_object()) {
            for (auto& [sub, cell] : value.items()) {
                out << key << '.' << sub << ',';
                csv_escape(cell, out);
                out << '\n';
            }
        } else {
            out << key << ',';
            csv_escape(value, out);
            out << '\n';
        }
    }
}

struct CommonOpts {
    std::string format = "json";
    std::string ledger_path;
};

inline void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--ledger", opts.ledger_path, "Append an experiment record to this JSON Lines file");
}

inline void finish(const CommonOpts& opts, const std::string& command, const json& params, const json& outputs,
                   std::ostream& out) {
    if (opts.format == "csv")
        emit_csv(outputs, out);
    else
        out << outputs.dump(2) << '\n';
    if (!opts.ledger_path.empty()) {
        json record;
        record["command"] = command;
        record["params"] = params;
        record["outputs"] = outputs;
        record["timestamp"] = utc_timestamp();
        if (params.contains("seed")) record["seed"] = params["seed"];
        std::ofstream ledger(opts.ledger_path, std::ios::app);
        if (!ledger) throw std::invalid_argument("cannot open ledger file " + opts.ledger_path);
        ledger << record.dump() << '\n';
    }
}

inline json gcd_table_json(const GcdClassTable& table) {
    json sizes = json::object();
    for (auto [d, n] : table.sizes) sizes[std::to_string(d)] = json_count(n);
    return json{{"sizes", sizes},
                {"total", json_count(table.total_pairs)},
                {"sup_d", json_count(table.sup_d)},
                {"sup_size", json_count(table.sup_size)}};
}

inline json certificate_json(const GapCertificate& cert) {
    return json{{"a", json_count(cert.a)},
                {"b", json_count(cert.b)},
                {"a_prime", json_count(cert.a_prime)},
                {"b_prime", json_count(cert.b_prime)},
                {"term1", json_count(cert.term1)},
                {"term2", json_count(cert.term2)},
                {"gap", json_count(cert.gap)},
                {"fraction_distance", json_rat(cert.fraction_distance)}};
}

// sup_size * 8 * X * Y >= (|A| * |B|)^2, checked in integers.
inline bool prop21_holds_exact(std::uint64_t sup_size, std::uint64_t size_a, std::uint64_t size_b,
                               std::uint64_t x, std::uint64_t y) {
    unsigned __int128 lhs = static_cast<unsigned __int128>(sup_size) * 8 * x * y;
    unsigned __int128 ab = static_cast<unsigned __int128>(size_a) * size_b;
    return lhs >= ab * ab;
}

inline std::vector<PrimeFamily> adversarial_families() {
    return {
        PrimeFamily({2, 3}, 1),
        PrimeFamily({11, 13}, 1, 11),
        PrimeFamily({2, 3, 5, 7}, 2),
        PrimeFamily({3, 5, 7, 11}, 2),
        PrimeFamily({2, 3, 5, 7, 11, 13}, 3),
    };
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"fracset: exact computations on ratio sets of large integer sets"};
    app.require_subcommand(1);

    // ---- primes ----------------------------------------------------------
    struct {
        std::uint64_t lo = 1, hi = 1;
        detail::CommonOpts common;
    } primes_opts;
    auto* primes_cmd = app.add_subcommand("primes", "List primes in [lo, hi]");
    primes_cmd->add_option("--lo", primes_opts.lo, "Lower end")->required();
    primes_cmd->add_option("--hi", primes_opts.hi, "Upper end")->required();
    detail::add_common(primes_cmd, primes_opts.common);

    // ---- fracstat --------------------------------------------------------
    struct {
        std::string a_path, b_path;
        detail::CommonOpts common;
    } fracstat_opts;
    auto* fracstat_cmd = app.add_subcommand("fracstat", "Ratio count and gcd classes of two set files");
    fracstat_cmd->add_option("--a", fracstat_opts.a_path, "Set file for A")->required();
    fracstat_cmd->add_option("--b", fracstat_opts.b_path, "Set file for B")->required();
    detail::add_common(fracstat_cmd, fracstat_opts.common);

    // ---- bound-check -----------------------------------------------------
    struct {
        unsigned pairs = 200;
        std::uint64_t xmax = 2000, ymax = 2000, seed = 1;
        detail::CommonOpts common;
    } bound_opts;
    auto* bound_cmd = app.add_subcommand("bound-check", "Sweep random and adversarial pairs against the "
                                                        "(alpha beta)^2 XY / 8 bound");
    bound_cmd->add_option("--pairs", bound_opts.pairs, "Number of random pairs");
    bound_cmd->add_option("--xmax", bound_opts.xmax, "Largest ambient X");
    bound_cmd->add_option("--ymax", bound_opts.ymax, "Largest ambient Y");
    bound_cmd->add_option("--seed", bound_opts.seed, "Sweep seed");
    detail::add_common(bound_cmd, bound_opts.common);

    // ---- divisor-moment --------------------------------------------------
    struct {
        std::uint64_t x = 1, d = 1;
        unsigned q = 0;
        double tol = 1e-12;
        detail::CommonOpts common;
    } moment_opts;
    auto* moment_cmd = app.add_subcommand("divisor-moment", "Restricted divisor moment sum and S(q)");
    moment_cmd->add_option("--x", moment_opts.x, "Range bound X")->required();
    moment_cmd->add_option("--q", moment_opts.q, "Moment order")->required();
    moment_cmd->add_option("--d", moment_opts.d, "Smoothness bound D")->required();
    moment_cmd->add_option("--tol", moment_opts.tol, "S(q) truncation tolerance");
    detail::add_common(moment_cmd, moment_opts.common);

    // ---- exponent --------------------------------------------------------
    struct {
        unsigned q = 4;
        double tol = 1e-12;
        detail::CommonOpts common;
    } exponent_opts;
    auto* exponent_cmd = app.add_subcommand("exponent", "Admissible-exponent recursion trace and limit");
    exponent_cmd->add_option("--q", exponent_opts.q, "Recursion parameter (>= 4)")->required();
    exponent_cmd->add_option("--tol", exponent_opts.tol, "Successive-difference stop tolerance");
    detail::add_common(exponent_cmd, exponent_opts.common);

    // ---- constants -------------------------------------------------------
    struct {
        double c = 0.125, delta = 2.0, cq = 24.0, alpha = 1.0, beta = 1.0;
        unsigned q = 4;
        detail::CommonOpts common;
    } constants_opts;
    auto* constants_cmd = app.add_subcommand("constants", "Solve the associated constant and check the "
                                                          "balancing identity");
    constants_cmd->add_option("--c", constants_opts.c, "Constant C associated to delta")->required();
    constants_cmd->add_option("--delta", constants_opts.delta, "Admissible exponent delta (> 1)")->required();
    constants_cmd->add_option("--q", constants_opts.q, "Moment order q (>= 1)")->required();
    constants_cmd->add_option("--cq", constants_opts.cq, "Moment constant c_q")->required();
    constants_cmd->add_option("--alpha", constants_opts.alpha, "Density alpha in (0, 1]");
    constants_cmd->add_option("--beta", constants_opts.beta, "Density beta in (0, 1]");
    detail::add_common(constants_cmd, constants_opts.common);

    // ---- construct-t12 ---------------------------------------------------
    struct {
        std::vector<std::uint64_t> primes;
        unsigned m = 1;
        std::uint64_t x = 1;
        std::uint64_t window_t = 0;
        detail::CommonOpts common;
    } t12_opts;
    auto* t12_cmd = app.add_subcommand("construct-t12", "Build the prime-product multiples set");
    t12_cmd->add_option("--primes", t12_opts.primes, "The 2m primes (comma separated)")
        ->required()
        ->delimiter(',');
    t12_cmd->add_option("--m", t12_opts.m, "Half the family size")->required();
    t12_cmd->add_option("--x", t12_opts.x, "Ambient bound X")->required();
    t12_cmd->add_option("--window-t", t12_opts.window_t, "Verify primes lie in [T, T + T/m]");
    detail::add_common(t12_cmd, t12_opts.common);

    // ---- construct-t13 ---------------------------------------------------
    struct {
        double gamma = 0.5;
        std::uint64_t x = 1, y = 1, seed = 0;
        std::string selector = "lexicographic";
        detail::CommonOpts common;
    } t13_opts;
    auto* t13_cmd = app.add_subcommand("construct-t13", "Build the dilated-primitive-point set");
    t13_cmd->add_option("--gamma", t13_opts.gamma, "Density parameter in (0, 1]")->required();
    t13_cmd->add_option("--x", t13_opts.x, "Ambient bound X")->required();
    t13_cmd->add_option("--y", t13_opts.y, "Ambient bound Y")->required();
    t13_cmd->add_option("--selector", t13_opts.selector, "Primitive point order")
        ->check(CLI::IsMember({"lexicographic", "shuffle"}));
    t13_cmd->add_option("--seed", t13_opts.seed, "Shuffle seed");
    detail::add_common(t13_cmd, t13_opts.common);

    // ---- gap-find --------------------------------------------------------
    struct {
        std::string a_path, b_path;
        double alpha = 0.0, beta = 0.0;
        std::uint64_t x = 0, y = 0, seed = 1;
        std::vector<std::uint64_t> multiples;
        detail::CommonOpts common;
    } gap_opts;
    auto* gap_cmd = app.add_subcommand("gap-find", "Small-gap certificate for a product sequence");
    gap_cmd->add_option("--a", gap_opts.a_path, "Set file for A (windowed in (X/2, X])");
    gap_cmd->add_option("--b", gap_opts.b_path, "Set file for B (windowed in (Y/2, Y])");
    gap_cmd->add_option("--alpha", gap_opts.alpha, "Window density for a generated A");
    gap_cmd->add_option("--beta", gap_opts.beta, "Window density for a generated B");
    gap_cmd->add_option("--x", gap_opts.x, "Ambient bound X for generated sets");
    gap_cmd->add_option("--y", gap_opts.y, "Ambient bound Y for generated sets");
    gap_cmd->add_option("--multiples", gap_opts.multiples, "Use windowed multiples of h,k")->delimiter(',');
    gap_cmd->add_option("--seed", gap_opts.seed, "Generator seed");
    detail::add_common(gap_cmd, gap_opts.common);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << std::flush;
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (primes_cmd->parsed()) {
            auto ps = primes_in_interval(primes_opts.lo, primes_opts.hi);
            json outputs;
            outputs["lo"] = json_count(primes_opts.lo);
            outputs["hi"] = json_count(primes_opts.hi);
            outputs["count"] = json_count(ps.size());
            json arr = json::array();
            for (std::uint64_t p : ps) arr.push_back(json_count(p));
            outputs["primes"] = arr;
            json params{{"lo", primes_opts.lo}, {"hi", primes_opts.hi}};
            detail::finish(primes_opts.common, "primes", params, outputs, out);
        } else if (fracstat_cmd->parsed()) {
            IntegerSet a = read_set_file(fracstat_opts.a_path);
            IntegerSet b = read_set_file(fracstat_opts.b_path);
            GcdClassTable table = gcd_class_sizes(a, b);
            double alpha = a.density();
            double beta = b.density();
            double bound = (a.empty() || b.empty())
                               ? 0.0
                               : prop21_lower_bound(alpha, beta, static_cast<double>(a.ambient_bound()),
                                                    static_cast<double>(b.ambient_bound()));
            json outputs;
            outputs["ratio_count"] = json_count(ratio_count(a, b));
            outputs["gcd_classes"] = detail::gcd_table_json(table);
            outputs["alpha"] = round_sig15(alpha);
            outputs["beta"] = round_sig15(beta);
            outputs["prop21_lower_bound"] = round_sig15(bound);
            outputs["sup_ge_bound"] = detail::prop21_holds_exact(table.sup_size, a.size(), b.size(),
                                                                 a.ambient_bound(), b.ambient_bound());
            json params{{"a", fracstat_opts.a_path}, {"b", fracstat_opts.b_path}};
            detail::finish(fracstat_opts.common, "fracstat", params, outputs, out);
        } else if (bound_cmd->parsed()) {
            SeededRng rng(bound_opts.seed);
            json rows = json::array();
            unsigned violations = 0;
            double min_margin = HUGE_VAL;
            auto record = [&](const IntegerSet& a, const IntegerSet& b, const std::string& kind) {
                if (a.empty() || b.empty()) return;
                GcdClassTable table = gcd_class_sizes(a, b);
                bool ok = detail::prop21_holds_exact(table.sup_size, a.size(), b.size(), a.ambient_bound(),
                                                     b.ambient_bound());
                double bound = prop21_lower_bound(a.density(), b.density(),
                                                  static_cast<double>(a.ambient_bound()),
                                                  static_cast<double>(b.ambient_bound()));
                double margin = static_cast<double>(table.sup_size) / bound;
                if (!ok) ++violations;
                min_margin = std::min(min_margin, margin);
                rows.push_back(json{{"kind", kind},
                                    {"x", json_count(a.ambient_bound())},
                                    {"y", json_count(b.ambient_bound())},
                                    {"alpha", round_sig15(a.density())},
                                    {"beta", round_sig15(b.density())},
                                    {"sup_size", json_count(table.sup_size)},
                                    {"bound", round_sig15(bound)},
                                    {"ok", ok}});
            };
            for (unsigned i = 0; i < bound_opts.pairs; ++i) {
                std::uint64_t x = rng.uniform_int(50, bound_opts.xmax);
                std::uint64_t y = rng.uniform_int(50, bound_opts.ymax);
                double alpha = 0.05 + 0.95 * rng.uniform();
                double beta = 0.05 + 0.95 * rng.uniform();
                record(bernoulli_set(alpha, x, rng.next()), bernoulli_set(beta, y, rng.next()), "bernoulli");
            }
            for (const PrimeFamily& family : detail::adversarial_families()) {
                IntegerSet a = build_t12_set(family, bound_opts.xmax);
                record(a, a, "t12");
            }
            json outputs{{"instances", rows.size()},
                         {"violations", violations},
                         {"all_hold", violations == 0},
                         {"min_margin", round_sig15(min_margin)},
                         {"rows", rows}};
            json params{{"pairs", bound_opts.pairs},
                        {"xmax", bound_opts.xmax},
                        {"ymax", bound_opts.ymax},
                        {"seed", bound_opts.seed}};
            detail::finish(bound_opts.common, "bound-check", params, outputs, out);
        } else if (moment_cmd->parsed()) {
            BigInt sum = tau_moment_sum(moment_opts.x, moment_opts.q, moment_opts.d);
            double s_q = smooth_tau_moment(moment_opts.q, moment_opts.d, moment_opts.tol);
            double xs = static_cast<double>(moment_opts.x) * s_q;
            json outputs;
            outputs["x"] = json_count(moment_opts.x);
            outputs["q"] = moment_opts.q;
            outputs["d"] = json_count(moment_opts.d);
            outputs["sum"] = json_big(sum);
            outputs["s_q"] = round_sig15(s_q);
            outputs["x_times_s_q"] = round_sig15(xs);
            outputs["sum_le_x_s_q"] = sum.convert_to<double>() <= xs;
            outputs["ratio_dx"] = round_sig15(
                sum.convert_to<double>() /
                (static_cast<double>(moment_opts.d) * static_cast<double>(moment_opts.x)));
            if (moment_opts.q <= 12) outputs["analytic_cq"] = json_big(analytic_cq_fallback(moment_opts.q));
            if (moment_opts.d >= 2) {
                outputs["mertens_d"] = round_sig15(mertens_product(moment_opts.d));
                outputs["s_0"] = round_sig15(smooth_tau_moment(0, moment_opts.d, moment_opts.tol));
            }
            json params{{"x", moment_opts.x}, {"q", moment_opts.q}, {"d", moment_opts.d},
                        {"tol", moment_opts.tol}};
            detail::finish(moment_opts.common, "divisor-moment", params, outputs, out);
        } else if (exponent_cmd->parsed()) {
            ExponentTrace trace = iterate_exponents(exponent_opts.q, exponent_opts.tol);
            json deltas = json::array();
            for (double d : trace.deltas) deltas.push_back(round_sig15(d));
            double last = trace.deltas.back();
            json outputs{{"q", trace.q},
                         {"tol", trace.tol},
                         {"deltas", deltas},
                         {"limit", round_sig15(trace.limit)},
                         {"last", round_sig15(last)},
                         {"steps_to_converge", trace.steps_to_converge},
                         {"fixed_point_residual",
                          round_sig15(std::fabs(exponent_step(trace.limit, trace.q) - trace.limit))}};
            json params{{"q", exponent_opts.q}, {"tol", exponent_opts.tol}};
            detail::finish(exponent_opts.common, "exponent", params, outputs, out);
        } else if (constants_cmd->parsed()) {
            ConstantLedger ledger =
                make_constant_ledger(constants_opts.c, constants_opts.delta, constants_opts.q,
                                     constants_opts.cq, constants_opts.alpha, constants_opts.beta);
            double ratio = check_constant_identity(constants_opts.c, constants_opts.delta, constants_opts.q,
                                                   constants_opts.cq, constants_opts.alpha,
                                                   constants_opts.beta);
            json outputs{{"C", round_sig15(ledger.C)},
                         {"C_prime", round_sig15(ledger.C_prime)},
                         {"delta", round_sig15(ledger.delta)},
                         {"delta_prime", round_sig15(ledger.delta_prime)},
                         {"q", ledger.q},
                         {"c_q", round_sig15(ledger.c_q)},
                         {"K", round_sig15(ledger.K)},
                         {"L", json_count(ledger.L)},
                         {"T", json_count(ledger.T)},
                         {"D", json_count(ledger.D)},
                         {"identity_ratio", round_sig15(ratio)},
                         {"identity_ok", std::fabs(ratio - 1.0) <= 1e-9}};
            json params{{"c", constants_opts.c},     {"delta", constants_opts.delta},
                        {"q", constants_opts.q},     {"cq", constants_opts.cq},
                        {"alpha", constants_opts.alpha}, {"beta", constants_opts.beta}};
            detail::finish(constants_opts.common, "constants", params, outputs, out);
        } else if (t12_cmd->parsed()) {
            std::optional<std::uint64_t> window;
            if (t12_cmd->count("--window-t")) window = t12_opts.window_t;
            PrimeFamily family(t12_opts.primes, t12_opts.m, window);
            std::vector<BigInt> products = subset_products(family);
            IntegerSet set = build_t12_set(family, t12_opts.x);
            json family_json;
            {
                json arr = json::array();
                for (std::uint64_t p : family.primes) arr.push_back(json_count(p));
                family_json["primes"] = arr;
                family_json["m"] = family.m;
                if (family.window_t) family_json["window_t"] = json_count(*family.window_t);
            }
            json products_json = json::array();
            for (const BigInt& p : products) products_json.push_back(json_big(p));
            json counts;
            counts["set_size"] = json_count(set.size());
            counts["x"] = json_count(t12_opts.x);
            counts["density_empirical"] = round_sig15(set.density());
            counts["ratio_set_count"] = json_big(ratio_set_count_exact(family));
            counts["lemma31_coefficient"] = round_sig15(lemma31_bound(family.m));
            if (products.size() <= 20) counts["alpha_exact"] = json_rat(density_alpha_p(family));
            json outputs{{"family", family_json}, {"products", products_json}, {"counts", counts}};
            json params{{"primes", t12_opts.primes}, {"m", t12_opts.m}, {"x", t12_opts.x}};
            if (window) params["window_t"] = *window;
            detail::finish(t12_opts.common, "construct-t12", params, outputs, out);
        } else if (t13_cmd->parsed()) {
            PointSelector selector = t13_opts.selector == "shuffle" ? PointSelector::seeded_shuffle
                                                                    : PointSelector::lexicographic;
            T13Construction built = build_t13(t13_opts.gamma, t13_opts.x, t13_opts.y, selector, t13_opts.seed);
            json outputs{{"gamma", round_sig15(built.gamma)},
                         {"X", json_count(built.x)},
                         {"Y", json_count(built.y)},
                         {"S_size", json_count(built.s.size())},
                         {"C_size", json_count(built.c.size())},
                         {"frac_count", json_count(frac_count_grid(built.c))},
                         {"dilates", json_count(built.dilate_count)},
                         {"selector", t13_opts.selector}};
            json params{{"gamma", t13_opts.gamma}, {"x", t13_opts.x}, {"y", t13_opts.y},
                        {"selector", t13_opts.selector}};
            if (selector == PointSelector::seeded_shuffle) {
                outputs["seed"] = json_count(t13_opts.seed);
                params["seed"] = t13_opts.seed;
            }
            detail::finish(t13_opts.common, "construct-t13", params, outputs, out);
        } else if (gap_cmd->parsed()) {
            IntegerSet a, b;
            std::string source;
            json params;
            if (!gap_opts.a_path.empty() || !gap_opts.b_path.empty()) {
                if (gap_opts.a_path.empty() || gap_opts.b_path.empty())
                    throw std::invalid_argument("gap-find: provide both --a and --b");
                a = read_set_file(gap_opts.a_path);
                b = read_set_file(gap_opts.b_path);
                source = "files";
                params = json{{"a", gap_opts.a_path}, {"b", gap_opts.b_path}};
            } else if (gap_opts.multiples.size() == 2) {
                if (gap_opts.x == 0 || gap_opts.y == 0)
                    throw std::invalid_argument("gap-find: --multiples needs --x and --y");
                a = window(multiples_of_any({gap_opts.multiples[0]}, gap_opts.x), gap_opts.x);
                b = window(multiples_of_any({gap_opts.multiples[1]}, gap_opts.y), gap_opts.y);
                source = "multiples";
                params = json{{"multiples", gap_opts.multiples}, {"x", gap_opts.x}, {"y", gap_opts.y}};
            } else if (gap_opts.alpha > 0 && gap_opts.beta > 0) {
                if (gap_opts.x == 0 || gap_opts.y == 0)
                    throw std::invalid_argument("gap-find: generated sets need --x and --y");
                a = bernoulli_window_set(gap_opts.alpha, gap_opts.x, gap_opts.seed);
                b = bernoulli_window_set(gap_opts.beta, gap_opts.y, gap_opts.seed ^ 0x5851f42d4c957f2dull);
                source = "bernoulli";
                params = json{{"alpha", gap_opts.alpha}, {"beta", gap_opts.beta},  {"x", gap_opts.x},
                              {"y", gap_opts.y},         {"seed", gap_opts.seed}};
            } else {
                throw std::invalid_argument(
                    "gap-find: provide --a/--b files, --multiples h,k, or --alpha/--beta");
            }
            GapCertificate cert = small_gap_certificate(a, b);
            json outputs = detail::certificate_json(cert);
            outputs["source"] = source;
            outputs["size_a"] = json_count(a.size());
            outputs["size_b"] = json_count(b.size());
            detail::finish(gap_opts.common, "gap-find", params, outputs, out);
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace fracset::cli
