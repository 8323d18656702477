// Command line front end: compute, verify, sweep, grid and bench
// subcommands over the core library, with CSV/JSON output.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/bounds.hpp"
#include "cyclo/coeffs.hpp"
#include "cyclo/fkseq.hpp"
#include "cyclo/parallel.hpp"
#include "cyclo/stats.hpp"
#include "cyclo/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using cyclo::Rational;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string frac_str(const Rational& v) {
    return std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
}

double frac_value(const Rational& v) { return boost::rational_cast<double>(v); }

std::string sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Rational parse_fraction(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den <= 0) throw UsageError("fraction denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw UsageError("cannot parse fraction '" + text + "' (expected N or N/D)");
    }
}

// Writes through a temp file and renames, so a failed run leaves nothing
// partial behind.
void atomic_write(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path temp(path + ".tmp");
    try {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw UsageError("cannot open " + temp.string() + " for writing");
        out << content;
        out.close();
        if (!out) throw UsageError("failed writing " + temp.string());
        std::filesystem::rename(temp, target);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(temp, ec);
        throw;
    }
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
    if (out_path) atomic_write(*out_path, content);
    else std::cout << content;
}

int resolve_workers(int option_value) {
    if (option_value > 0) return option_value;
    if (const char* env = std::getenv("CYCLO_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return cyclo::default_worker_count();
}

cyclo::TernaryTriple make_triple_checked(std::int64_t p, std::int64_t q, std::int64_t r) {
    try {
        return cyclo::TernaryTriple(p, q, r);
    } catch (const cyclo::InvalidTriple& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
    std::int64_t p = 0, q = 0, r = 0;
    std::string method = "fk";
    std::optional<std::int64_t> at;
    std::string format = "csv";
    std::optional<std::string> out;
};

int run_compute(const ComputeOptions& opt) {
    const auto triple = make_triple_checked(opt.p, opt.q, opt.r);
    const auto ctx = cyclo::make_context(triple);

    const bool want_oracle = opt.method == "oracle" || opt.method == "both";
    const bool want_fk = opt.method == "fk" || opt.method == "both";

    if (opt.at) {
        const std::int64_t n = *opt.at;
        if (n < 0 || n > triple.degree())
            throw UsageError("--at index " + std::to_string(n) + " outside [0, " +
                             std::to_string(triple.degree()) + "]");
        std::optional<std::int64_t> via_oracle, via_fk;
        if (want_oracle) via_oracle = cyclo::oracle_coefficients(triple).at_or_zero(n);
        if (want_fk) via_fk = cyclo::coefficient_at(ctx, n);
        if (via_oracle && via_fk && *via_oracle != *via_fk) {
            std::cerr << "method disagreement at n=" << n << ": oracle " << *via_oracle
                      << ", fk " << *via_fk << "\n";
            return kExitCheckFailed;
        }
        const std::int64_t value = via_fk ? *via_fk : *via_oracle;
        if (opt.format == "json") {
            Json doc{{"p", triple.p}, {"q", triple.q}, {"r", triple.r},
                     {"deg", triple.degree()}, {"method", opt.method},
                     {"coefficient", Json::array({n, value})}};
            emit(opt.out, doc.dump(2) + "\n");
        } else {
            emit(opt.out, "n,value\n" + std::to_string(n) + "," + std::to_string(value) + "\n");
        }
        return kExitOk;
    }

    std::optional<cyclo::CoefficientVector> vec;
    if (want_oracle) vec = cyclo::oracle_coefficients(triple);
    if (want_fk) {
        auto fast = cyclo::all_coefficients(ctx);
        if (vec && vec->coeffs != fast.coeffs) {
            for (std::size_t n = 0; n < vec->coeffs.size(); ++n)
                if (vec->coeffs[n] != fast.coeffs[n]) {
                    std::cerr << "method disagreement at n=" << n << ": oracle "
                              << vec->coeffs[n] << ", fk " << fast.coeffs[n] << "\n";
                    break;
                }
            return kExitCheckFailed;
        }
        vec = std::move(fast);
    }
    const auto ex = cyclo::extrema(*vec);

    if (opt.format == "json") {
        Json doc{{"p", triple.p}, {"q", triple.q}, {"r", triple.r},
                 {"deg", triple.degree()}, {"method", opt.method}};
        Json coeffs = Json::array();
        for (std::size_t n = 0; n < vec->coeffs.size(); ++n)
            coeffs.push_back(Json::array({n, vec->coeffs[n]}));
        doc["coefficients"] = std::move(coeffs);
        doc["summary"] = Json{{"a_plus", ex.a_plus},
                              {"a_minus", ex.a_minus},
                              {"a", ex.height},
                              {"max_jump", ex.max_jump}};
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        std::string body = "n,value\n";
        for (std::size_t n = 0; n < vec->coeffs.size(); ++n)
            body += std::to_string(n) + "," + std::to_string(vec->coeffs[n]) + "\n";
        emit(opt.out, body);
        std::cout << "# a_plus=" << ex.a_plus << " a_minus=" << ex.a_minus << " a=" << ex.height
                  << " max_jump=" << ex.max_jump << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
    std::vector<std::int64_t> triple;
    bool sweep = false;
    std::int64_t pqr_max = 0;
    std::int64_t p_max = 0;
    bool exhaustive = false;
    std::int64_t samples = 4000;
    std::uint64_t seed = 12345;
    int workers = 0;
    std::string format = "text";
    std::optional<std::string> out;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<cyclo::TernaryTriple> triples;
    if (opt.sweep) {
        if (opt.pqr_max < 105) throw UsageError("--sweep requires --pqr-max >= 105");
        triples = cyclo::enumerate_triples(opt.pqr_max, opt.p_max);
    } else {
        if (opt.triple.size() != 3)
            throw UsageError("verify needs either `verify p q r` or `verify --sweep --pqr-max N`");
        triples.push_back(make_triple_checked(opt.triple[0], opt.triple[1], opt.triple[2]));
    }

    const cyclo::verify::Sampling sampling{opt.exhaustive, opt.samples, opt.seed};
    const int workers = resolve_workers(opt.workers);

    std::vector<cyclo::verify::TripleReport> reports(triples.size(),
                                                     cyclo::verify::TripleReport{triples[0], {}});
    std::atomic<bool> had_error{false};
    cyclo::parallel_for_index(static_cast<std::int64_t>(triples.size()), workers,
                              [&](std::int64_t i) {
                                  try {
                                      reports[static_cast<std::size_t>(i)] = cyclo::verify::check_triple(
                                          triples[static_cast<std::size_t>(i)], sampling);
                                  } catch (const std::exception& e) {
                                      cyclo::verify::CheckResult crash{"internal", 1, 0, ""};
                                      crash.record_failure(e.what());
                                      reports[static_cast<std::size_t>(i)] =
                                          cyclo::verify::TripleReport{
                                              triples[static_cast<std::size_t>(i)], {crash}};
                                      had_error = true;
                                  }
                              });

    // aggregate by check name, preserving order of first appearance
    std::vector<cyclo::verify::CheckResult> totals;
    for (const auto& report : reports)
        for (const auto& check : report.checks) {
            auto it = std::find_if(totals.begin(), totals.end(),
                                   [&](const auto& t) { return t.name == check.name; });
            if (it == totals.end()) totals.push_back(check);
            else it->merge(check);
        }

    bool all_pass = !had_error;
    for (const auto& t : totals) all_pass = all_pass && t.passed();

    if (opt.format == "json") {
        Json doc{{"triples", triples.size()},
                 {"mode", opt.exhaustive ? "exhaustive" : "sampled"},
                 {"samples", opt.samples},
                 {"seed", opt.seed},
                 {"passed", all_pass}};
        Json checks = Json::array();
        for (const auto& t : totals) {
            Json entry{{"name", t.name}, {"checked", t.checked}, {"failed", t.failed}};
            entry["first_failure"] = t.passed() ? Json(nullptr) : Json(t.first_failure);
            checks.push_back(std::move(entry));
        }
        doc["checks"] = std::move(checks);
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        std::ostringstream body;
        body << "verify: " << triples.size() << " triple" << (triples.size() == 1 ? "" : "s")
             << ", mode=" << (opt.exhaustive ? "exhaustive" : "sampled");
        if (!opt.exhaustive) body << " (samples=" << opt.samples << ", seed=" << opt.seed << ")";
        body << ", workers=" << workers << "\n";
        for (const auto& t : totals) {
            body << "  " << (t.passed() ? "PASS" : "FAIL") << "  " << t.name;
            for (std::size_t pad = t.name.size(); pad < 24; ++pad) body << ' ';
            body << t.checked << " checked";
            if (!t.passed()) body << ", " << t.failed << " failed; first: " << t.first_failure;
            body << "\n";
        }
        body << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
        emit(opt.out, body.str());
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------ sweep

struct SweepOptions {
    std::int64_t pqr_max = 0;
    std::int64_t p_max = 0;
    std::string format = "csv";
    std::optional<std::string> out;
    int workers = 0;
    bool timings = false;
};

struct SweepRow {
    cyclo::TernaryTriple triple{3, 5, 7};
    std::int64_t deg = 0;
    std::int64_t alpha = 0, beta = 0, beta_star = 0;
    std::int32_t a_plus = 0, a_minus = 0, a = 0, max_jump = 0;
    std::int64_t bound_new = 0, bound_bachman = 0, bound_beiter = 0, bound_bang = 0;
    bool tight = false;
    std::optional<int> guarantee;
    std::int64_t elapsed_ms = 0;
};

SweepRow compute_row(const cyclo::TernaryTriple& t, bool timings) {
    const auto start = std::chrono::steady_clock::now();
    const auto ctx = cyclo::make_context(t);
    const auto ex = cyclo::extrema(cyclo::all_coefficients(ctx));
    const auto report = cyclo::make_bound_report(ctx, ex);

    SweepRow row;
    row.triple = t;
    row.deg = t.degree();
    row.alpha = ctx.alpha;
    row.beta = ctx.beta;
    row.beta_star = ctx.beta_star;
    row.a_plus = ex.a_plus;
    row.a_minus = ex.a_minus;
    row.a = ex.height;
    row.max_jump = ex.max_jump;
    row.bound_new = report.bound_new;
    row.bound_bachman = report.bound_bachman;
    row.bound_beiter = report.bound_beiter;
    row.bound_bang = report.bound_bang;
    row.tight = report.tight();
    if (t.p > 3) row.guarantee = cyclo::residue_class_guarantee(ctx);
    if (timings)
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return row;
}

int run_sweep(const SweepOptions& opt) {
    if (opt.pqr_max < 105) throw UsageError("sweep requires --pqr-max >= 105");
    const auto triples = cyclo::enumerate_triples(opt.pqr_max, opt.p_max);
    std::vector<SweepRow> rows(triples.size());
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;
    cyclo::parallel_for_index(static_cast<std::int64_t>(triples.size()),
                              resolve_workers(opt.workers), [&](std::int64_t i) {
                                  try {
                                      rows[static_cast<std::size_t>(i)] = compute_row(
                                          triples[static_cast<std::size_t>(i)], opt.timings);
                                  } catch (const std::exception& e) {
                                      std::scoped_lock lock(failure_mutex);
                                      failed = true;
                                      if (failure.empty()) failure = e.what();
                                  }
                              });
    if (failed) {
        std::cerr << "sweep failed: " << failure << "\n";
        return kExitCheckFailed;
    }

    if (opt.format == "json") {
        Json doc = Json::array();
        for (const auto& row : rows) {
            Json entry{{"p", row.triple.p},
                       {"q", row.triple.q},
                       {"r", row.triple.r},
                       {"deg", row.deg},
                       {"alpha", row.alpha},
                       {"beta", row.beta},
                       {"beta_star", row.beta_star},
                       {"a_plus", row.a_plus},
                       {"a_minus", row.a_minus},
                       {"a", row.a},
                       {"max_jump", row.max_jump},
                       {"bound_new", row.bound_new},
                       {"bound_bachman", row.bound_bachman},
                       {"bound_beiter", row.bound_beiter},
                       {"bound_bang", row.bound_bang},
                       {"tight_flag", row.tight}};
            entry["corollary_s_guarantee"] = row.guarantee ? Json(*row.guarantee) : Json(nullptr);
            entry["elapsed_ms"] = row.elapsed_ms;
            doc.push_back(std::move(entry));
        }
        emit(opt.out, doc.dump(2) + "\n");
    } else {
        std::string body =
            "p,q,r,deg,alpha,beta,beta_star,a_plus,a_minus,a,max_jump,bound_new,"
            "bound_bachman,bound_beiter,bound_bang,tight_flag,corollary_s_guarantee,elapsed_ms\n";
        for (const auto& row : rows) {
            body += std::to_string(row.triple.p) + ',' + std::to_string(row.triple.q) + ',' +
                    std::to_string(row.triple.r) + ',' + std::to_string(row.deg) + ',' +
                    std::to_string(row.alpha) + ',' + std::to_string(row.beta) + ',' +
                    std::to_string(row.beta_star) + ',' + std::to_string(row.a_plus) + ',' +
                    std::to_string(row.a_minus) + ',' + std::to_string(row.a) + ',' +
                    std::to_string(row.max_jump) + ',' + std::to_string(row.bound_new) + ',' +
                    std::to_string(row.bound_bachman) + ',' + std::to_string(row.bound_beiter) +
                    ',' + std::to_string(row.bound_bang) + ',' +
                    (row.tight ? "true" : "false") + ',' +
                    (row.guarantee ? std::to_string(*row.guarantee) : "") + ',' +
                    std::to_string(row.elapsed_ms) + '\n';
        }
        emit(opt.out, body);
    }
    return kExitOk;
}

// ------------------------------------------------------------------- grid

struct GridOptions {
    std::int64_t p = 0;
    std::vector<std::string> thresholds;
    std::string format = "text";
    std::optional<std::string> out; // full grid CSV
};

int run_grid(const GridOptions& opt) {
    if (opt.p < 3 || opt.p % 2 == 0 || !cyclo::is_prime(opt.p))
        throw UsageError("grid requires an odd prime, got " + std::to_string(opt.p));
    const std::int64_t p = opt.p;

    std::vector<Rational> thresholds;
    for (const auto& text : opt.thresholds) {
        const Rational c = parse_fraction(text);
        if (c <= Rational(0)) throw UsageError("--c must be positive, got " + text);
        thresholds.push_back(c);
    }

    bool ok = true;
    Rational average(0);
    try {
        average = cyclo::grid_average(p);
    } catch (const cyclo::BoundViolation& e) {
        std::cerr << e.what() << "\n";
        return kExitCheckFailed;
    }
    const std::int64_t stronger = cyclo::stronger_count(p);
    const std::int64_t stronger_expected = (p - 3) * (p - 5) / 2;
    ok = ok && stronger == stronger_expected;

    std::vector<cyclo::DensitySummary> densities;
    for (const auto& c : thresholds) densities.push_back(cyclo::grid_density(p, c));

    if (opt.format == "json") {
        Json doc{{"p", p},
                 {"grid_average", frac_str(average)},
                 {"grid_average_value", sig12(frac_value(average))},
                 {"average_bound", frac_str(Rational(p + 1, 2))},
                 {"stronger_count",
                  Json{{"observed", stronger},
                       {"expected", stronger_expected},
                       {"pairs", (p - 1) * (p - 1)}}}};
        Json list = Json::array();
        for (const auto& d : densities)
            list.push_back(Json{{"c", frac_str(d.c)},
                                {"empirical", frac_str(d.empirical_fraction)},
                                {"empirical_value", sig12(frac_value(d.empirical_fraction))},
                                {"lower_bound", frac_str(d.closed_form_lower)},
                                {"lower_bound_value", sig12(frac_value(d.closed_form_lower))}});
        doc["densities"] = std::move(list);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "p: " << p << "\n";
        std::cout << "grid_average: " << frac_str(average) << " (" << sig12(frac_value(average))
                  << "), bound (p+1)/2 = " << frac_str(Rational(p + 1, 2)) << "\n";
        std::cout << "stronger_count: " << stronger << " expected " << stronger_expected << " of "
                  << (p - 1) * (p - 1) << " pairs" << (stronger == stronger_expected ? "" : "  MISMATCH")
                  << "\n";
        for (const auto& d : densities)
            std::cout << "density c=" << frac_str(d.c) << ": " << frac_str(d.empirical_fraction)
                      << " (" << sig12(frac_value(d.empirical_fraction)) << "), limit lower bound "
                      << frac_str(d.closed_form_lower) << " ("
                      << sig12(frac_value(d.closed_form_lower)) << ")\n";
    }

    if (opt.out) {
        const auto grid = cyclo::residue_grid(p);
        std::string body = "i,j,value\n";
        for (std::int64_t i = 1; i < p; ++i)
            for (std::int64_t j = 1; j < p; ++j)
                body += std::to_string(i) + ',' + std::to_string(j) + ',' +
                        std::to_string(grid.at(i, j)) + '\n';
        atomic_write(*opt.out, body);
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------ bench

struct BenchOptions {
    std::vector<std::int64_t> triple;
    std::int64_t pqr_max = 0;
    std::int64_t sample = 0;
    std::uint64_t seed = 12345;
    std::int64_t point_cap = 200000;
    std::string format = "text";
};

struct BenchRow {
    cyclo::TernaryTriple triple{3, 5, 7};
    std::int64_t deg = 0;
    double oracle_s = 0, window_s = 0, point_s = 0;
    std::int64_t points = 0;
};

BenchRow bench_one(const cyclo::TernaryTriple& t, std::int64_t point_cap) {
    BenchRow row;
    row.triple = t;
    row.deg = t.degree();
    const auto ctx = cyclo::make_context(t);

    auto start = std::chrono::steady_clock::now();
    const auto slow = cyclo::oracle_coefficients(t);
    row.oracle_s = seconds_since(start);

    start = std::chrono::steady_clock::now();
    const auto fast = cyclo::all_coefficients(ctx);
    row.window_s = seconds_since(start);

    if (slow.coeffs != fast.coeffs)
        throw cyclo::InternalCheckFailure("bench: oracle and window vectors disagree for (" +
                                          std::to_string(t.p) + ", " + std::to_string(t.q) + ", " +
                                          std::to_string(t.r) + ")");

    row.points = std::min<std::int64_t>(row.deg + 1, point_cap);
    start = std::chrono::steady_clock::now();
    for (std::int64_t n = 0; n < row.points; ++n) {
        if (cyclo::coefficient_at(ctx, n) != fast.coeffs[static_cast<std::size_t>(n)])
            throw cyclo::InternalCheckFailure("bench: point query disagrees at n=" +
                                              std::to_string(n));
    }
    row.point_s = seconds_since(start);
    return row;
}

int run_bench(const BenchOptions& opt) {
    std::vector<cyclo::TernaryTriple> triples;
    if (!opt.triple.empty()) {
        if (opt.triple.size() != 3) throw UsageError("bench takes exactly three primes");
        triples.push_back(make_triple_checked(opt.triple[0], opt.triple[1], opt.triple[2]));
    } else {
        if (opt.pqr_max < 105)
            throw UsageError("bench needs either `bench p q r` or --pqr-max with --sample");
        auto all = cyclo::enumerate_triples(opt.pqr_max);
        const std::int64_t want = opt.sample > 0 ? opt.sample : 3;
        std::mt19937_64 rng(opt.seed);
        std::shuffle(all.begin(), all.end(), rng);
        const auto keep = std::min<std::size_t>(all.size(), static_cast<std::size_t>(want));
        all.erase(all.begin() + static_cast<std::ptrdiff_t>(keep), all.end());
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            return std::array{a.p, a.q, a.r} < std::array{b.p, b.q, b.r};
        });
        triples = std::move(all);
    }

    Json doc = Json::array();
    for (const auto& t : triples) {
        BenchRow row;
        try {
            row = bench_one(t, opt.point_cap);
        } catch (const cyclo::InternalCheckFailure& e) {
            std::cerr << e.what() << "\n";
            return kExitCheckFailed;
        }
        const double deg = static_cast<double>(row.deg + 1);
        if (opt.format == "json") {
            doc.push_back(Json{{"p", t.p},
                               {"q", t.q},
                               {"r", t.r},
                               {"deg", row.deg},
                               {"oracle_seconds", row.oracle_s},
                               {"oracle_coeffs_per_s", deg / std::max(row.oracle_s, 1e-9)},
                               {"window_seconds", row.window_s},
                               {"window_coeffs_per_s", deg / std::max(row.window_s, 1e-9)},
                               {"point_queries", row.points},
                               {"point_seconds", row.point_s},
                               {"point_coeffs_per_s",
                                static_cast<double>(row.points) / std::max(row.point_s, 1e-9)},
                               {"agreement", true}});
        } else {
            std::printf("bench (%lld,%lld,%lld) deg=%lld\n", static_cast<long long>(t.p),
                        static_cast<long long>(t.q), static_cast<long long>(t.r),
                        static_cast<long long>(row.deg));
            std::printf("  %-10s %10.4fs %14s coeffs/s\n", "oracle", row.oracle_s,
                        sig12(deg / std::max(row.oracle_s, 1e-9)).c_str());
            std::printf("  %-10s %10.4fs %14s coeffs/s\n", "fk-window", row.window_s,
                        sig12(deg / std::max(row.window_s, 1e-9)).c_str());
            std::printf("  %-10s %10.4fs %14s coeffs/s (%lld points)\n", "point-at", row.point_s,
                        sig12(static_cast<double>(row.points) / std::max(row.point_s, 1e-9)).c_str(),
                        static_cast<long long>(row.points));
            std::printf("  agreement: OK\n");
        }
    }
    if (opt.format == "json") std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary cyclotomic coefficient toolkit"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "coefficients and extrema for one triple");
    compute_cmd->add_option("p", compute.p, "first prime")->required();
    compute_cmd->add_option("q", compute.q, "second prime")->required();
    compute_cmd->add_option("r", compute.r, "third prime")->required();
    compute_cmd->add_option("--method", compute.method, "oracle | fk | both")
        ->check(CLI::IsMember({"oracle", "fk", "both"}));
    std::int64_t compute_at = -1;
    auto* at_opt = compute_cmd->add_option("--at", compute_at, "single coefficient index");
    compute_cmd->add_option("--format", compute.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    std::string compute_out;
    auto* compute_out_opt = compute_cmd->add_option("--out", compute_out, "output path");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
    verify_cmd->add_option("triple", verify.triple, "p q r")->expected(0, 3);
    verify_cmd->add_flag("--sweep", verify.sweep, "verify every triple under --pqr-max");
    verify_cmd->add_option("--pqr-max", verify.pqr_max, "product limit for --sweep");
    verify_cmd->add_option("--p-max", verify.p_max, "limit on the smallest prime");
    verify_cmd->add_flag("--exhaustive", verify.exhaustive, "check every k and n");
    verify_cmd->add_option("--samples", verify.samples, "sample count per check");
    verify_cmd->add_option("--seed", verify.seed, "sampling seed");
    verify_cmd->add_option("--workers", verify.workers, "worker threads (default: CYCLO_WORKERS or all cores)");
    verify_cmd->add_option("--format", verify.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string verify_out;
    auto* verify_out_opt = verify_cmd->add_option("--out", verify_out, "output path");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "bounds and extrema for every triple in range");
    sweep_cmd->add_option("--pqr-max", sweep.pqr_max, "product limit")->required();
    sweep_cmd->add_option("--p-max", sweep.p_max, "limit on the smallest prime");
    sweep_cmd->add_option("--format", sweep.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    std::string sweep_out;
    auto* sweep_out_opt = sweep_cmd->add_option("--out", sweep_out, "output path");
    sweep_cmd->add_option("--workers", sweep.workers, "worker threads");
    sweep_cmd->add_flag("--timings", sweep.timings, "fill elapsed_ms with real measurements");

    GridOptions grid;
    auto* grid_cmd = app.add_subcommand("grid", "residue-grid statistics for one prime");
    grid_cmd->add_option("p", grid.p, "odd prime")->required();
    grid_cmd->add_option("--c", grid.thresholds, "density threshold as a fraction, repeatable");
    grid_cmd->add_option("--format", grid.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    std::string grid_out;
    auto* grid_out_opt = grid_cmd->add_option("--out", grid_out, "write the full grid as CSV");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "timing comparison of the coefficient paths");
    bench_cmd->add_option("triple", bench.triple, "p q r")->expected(0, 3);
    bench_cmd->add_option("--pqr-max", bench.pqr_max, "product limit for sampled benches");
    bench_cmd->add_option("--sample", bench.sample, "number of sampled triples");
    bench_cmd->add_option("--seed", bench.seed, "sampling seed");
    bench_cmd->add_option("--point-cap", bench.point_cap, "max point queries per triple");
    bench_cmd->add_option("--format", bench.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute_cmd->parsed()) {
            if (at_opt->count() > 0) compute.at = compute_at;
            if (compute_out_opt->count() > 0) compute.out = compute_out;
            return run_compute(compute);
        }
        if (verify_cmd->parsed()) {
            if (verify_out_opt->count() > 0) verify.out = verify_out;
            return run_verify(verify);
        }
        if (sweep_cmd->parsed()) {
            if (sweep_out_opt->count() > 0) sweep.out = sweep_out;
            return run_sweep(sweep);
        }
        if (grid_cmd->parsed()) {
            if (grid_out_opt->count() > 0) grid.out = grid_out;
            return run_grid(grid);
        }
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const cyclo::InternalCheckFailure& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const cyclo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
