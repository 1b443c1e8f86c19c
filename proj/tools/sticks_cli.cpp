// sticks -- exact values, simulations, and cross-method verification for the
// probability that no k of n uniform stick lengths can form a k-gon.
//
// Subcommands: exact, table, simulate, verify, sequence.
// Output formats: human (default), csv (RFC-4180-style, LF endings), json.
// Exit codes: 0 success, 1 verification mismatch, 2 argument error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <sticks/sticks.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace sticks;

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitArgError = 2;
constexpr int kExitIoError = 3;

std::string fmt_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Open the requested sink and run `body` on it. Returns kExitIoError when
/// the path cannot be opened or the stream ends in a failed state.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(std::cout);
        return std::cout ? kExitOk : kExitIoError;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return kExitIoError;
    }
    body(file);
    file.flush();
    if (!file) {
        std::cerr << "error: failed writing output path: " << path << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value != 0) return flag_value;
    if (const char* env = std::getenv("STICKS_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 0;  // montecarlo picks hardware concurrency
}

// ---------------------------------------------------------------- exact ----

struct ExactRecord {
    int n;
    int k;
    std::string method;
    Ratio p;
};

int cmd_exact(int n, int k, bool cross_check, const std::string& format, int precision,
              const std::string& output) {
    std::vector<ExactRecord> records;
    if (k == 3)
        records.push_back({n, k, "theorem", p_no_triangle(n)});
    else if (k == 4)
        records.push_back({n, k, "theorem", p_no_quadrilateral(n)});
    else
        records.push_back({n, k, "engine", probability(KGonQuery(n, k))});
    if (cross_check) {
        if (k == 3 || k == 4)
            records.push_back({n, k, "engine", probability(KGonQuery(n, k))});
        else
            records.push_back({n, k, "oracle", probability_oracle(KGonQuery(n, k))});
    }

    return with_output(output, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : records) {
                ordered_json rec;
                rec["n"] = r.n;
                rec["k"] = r.k;
                rec["method"] = r.method;
                rec["p_exact"] = r.p.str();
                rec["p_decimal"] = r.p.decimal(precision);
                arr.push_back(rec);
            }
            os << arr.dump(2) << "\n";
        } else if (format == "csv") {
            os << "n,k,method,p_num,p_den,p_decimal\n";
            for (const auto& r : records)
                os << r.n << "," << r.k << "," << r.method << "," << r.p.numerator() << ","
                   << r.p.denominator() << "," << r.p.decimal(precision) << "\n";
        } else {
            for (const auto& r : records)
                os << "n=" << r.n << " k=" << r.k << " [" << r.method << "] P = " << r.p.str()
                   << " = " << r.p.decimal(precision) << "\n";
            if (cross_check && records.size() == 2)
                os << (records[0].p == records[1].p ? "cross-check: values agree"
                                                    : "cross-check: MISMATCH")
                   << "\n";
        }
    });
}

// ---------------------------------------------------------------- table ----

std::string final_coeff_string(int n, int k) {
    if (n < k) return "";
    const auto trace = coefficient_trace(KGonQuery(n, k));
    const auto& last = trace.back();
    std::ostringstream os;
    os << last.prefix_coeff;
    for (const auto& b : last.tail) os << " " << b;
    return os.str();
}

int cmd_table(int max_n, const std::vector<int>& ks, const std::string& format, int precision,
              const std::string& output) {
    struct Row {
        int n;
        int k;
        Ratio p;
        std::string coeffs;
    };
    std::vector<Row> rows;
    for (int k : ks)
        for (int n = 1; n <= max_n; ++n)
            rows.push_back({n, k, probability(KGonQuery(n, k)), final_coeff_string(n, k)});

    return with_output(output, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json rec;
                rec["n"] = r.n;
                rec["k"] = r.k;
                rec["p_exact"] = r.p.str();
                rec["p_decimal"] = r.p.decimal(precision);
                ordered_json coeffs = ordered_json::array();
                std::istringstream is(r.coeffs);
                std::string tok;
                while (is >> tok) coeffs.push_back(tok);
                rec["coeffs"] = coeffs;
                arr.push_back(rec);
            }
            os << arr.dump(2) << "\n";
        } else if (format == "csv") {
            os << "n,k,p_num,p_den,p_decimal,coeffs\n";
            for (const auto& r : rows)
                os << r.n << "," << r.k << "," << r.p.numerator() << "," << r.p.denominator()
                   << "," << r.p.decimal(precision) << "," << csv_field(r.coeffs) << "\n";
        } else {
            os << "  n   k  P(no k-gon)            decimal                coefficients\n";
            for (const auto& r : rows) {
                char line[256];
                std::snprintf(line, sizeof line, "%3d %3d  %-22s %-22s %s\n", r.n, r.k,
                              r.p.str().c_str(), r.p.decimal(precision).c_str(),
                              r.coeffs.c_str());
                os << line;
            }
        }
    });
}

// ------------------------------------------------------------- simulate ----

int cmd_simulate(int n, int k, std::uint64_t trials, std::uint64_t seed,
                 std::uint64_t chunk_size, unsigned threads, const std::string& format,
                 int precision, const std::string& output) {
    const TrialConfig config(n, k, trials, seed, chunk_size);
    const Estimate est = estimate(config, resolve_threads(threads));
    const Ratio exact = probability(KGonQuery(n, k));
    const double exact_d = exact.to_double();
    const double sigma = std::sqrt(exact_d * (1.0 - exact_d) / static_cast<double>(trials));
    const double abs_err = std::fabs(est.p_hat - exact_d);
    const bool pass = abs_err <= 4.0 * sigma;
    const std::string p_hat_decimal =
        Ratio(BigInt(est.successes), BigInt(est.trials)).decimal(precision);

    return with_output(output, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json rec;
            rec["n"] = n;
            rec["k"] = k;
            rec["method"] = "montecarlo";
            rec["trials"] = est.trials;
            rec["successes"] = est.successes;
            rec["p_decimal"] = p_hat_decimal;
            rec["ci_low"] = fmt_double(est.ci_low, precision);
            rec["ci_high"] = fmt_double(est.ci_high, precision);
            rec["seed"] = seed;
            rec["chunk_size"] = chunk_size;
            rec["exact"] = exact.str();
            rec["exact_decimal"] = exact.decimal(precision);
            rec["four_sigma"] = fmt_double(4.0 * sigma, precision);
            rec["gate"] = pass ? "pass" : "fail";
            os << rec.dump(2) << "\n";
        } else if (format == "csv") {
            os << "n,k,method,p_decimal,ci_low,ci_high,successes,trials,seed,exact,"
                  "exact_decimal,gate\n";
            os << n << "," << k << ",montecarlo," << p_hat_decimal << ","
               << fmt_double(est.ci_low, precision) << "," << fmt_double(est.ci_high, precision)
               << "," << est.successes << "," << est.trials << "," << seed << ","
               << csv_field(exact.str()) << "," << exact.decimal(precision) << ","
               << (pass ? "pass" : "fail") << "\n";
        } else {
            os << "n=" << n << " k=" << k << " montecarlo trials=" << est.trials
               << " seed=" << seed << "\n";
            os << "p_hat = " << p_hat_decimal << " (95% CI [" << fmt_double(est.ci_low, precision)
               << ", " << fmt_double(est.ci_high, precision) << "])\n";
            os << "exact = " << exact.str() << " = " << exact.decimal(precision) << "\n";
            os << "|p_hat - exact| = " << fmt_double(abs_err, 6)
               << " vs 4*sigma = " << fmt_double(4.0 * sigma, 6) << ": "
               << (pass ? "pass" : "fail") << "\n";
        }
    });
}

// --------------------------------------------------------------- verify ----

int cmd_verify(int max_n, int max_k, const std::string& format, const std::string& output) {
    const VerifyReport report = run_verification(max_n, max_k);
    int passed = 0;
    for (const auto& c : report.checks)
        if (c.ok) ++passed;

    const int io = with_output(output, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json rec;
            rec["max_n"] = max_n;
            rec["max_k"] = max_k;
            ordered_json checks = ordered_json::array();
            for (const auto& c : report.checks) {
                ordered_json jc;
                jc["name"] = c.name;
                jc["ok"] = c.ok;
                jc["detail"] = c.detail;
                checks.push_back(jc);
            }
            rec["checks"] = checks;
            rec["all_ok"] = report.all_ok();
            os << rec.dump(2) << "\n";
        } else if (format == "csv") {
            os << "name,ok,detail\n";
            for (const auto& c : report.checks)
                os << csv_field(c.name) << "," << (c.ok ? "true" : "false") << ","
                   << csv_field(c.detail) << "\n";
        } else {
            for (const auto& c : report.checks) {
                os << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name;
                if (!c.ok) os << " -- first mismatch at " << c.detail;
                os << "\n";
            }
            os << passed << "/" << report.checks.size() << " checks passed\n";
            if (!report.all_ok())
                os << "first failure at " << report.first_failure << "\n";
        }
    });
    if (io != kExitOk) return io;
    return report.all_ok() ? kExitOk : kExitVerifyMismatch;
}

// ------------------------------------------------------------- sequence ----

int cmd_sequence(int k, int count, const std::string& format, const std::string& output) {
    const auto terms = kbonacci(SequenceSpec(k, count));
    return with_output(output, [&](std::ostream& os) {
        if (format == "json") {
            ordered_json rec;
            rec["k"] = k;
            rec["count"] = count;
            ordered_json values = ordered_json::array();
            for (const auto& t : terms) values.push_back(t.str());
            rec["values"] = values;
            os << rec.dump(2) << "\n";
        } else if (format == "csv") {
            os << "index,value\n";
            for (size_t i = 0; i < terms.size(); ++i)
                os << (i + 1) << "," << terms[i] << "\n";
        } else {
            for (size_t i = 0; i < terms.size(); ++i) os << (i ? " " : "") << terms[i];
            os << "\n";
        }
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sticks: probabilities that no k of n uniform stick lengths form a k-gon\n"
        "exact closed forms, an exact integration engine, an independent volume\n"
        "oracle, and reproducible Monte Carlo"};
    app.require_subcommand(1);

    std::string format = "human";
    std::string output;
    int precision = 12;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"human", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--output", output, "write to this path instead of stdout");
    app.add_option("--precision", precision, "significant digits for decimals")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();

    int n = 0, k = 0;
    bool cross_check = false;
    auto* exact_cmd = app.add_subcommand("exact", "exact probability for one (n, k)");
    exact_cmd->fallthrough();  // shared --format/--output/--precision may follow
    exact_cmd->add_option("--n", n, "number of sticks")->required()->check(CLI::PositiveNumber);
    exact_cmd->add_option("--k", k, "polygon size to forbid")
        ->required()
        ->check(CLI::Range(3, 10000));
    exact_cmd->add_flag("--cross-check", cross_check,
                        "also emit an independent method for comparison");

    int max_n = 0;
    std::vector<int> k_list;
    auto* table_cmd = app.add_subcommand("table", "exact probabilities for n = 1..max-n");
    table_cmd->fallthrough();
    table_cmd->add_option("--max-n", max_n, "largest n")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--k", k_list, "polygon sizes (repeat or comma-separate)")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(3, 10000));

    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 1u << 16;
    unsigned threads = 0;
    int sim_n = 0, sim_k = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate for one (n, k)");
    sim_cmd->fallthrough();
    sim_cmd->add_option("--n", sim_n, "number of sticks")->required()->check(CLI::PositiveNumber);
    sim_cmd->add_option("--k", sim_k, "polygon size to forbid")
        ->required()
        ->check(CLI::Range(3, 10000));
    sim_cmd->add_option("--trials", trials, "number of trials")->capture_default_str();
    sim_cmd->add_option("--seed", seed, "base seed; fixes the result exactly")
        ->capture_default_str();
    sim_cmd->add_option("--chunk-size", chunk_size, "trials per deterministic work unit")
        ->capture_default_str();
    sim_cmd->add_option("--threads", threads,
                        "worker threads (0 = STICKS_THREADS env or hardware); "
                        "affects speed only, never the result");

    int verify_max_n = 25, verify_max_k = 8;
    auto* verify_cmd =
        app.add_subcommand("verify", "cross-method identity suite; exit 1 on any mismatch");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--max-n", verify_max_n, "largest n to cross-check")
        ->check(CLI::Range(3, 10000))
        ->capture_default_str();
    verify_cmd->add_option("--max-k", verify_max_k, "largest k to cross-check")
        ->check(CLI::Range(3, 10000))
        ->capture_default_str();

    int seq_k = 0, seq_count = 0;
    auto* seq_cmd = app.add_subcommand("sequence", "print a k-step Fibonacci-type sequence");
    seq_cmd->fallthrough();
    seq_cmd->add_option("--k", seq_k, "recurrence window")->required()->check(CLI::Range(2, 10000));
    seq_cmd->add_option("--count", seq_count, "number of terms")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgError;
    }

    try {
        if (app.got_subcommand(exact_cmd))
            return cmd_exact(n, k, cross_check, format, precision, output);
        if (app.got_subcommand(table_cmd))
            return cmd_table(max_n, k_list, format, precision, output);
        if (app.got_subcommand(sim_cmd))
            return cmd_simulate(sim_n, sim_k, trials, seed, chunk_size, threads, format,
                                precision, output);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(verify_max_n, verify_max_k, format, output);
        if (app.got_subcommand(seq_cmd)) return cmd_sequence(seq_k, seq_count, format, output);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}
