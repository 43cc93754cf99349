// divisum: computes sigma(n), the sum of all divisors of n, by independent
// algorithms (prime-factorization closed form, trial division, the
// pentagonal-number recurrence, power-series expansion) and cross-checks
// them against each other and against a built-in reference table.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
// 3 overflow or capacity exhausted. Diagnostics go to stderr.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <limits>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "divisum/divisors.hpp"
#include "divisum/pentagonal.hpp"
#include "divisum/recurrence.hpp"
#include "divisum/reference_table.hpp"
#include "divisum/series.hpp"
#include "divisum/sigma_table.hpp"

namespace {

using divisum::Natural;

enum class Format { text, csv, json };

struct OutputRecord {
    Natural n;
    Natural sigma;
};

// Same numbers in every format; csv gets its header elsewhere.
void emit_row(std::ostream& out, OutputRecord rec, Format format) {
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["n"] = rec.n;
        j["sigma"] = rec.sigma;
        out << j.dump() << '\n';
    } else {
        out << rec.n << ',' << rec.sigma << '\n';
    }
}

// Terms in increasing offset order, then the two partial sums, then the
// total. The zero-argument term prints as the bare number it contributes.
void print_trace(std::ostream& out, const divisum::RecurrenceTrace& trace) {
    for (const auto& term : trace.terms) {
        char sign = term.sign > 0 ? '+' : '-';
        if (term.kind == divisum::TermKind::prior_sigma)
            out << sign << " sigma(" << (trace.n - term.offset) << ") = " << term.contribution
                << '\n';
        else
            out << sign << ' ' << term.contribution << '\n';
    }
    out << "positive sum = " << trace.positive_sum() << '\n';
    out << "negative sum = " << trace.negative_sum() << '\n';
    out << "sigma(" << trace.n << ") = " << trace.total() << '\n';
}

int run_sigma(Natural n, const std::string& method, bool explain_trace) {
    if (method == "recurrence") {
        if (explain_trace) {
            print_trace(std::cout, divisum::explain(n));
            return 0;
        }
        std::cout << divisum::sigma_table_recurrence(n).at(n) << '\n';
        return 0;
    }
    Natural value = method == "trial" ? divisum::sigma_trial(n)
                                      : divisum::sigma_factored(divisum::factorize(n));
    std::cout << value << '\n';
    return 0;
}

int run_table(Natural max_n, const std::string& method, Format format) {
    divisum::SigmaTable table = method == "recurrence" ? divisum::sigma_table_recurrence(max_n)
                                                       : divisum::sigma_table_sieve(max_n);
    if (format == Format::csv) std::cout << "n,sigma\n";
    for (Natural n = 1; n <= max_n; ++n) emit_row(std::cout, {n, table.at(n)}, format);
    return 0;
}

int run_classify(Natural n) {
    divisum::Classification c = divisum::classify(n);
    std::cout << divisum::to_string(c.kind) << ' ' << c.sigma << '\n';
    return 0;
}

int verify_table100() {
    const std::pair<const char*, divisum::SigmaTable> routes[] = {
        {"sieve", divisum::sigma_table_sieve(100)},
        {"recurrence", divisum::sigma_table_recurrence(100)},
        {"factorized", divisum::sigma_table_factorized(100)},
    };
    for (const auto& [name, table] : routes)
        for (Natural n = 1; n <= 100; ++n)
            if (table.at(n) != divisum::kSigmaReference100[n - 1]) {
                std::cout << "table100: FAIL (" << name << " at n=" << n << ": got "
                          << table.at(n) << ", reference " << divisum::kSigmaReference100[n - 1]
                          << ")\n";
                return 1;
            }
    std::cout << "table100: pass (100/100 entries match on all three routes)\n";
    return 0;
}

int verify_pentagonal(Natural order) {
    divisum::IntSeries product = divisum::euler_product(order);
    divisum::IntSeries series = divisum::pentagonal_series(order);
    for (Natural i = 0; i <= order; ++i)
        if (product.coeff(i) != series.coeff(i)) {
            std::cout << "pentagonal: FAIL (coefficient of x^" << i << ": expanded product "
                      << product.coeff(i) << ", pentagonal series " << series.coeff(i) << ")\n";
            return 1;
        }
    for (Natural i = 1; i <= order; ++i) {
        auto j = divisum::is_gpent(i);
        std::int64_t expected = j ? ((*j % 2 == 0) ? 1 : -1) : 0;
        if (product.coeff(i) != expected) {
            std::cout << "pentagonal: FAIL (coefficient of x^" << i << " should be " << expected
                      << ", got " << product.coeff(i) << ")\n";
            return 1;
        }
    }
    std::cout << "pentagonal: pass (order " << order << ")\n";
    return 0;
}

int verify_sigma_equivalence(Natural order) {
    divisum::IntSeries quotient = divisum::log_derivative_sigma(order);
    divisum::IntSeries lambert = divisum::lambert_sigma(order);
    std::optional<divisum::SigmaTable> sieve;
    if (order >= 1) sieve = divisum::sigma_table_sieve(order);
    for (Natural n = 1; n <= order; ++n) {
        std::int64_t q = quotient.coeff(n);
        if (q != lambert.coeff(n)) {
            std::cout << "sigma-equivalence: FAIL (x^" << n << ": quotient " << q << ", Lambert "
                      << lambert.coeff(n) << ")\n";
            return 1;
        }
        if (q < 0 || static_cast<Natural>(q) != sieve->at(n)) {
            std::cout << "sigma-equivalence: FAIL (x^" << n << ": series " << q << ", sieve "
                      << sieve->at(n) << ")\n";
            return 1;
        }
    }
    std::cout << "sigma-equivalence: pass (order " << order << ")\n";
    return 0;
}

int verify_cancellation(Natural order) {
    divisum::IntSeries lhs = divisum::series_mul(divisum::lambert_sigma(order),
                                                 divisum::pentagonal_series(order), order);
    divisum::IntSeries rhs = divisum::pentagonal_numerator(order);
    for (Natural i = 0; i <= order; ++i)
        if (lhs.coeff(i) != rhs.coeff(i)) {
            std::cout << "cancellation: FAIL (x^" << i << ": product " << lhs.coeff(i)
                      << ", numerator " << rhs.coeff(i) << ")\n";
            return 1;
        }
    std::cout << "cancellation: pass (order " << order << ")\n";
    return 0;
}

int run_verify(const std::string& check, std::optional<Natural> order) {
    if (check == "table100") return verify_table100();
    if (check == "pentagonal") return verify_pentagonal(order.value_or(500));
    if (check == "sigma-equivalence") return verify_sigma_equivalence(order.value_or(2000));
    return verify_cancellation(order.value_or(500));
}

divisum::SigmaTable build_table(const std::string& method, Natural max_n) {
    if (method == "sieve") return divisum::sigma_table_sieve(max_n);
    if (method == "recurrence") return divisum::sigma_table_recurrence(max_n);
    return divisum::sigma_table_factorized(max_n);
}

// Sum of all table values modulo 2^64.
Natural table_checksum(const divisum::SigmaTable& table) {
    Natural sum = 0;
    for (Natural v : table.values) sum += v;
    return sum;
}

int run_bench(Natural max_n, std::vector<std::string> methods, unsigned repeat) {
    // drop duplicates, keep first-seen order
    std::vector<std::string> unique;
    for (auto& m : methods)
        if (std::find(unique.begin(), unique.end(), m) == unique.end())
            unique.push_back(std::move(m));

    // correctness cross-check before any timing
    std::vector<std::pair<std::string, Natural>> checksums;
    {
        std::optional<divisum::SigmaTable> baseline;
        for (const auto& name : unique) {
            divisum::SigmaTable table = build_table(name, max_n);
            if (!baseline) {
                baseline = std::move(table);
                checksums.emplace_back(name, table_checksum(*baseline));
                continue;
            }
            for (Natural n = 1; n <= max_n; ++n)
                if (table.at(n) != baseline->at(n)) {
                    std::cerr << "bench: " << name << " disagrees with " << unique.front()
                              << " at n=" << n << " (" << table.at(n) << " vs "
                              << baseline->at(n) << ")\n";
                    return 1;
                }
            checksums.emplace_back(name, table_checksum(table));
        }
    }

    std::cout << "method,max,repeat,best_seconds,checksum\n";
    for (const auto& [name, checksum] : checksums) {
        double best = std::numeric_limits<double>::infinity();
        for (unsigned r = 0; r < repeat; ++r) {
            auto start = std::chrono::steady_clock::now();
            divisum::SigmaTable rebuilt = build_table(name, max_n);
            auto stop = std::chrono::steady_clock::now();
            if (table_checksum(rebuilt) != checksum) {
                std::cerr << "bench: " << name << " produced an unstable checksum\n";
                return 1;
            }
            best = std::min(best, std::chrono::duration<double>(stop - start).count());
        }
        char line[160];
        std::snprintf(line, sizeof line, "%s,%llu,%u,%.6f,%llu", name.c_str(),
                      static_cast<unsigned long long>(max_n), repeat, best,
                      static_cast<unsigned long long>(checksum));
        std::cout << line << '\n';
    }
    return 0;
}

int run_amicable(Natural max_n) {
    if (max_n < 2) throw std::domain_error("amicable: --max must be >= 2");
    divisum::SigmaTable table = divisum::sigma_table_sieve(max_n);
    for (Natural m = 2; m <= max_n; ++m) {
        Natural s = table.at(m);
        if (s <= 2 * m) continue;  // partner s - m must exceed m
        Natural partner = s - m;
        if (partner <= max_n && table.at(partner) == s)
            std::cout << m << ',' << partner << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);

    CLI::App app{"sum-of-divisors toolkit: sigma(n) by factorization, trial division,"
                 " the pentagonal recurrence, and power-series identities"};
    app.require_subcommand(1);

    Natural sigma_n = 0;
    std::string sigma_method = "factor";
    bool sigma_explain = false;
    CLI::App* cmd_sigma = app.add_subcommand("sigma", "compute sigma(n)");
    cmd_sigma->add_option("n", sigma_n, "number whose divisors are summed (>= 1)")->required();
    cmd_sigma->add_option("--method", sigma_method, "algorithm")
        ->check(CLI::IsMember({"factor", "trial", "recurrence"}))
        ->capture_default_str();
    cmd_sigma->add_flag("--explain", sigma_explain,
                        "with --method recurrence, print every recurrence term");

    Natural table_n = 0;
    std::string table_method = "sieve";
    std::string table_format = "text";
    CLI::App* cmd_table = app.add_subcommand("table", "emit sigma(1..N)");
    cmd_table->add_option("N", table_n, "table size (>= 1)")->required();
    cmd_table->add_option("--method", table_method, "algorithm")
        ->check(CLI::IsMember({"sieve", "recurrence"}))
        ->capture_default_str();
    cmd_table->add_option("--format", table_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();

    Natural classify_n = 0;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "unit/prime/perfect/abundant/deficient");
    cmd_classify->add_option("n", classify_n, "number to classify (>= 1)")->required();

    std::string verify_check;
    std::optional<Natural> verify_order;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a named cross-check");
    cmd_verify->add_option("--check", verify_check, "which cross-check to run")
        ->check(CLI::IsMember({"table100", "pentagonal", "sigma-equivalence", "cancellation"}))
        ->required();
    cmd_verify->add_option("--order", verify_order,
                           "truncation order (defaults: pentagonal/cancellation 500,"
                           " sigma-equivalence 2000)");

    Natural bench_max = 0;
    std::vector<std::string> bench_methods = {"sieve", "recurrence", "factor"};
    unsigned bench_repeat = 3;
    CLI::App* cmd_bench = app.add_subcommand("bench", "time the table-building algorithms");
    cmd_bench->add_option("--max", bench_max, "table size to build (>= 1)")->required();
    cmd_bench->add_option("--methods", bench_methods, "comma-separated list")
        ->delimiter(',')
        ->check(CLI::IsMember({"sieve", "recurrence", "factor"}));
    cmd_bench->add_option("--repeat", bench_repeat, "timed runs per method, best wins")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    Natural amicable_max = 0;
    CLI::App* cmd_amicable =
        app.add_subcommand("amicable", "list amicable pairs (m,n) with m < n <= N");
    cmd_amicable->add_option("--max", amicable_max, "search bound (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_sigma->parsed()) return run_sigma(sigma_n, sigma_method, sigma_explain);
        if (cmd_table->parsed())
            return run_table(table_n, table_method,
                             table_format == "json"  ? Format::json
                             : table_format == "csv" ? Format::csv
                                                     : Format::text);
        if (cmd_classify->parsed()) return run_classify(classify_n);
        if (cmd_verify->parsed()) return run_verify(verify_check, verify_order);
        if (cmd_bench->parsed()) return run_bench(bench_max, bench_methods, bench_repeat);
        if (cmd_amicable->parsed()) return run_amicable(amicable_max);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::length_error&) {
        std::cerr << "error: table capacity exhausted\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 3;
    }
    return 0;
}
