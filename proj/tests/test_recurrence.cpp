#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "divisum/divisors.hpp"
#include "divisum/pentagonal.hpp"
#include "divisum/recurrence.hpp"

using divisum::explain;
using divisum::Natural;
using divisum::RecurrenceTrace;
using divisum::sigma_next;
using divisum::sigma_table_recurrence;
using divisum::sigma_table_sieve;
using divisum::TermKind;
using divisum::TraceTerm;

namespace {

constexpr TermKind prior = TermKind::prior_sigma;
constexpr TermKind self = TermKind::self_substitution;

// The worked equalities for n = 1..12, term for term:
//   sigma(1)  = 1
//   sigma(2)  = sigma(1) + 2
//   sigma(3)  = sigma(2) + sigma(1)
//   ...
//   sigma(12) = sigma(11) + sigma(10) - sigma(7) - sigma(5) + 12
const std::vector<std::vector<TraceTerm>> kWorkedTraces = {
    /* 1*/ {{1, +1, 1, self}},
    /* 2*/ {{1, +1, 1, prior}, {2, +1, 2, self}},
    /* 3*/ {{1, +1, 3, prior}, {2, +1, 1, prior}},
    /* 4*/ {{1, +1, 4, prior}, {2, +1, 3, prior}},
    /* 5*/ {{1, +1, 7, prior}, {2, +1, 4, prior}, {5, -1, 5, self}},
    /* 6*/ {{1, +1, 6, prior}, {2, +1, 7, prior}, {5, -1, 1, prior}},
    /* 7*/ {{1, +1, 12, prior}, {2, +1, 6, prior}, {5, -1, 3, prior}, {7, -1, 7, self}},
    /* 8*/ {{1, +1, 8, prior}, {2, +1, 12, prior}, {5, -1, 4, prior}, {7, -1, 1, prior}},
    /* 9*/ {{1, +1, 15, prior}, {2, +1, 8, prior}, {5, -1, 7, prior}, {7, -1, 3, prior}},
    /*10*/ {{1, +1, 13, prior}, {2, +1, 15, prior}, {5, -1, 6, prior}, {7, -1, 4, prior}},
    /*11*/ {{1, +1, 18, prior}, {2, +1, 13, prior}, {5, -1, 12, prior}, {7, -1, 7, prior}},
    /*12*/ {{1, +1, 12, prior}, {2, +1, 18, prior}, {5, -1, 8, prior}, {7, -1, 6, prior},
            {12, +1, 12, self}},
};

constexpr Natural kWorkedSigmas[12] = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};

}  // namespace

TEST_CASE("worked traces for n = 1..12, term for term") {
    for (Natural n = 1; n <= 12; ++n) {
        RecurrenceTrace trace = explain(n);
        CHECK(trace.n == n);
        CHECK(trace.terms == kWorkedTraces[n - 1]);
        CHECK(trace.total() == kWorkedSigmas[n - 1]);
    }
}

TEST_CASE("worked trace for n = 21") {
    // sigma(21) = 42 + 20 - 31 - 24 + 13 + 12 = 87 - 55 = 32
    RecurrenceTrace trace = explain(21);
    CHECK(trace.terms == std::vector<TraceTerm>{{1, +1, 42, prior},
                                                {2, +1, 20, prior},
                                                {5, -1, 31, prior},
                                                {7, -1, 24, prior},
                                                {12, +1, 13, prior},
                                                {15, +1, 12, prior}});
    CHECK(trace.positive_sum() == 87);
    CHECK(trace.negative_sum() == 55);
    CHECK(trace.total() == 32);
}

TEST_CASE("worked trace for n = 22 keeps the sign on the self term") {
    // sigma(22) = 32 + 42 - 18 - 24 + 18 + 8 - 22 = 100 - 64 = 36
    RecurrenceTrace trace = explain(22);
    CHECK(trace.terms == std::vector<TraceTerm>{{1, +1, 32, prior},
                                                {2, +1, 42, prior},
                                                {5, -1, 18, prior},
                                                {7, -1, 24, prior},
                                                {12, +1, 18, prior},
                                                {15, +1, 8, prior},
                                                {22, -1, 22, self}});
    CHECK(trace.positive_sum() == 100);
    CHECK(trace.negative_sum() == 64);
    CHECK(trace.total() == 36);
}

TEST_CASE("n = 101 splits into +893 - 791 = 102") {
    RecurrenceTrace trace = explain(101);
    REQUIRE(trace.terms.size() == 16);
    CHECK(trace.positive_sum() == 893);
    CHECK(trace.negative_sum() == 791);
    CHECK(trace.total() == 102);
}

TEST_CASE("sigma_next consumes a caller-supplied prefix") {
    auto prefix = sigma_table_sieve(11);
    auto [value, trace] = sigma_next(prefix, 12);
    CHECK(value == 28);
    CHECK(trace.terms == kWorkedTraces[11]);

    // a longer prefix is fine too
    auto longer = sigma_table_sieve(50);
    CHECK(sigma_next(longer, 12).first == 28);

    // n = 1 needs no prior values at all
    divisum::SigmaTable empty{divisum::SigmaMethod::sieve, {}};
    CHECK(sigma_next(empty, 1).first == 1);
    CHECK_THROWS_AS(sigma_next(sigma_table_sieve(5), 12), std::invalid_argument);
    CHECK_THROWS_AS(sigma_next(prefix, 0), std::domain_error);
}

TEST_CASE("recurrence table equals the sieve table") {
    CHECK(sigma_table_recurrence(12).values ==
          std::vector<Natural>{1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28});
    CHECK(sigma_table_recurrence(1).values == std::vector<Natural>{1});
    CHECK_THROWS_AS(sigma_table_recurrence(0), std::domain_error);

    auto recurrence = sigma_table_recurrence(2000);
    auto sieve = sigma_table_sieve(2000);
    REQUIRE(recurrence.provenance == divisum::SigmaMethod::recurrence);
    CHECK(recurrence.values == sieve.values);
}

TEST_CASE("spot values up to 10000 match the sieve") {
    auto table = sigma_table_recurrence(10000);
    auto sieve = sigma_table_sieve(10000);
    for (Natural n : {1867, 4096, 6144, 9973, 10000}) {
        CHECK(table.at(n) == sieve.at(n));
        CHECK(explain(n).total() == sieve.at(n));
    }
}

TEST_CASE("trace length is exactly the number of pentagonal offsets <= n") {
    for (Natural n : {1, 2, 3, 7, 12, 13, 100, 101, 247, 1000}) {
        RecurrenceTrace trace = explain(n);
        CHECK(trace.terms.size() == divisum::gpent_sequence(n).size());
        // offsets are the pentagonal values themselves, in order
        auto seq = divisum::gpent_sequence(n);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            CHECK(trace.terms[i].offset == seq[i].value);
            CHECK(trace.terms[i].sign == seq[i].sign);
        }
    }
}

TEST_CASE("self-substitution appears exactly at pentagonal n, with matching sign") {
    for (Natural n = 1; n <= 300; ++n) {
        RecurrenceTrace trace = explain(n);
        auto j = divisum::is_gpent(n);
        std::size_t self_terms = 0;
        for (const auto& t : trace.terms)
            if (t.kind == self) {
                ++self_terms;
                REQUIRE(j.has_value());
                CHECK(t.offset == n);
                CHECK(t.contribution == n);
                CHECK(t.sign == (*j % 2 != 0 ? +1 : -1));
            }
        CHECK(self_terms == (j.has_value() ? 1u : 0u));
    }
}

TEST_CASE("recurrence alone detects primes: sigma(p) = p + 1") {
    auto table = sigma_table_recurrence(1000);
    // primes by trial division, composites must exceed n + 1
    for (Natural n = 2; n <= 1000; ++n) {
        bool prime = true;
        for (Natural d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime)
            CHECK(table.at(n) == n + 1);
        else
            CHECK(table.at(n) > n + 1);
    }
}
