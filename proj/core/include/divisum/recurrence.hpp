#pragma once

#include <utility>
#include <vector>

#include "divisum/natural.hpp"
#include "divisum/sigma_table.hpp"

namespace divisum {

// The pentagonal recurrence:
//
//   sigma(n) = sigma(n-1) + sigma(n-2) - sigma(n-5) - sigma(n-7)
//            + sigma(n-12) + sigma(n-15) - ...
//
// Offsets are the generalized pentagonal numbers, signs run + + - -.
// Terms whose argument would go negative are dropped; when the argument
// hits zero (n itself is generalized pentagonal), the number n is taken
// in place of that term, keeping the term's sign.

enum class TermKind { prior_sigma, self_substitution };

struct TraceTerm {
    Natural offset;        // generalized pentagonal number subtracted from n
    int sign;              // +1 or -1
    Natural contribution;  // sigma(n - offset), or n for the zero-argument term
    TermKind kind;
    bool operator==(const TraceTerm&) const = default;
};

// Every term the recurrence used at n, in increasing offset order.
// The signed sum of contributions equals sigma(n).
struct RecurrenceTrace {
    Natural n = 0;
    std::vector<TraceTerm> terms;

    Natural positive_sum() const;
    Natural negative_sum() const;
    Natural total() const;  // positive_sum - negative_sum == sigma(n)
};

/// One recurrence step. prefix must hold correct sigma(1..n-1) (longer is
/// fine); throws std::invalid_argument when it is too short.
std::pair<Natural, RecurrenceTrace> sigma_next(const SigmaTable& prefix, Natural n);

/// Full table via repeated sigma_next steps; provenance = recurrence.
/// O(N^1.5) additions overall.
SigmaTable sigma_table_recurrence(Natural max_n);

/// The trace sigma_next would produce at n, with the prefix built internally.
RecurrenceTrace explain(Natural n);

}  // namespace divisum
