#include "divisum/recurrence.hpp"

#include <stdexcept>
#include <string>

#include "divisum/pentagonal.hpp"

namespace divisum {

namespace {

// Signed accumulation kept as two nonnegative partial sums, so no
// intermediate step can underflow; the positive part must win in the end.
struct SignedSums {
    Natural positive = 0;
    Natural negative = 0;

    void add(int sign, Natural value) {
        Natural& side = sign > 0 ? positive : negative;
        side = checked_add(side, value);
    }

    Natural settle(Natural n) const {
        if (negative > positive)
            throw std::logic_error("recurrence: negative total at n=" + std::to_string(n));
        return positive - negative;
    }
};

// values[i] holds sigma(i+1) for i < n-1. Walks the recurrence terms for n
// in increasing offset order and reports each to per_term.
template <typename PerTerm>
Natural recurrence_step(const std::vector<Natural>& values, Natural n,
                        const std::vector<GPentTerm>& offsets, PerTerm&& per_term) {
    SignedSums sums;
    for (const GPentTerm& g : offsets) {
        if (g.value > n) break;
        if (g.value < n) {
            Natural prior = values[static_cast<std::size_t>(n - g.value - 1)];
            sums.add(g.sign, prior);
            per_term(g, prior, TermKind::prior_sigma);
        } else {
            sums.add(g.sign, n);  // the zero-argument term becomes n itself
            per_term(g, n, TermKind::self_substitution);
        }
    }
    return sums.settle(n);
}

constexpr auto kDropTerm = [](const GPentTerm&, Natural, TermKind) {};

std::vector<Natural> recurrence_values(Natural max_n) {
    std::vector<Natural> values;
    if (max_n == 0) return values;
    values.reserve(static_cast<std::size_t>(max_n));
    const auto offsets = gpent_sequence(max_n);
    for (Natural n = 1; n <= max_n; ++n)
        values.push_back(recurrence_step(values, n, offsets, kDropTerm));
    return values;
}

std::pair<Natural, RecurrenceTrace> traced_step(const std::vector<Natural>& values, Natural n) {
    RecurrenceTrace trace{n, {}};
    const auto offsets = gpent_sequence(n);
    Natural total = recurrence_step(values, n, offsets,
                                    [&](const GPentTerm& g, Natural contribution, TermKind kind) {
                                        trace.terms.push_back({g.value, g.sign, contribution, kind});
                                    });
    return {total, std::move(trace)};
}

}  // namespace

Natural RecurrenceTrace::positive_sum() const {
    Natural sum = 0;
    for (const TraceTerm& t : terms)
        if (t.sign > 0) sum = checked_add(sum, t.contribution);
    return sum;
}

Natural RecurrenceTrace::negative_sum() const {
    Natural sum = 0;
    for (const TraceTerm& t : terms)
        if (t.sign < 0) sum = checked_add(sum, t.contribution);
    return sum;
}

Natural RecurrenceTrace::total() const {
    Natural pos = positive_sum();
    Natural neg = negative_sum();
    if (neg > pos)
        throw std::logic_error("RecurrenceTrace: negative total");
    return pos - neg;
}

std::pair<Natural, RecurrenceTrace> sigma_next(const SigmaTable& prefix, Natural n) {
    if (n == 0) throw std::domain_error("sigma_next: n must be >= 1");
    if (prefix.max_n() < n - 1)
        throw std::invalid_argument("sigma_next: prefix holds fewer than n-1 values");
    return traced_step(prefix.values, n);
}

SigmaTable sigma_table_recurrence(Natural max_n) {
    if (max_n == 0) throw std::domain_error("sigma_table_recurrence: max_n must be >= 1");
    return {SigmaMethod::recurrence, recurrence_values(max_n)};
}

RecurrenceTrace explain(Natural n) {
    if (n == 0) throw std::domain_error("explain: n must be >= 1");
    return traced_step(recurrence_values(n - 1), n).second;
}

}  // namespace divisum
