#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divisum/natural.hpp"

namespace divisum {

// One generalized pentagonal number j(3j-1)/2 for nonzero signed index j,
// carrying the sign it contributes to the sigma recurrence: +1 when |j| is
// odd, -1 when |j| is even. Sorted by value the signs read + + - - + + - -.
struct GPentTerm {
    std::int64_t index;
    Natural value;
    int sign;
    bool operator==(const GPentTerm&) const = default;
};

/// j(3j-1)/2. Throws std::domain_error for j = 0, std::overflow_error when
/// the value does not fit a Natural.
Natural gpent(std::int64_t j);

/// All terms with value <= limit in strictly increasing value order,
/// i.e. index order 1, -1, 2, -2, 3, -3, ...
std::vector<GPentTerm> gpent_sequence(Natural limit);

/// The unique index j with gpent(j) = n, or nullopt when n is not a
/// generalized pentagonal number. O(1): tests whether 24n + 1 is a
/// perfect square with the right residue mod 6.
std::optional<std::int64_t> is_gpent(Natural n);

}  // namespace divisum
