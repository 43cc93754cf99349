#pragma once

#include <vector>

#include "divisum/natural.hpp"
#include "divisum/sigma_table.hpp"

namespace divisum {

struct PrimePower {
    Natural prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

// n written as a product of prime powers, primes strictly increasing.
// The factorization of 1 is the empty list.
struct Factorization {
    Natural subject = 1;
    std::vector<PrimePower> factors;
};

enum class NumberKind { unit, prime, perfect, abundant, deficient };

constexpr const char* to_string(NumberKind k) {
    switch (k) {
        case NumberKind::unit: return "unit";
        case NumberKind::prime: return "prime";
        case NumberKind::perfect: return "perfect";
        case NumberKind::abundant: return "abundant";
        case NumberKind::deficient: return "deficient";
    }
    return "unknown";
}

struct Classification {
    NumberKind kind;
    Natural sigma;
};

/// Deterministic trial division by 2, 3, then 6k+-1 up to sqrt(n).
/// Throws std::domain_error for n = 0.
Factorization factorize(Natural n);

/// sigma via the closed form prod (p^(e+1) - 1) / (p - 1) over the prime
/// powers. Exact integer arithmetic with 128-bit headroom for the power;
/// exactness of the division is checked.
Natural sigma_factored(const Factorization& f);

/// sigma by direct divisor enumeration up to sqrt(n). This is the oracle
/// every other sigma implementation is tested against.
Natural sigma_trial(Natural n);

/// All divisors of n in strictly increasing order; begins with 1, ends with n.
std::vector<Natural> divisors(Natural n);

/// unit / prime / perfect / abundant / deficient, plus sigma(n).
Classification classify(Natural n);

/// True iff sigma(m) = sigma(n) = m + n with m != n.
bool is_amicable_pair(Natural m, Natural n);

/// Divisor-summation sieve: adds d to every multiple of d. O(N log N) adds.
SigmaTable sigma_table_sieve(Natural max_n);

/// Table built by factorizing each n independently.
SigmaTable sigma_table_factorized(Natural max_n);

}  // namespace divisum
