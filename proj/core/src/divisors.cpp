#include "divisum/divisors.hpp"

#include <limits>
#include <string>

namespace divisum {

namespace {

void require_positive(Natural n, const char* where) {
    if (n == 0)
        throw std::domain_error(std::string(where) + ": argument must be >= 1");
}

}  // namespace

Factorization factorize(Natural n) {
    require_positive(n, "factorize");
    Factorization f;
    f.subject = n;
    auto strip = [&](Natural p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (Natural p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});  // remaining cofactor is prime
    return f;
}

Natural sigma_factored(const Factorization& f) {
    using u128 = unsigned __int128;
    constexpr u128 u128_max = ~u128{0};
    Natural result = 1;
    for (const auto& pp : f.factors) {
        u128 power = 1;  // p^(e+1); fits 128 bits whenever p^e fits 64
        for (unsigned i = 0; i <= pp.exponent; ++i) {
            if (power > u128_max / pp.prime)
                throw std::overflow_error("sigma_factored: prime power too large");
            power *= pp.prime;
        }
        u128 geometric = (power - 1) / (pp.prime - 1);
        if ((power - 1) % (pp.prime - 1) != 0)
            throw std::logic_error("sigma_factored: inexact geometric division");
        if (geometric > std::numeric_limits<Natural>::max())
            throw std::overflow_error("sigma_factored: sigma of prime power too large");
        result = checked_mul(result, static_cast<Natural>(geometric));
    }
    return result;
}

Natural sigma_trial(Natural n) {
    require_positive(n, "sigma_trial");
    Natural sum = 0;
    for (Natural d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        sum = checked_add(sum, d);
        if (Natural q = n / d; q != d) sum = checked_add(sum, q);
    }
    return sum;
}

std::vector<Natural> divisors(Natural n) {
    require_positive(n, "divisors");
    std::vector<Natural> low, high;
    for (Natural d = 1; d <= n / d; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (Natural q = n / d; q != d) high.push_back(q);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Classification classify(Natural n) {
    Natural s = sigma_factored(factorize(n));
    if (n == 1) return {NumberKind::unit, s};
    if (s == n + 1) return {NumberKind::prime, s};
    // 2n does not fit: sigma(n) < 2^64 <= 2n, so n can only be deficient.
    if (n > std::numeric_limits<Natural>::max() / 2)
        return {NumberKind::deficient, s};
    Natural twice = 2 * n;
    if (s == twice) return {NumberKind::perfect, s};
    if (s > twice) return {NumberKind::abundant, s};
    return {NumberKind::deficient, s};
}

bool is_amicable_pair(Natural m, Natural n) {
    if (m == n) return false;
    Natural sm = sigma_factored(factorize(m));
    Natural sn = sigma_factored(factorize(n));
    return sm == sn && sm == checked_add(m, n);
}

SigmaTable sigma_table_sieve(Natural max_n) {
    require_positive(max_n, "sigma_table_sieve");
    SigmaTable table{SigmaMethod::sieve, {}};
    table.values.assign(static_cast<std::size_t>(max_n), 0);
    for (Natural d = 1; d <= max_n; ++d)
        for (Natural m = d; m <= max_n; m += d)
            table.values[m - 1] = checked_add(table.values[m - 1], d);
    return table;
}

SigmaTable sigma_table_factorized(Natural max_n) {
    require_positive(max_n, "sigma_table_factorized");
    SigmaTable table{SigmaMethod::factorized, {}};
    table.values.reserve(static_cast<std::size_t>(max_n));
    for (Natural n = 1; n <= max_n; ++n)
        table.values.push_back(sigma_factored(factorize(n)));
    return table;
}

}  // namespace divisum
