#include "divisum/series.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "divisum/pentagonal.hpp"

namespace divisum {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 value, const char* where) {
    if (value > i128{std::numeric_limits<std::int64_t>::max()} ||
        value < i128{std::numeric_limits<std::int64_t>::min()})
        throw std::overflow_error(std::string(where) + ": coefficient does not fit");
    return static_cast<std::int64_t>(value);
}

}  // namespace

IntSeries series_mul(const IntSeries& a, const IntSeries& b, Natural order) {
    IntSeries c = IntSeries::zero(order);
    for (Natural k = 0; k <= order; ++k) {
        i128 acc = 0;
        for (Natural i = 0; i <= k; ++i)
            acc = checked_add(acc, i128{a.coeff(i)} * b.coeff(k - i));
        c.coeffs[static_cast<std::size_t>(k)] = narrow(acc, "series_mul");
    }
    return c;
}

IntSeries series_div(const IntSeries& num, const IntSeries& den, Natural order) {
    std::int64_t lead = den.coeff(0);
    if (lead != 1 && lead != -1)
        throw std::domain_error("series_div: denominator must start with +1 or -1");
    IntSeries q = IntSeries::zero(order);
    for (Natural n = 0; n <= order; ++n) {
        i128 acc = num.coeff(n);
        for (Natural k = 1; k <= n; ++k)
            acc = checked_sub(acc, i128{den.coeff(k)} * q.coeffs[static_cast<std::size_t>(n - k)]);
        q.coeffs[static_cast<std::size_t>(n)] = narrow(acc * lead, "series_div");
    }
    return q;
}

IntSeries euler_product(Natural order) {
    IntSeries s = IntSeries::zero(order);
    s.coeffs[0] = 1;
    for (Natural k = 1; k <= order; ++k) {
        // multiply by (1 - x^k) in place; descending i leaves c[i-k] untouched
        for (Natural i = order; i >= k; --i) {
            auto& ci = s.coeffs[static_cast<std::size_t>(i)];
            ci = checked_sub(ci, s.coeffs[static_cast<std::size_t>(i - k)]);
        }
    }
    for (std::int64_t c : s.coeffs)
        if (c < -1 || c > 1)
            throw std::logic_error("euler_product: coefficient outside {-1,0,1}");
    return s;
}

IntSeries pentagonal_series(Natural order) {
    IntSeries s = IntSeries::zero(order);
    s.coeffs[0] = 1;
    for (const GPentTerm& g : gpent_sequence(order))
        s.coeffs[static_cast<std::size_t>(g.value)] = -g.sign;
    return s;
}

IntSeries pentagonal_numerator(Natural order) {
    IntSeries s = IntSeries::zero(order);
    for (const GPentTerm& g : gpent_sequence(order)) {
        if (g.value > static_cast<Natural>(std::numeric_limits<std::int64_t>::max()))
            throw std::overflow_error("pentagonal_numerator: coefficient does not fit");
        s.coeffs[static_cast<std::size_t>(g.value)] =
            g.sign * static_cast<std::int64_t>(g.value);
    }
    return s;
}

IntSeries log_derivative_sigma(Natural order) {
    return series_div(pentagonal_numerator(order), pentagonal_series(order), order);
}

IntSeries lambert_sigma(Natural order) {
    IntSeries s = IntSeries::zero(order);
    for (Natural k = 1; k <= order; ++k) {
        std::int64_t kk = static_cast<std::int64_t>(k);
        for (Natural m = k; m <= order; m += k) {
            auto& cm = s.coeffs[static_cast<std::size_t>(m)];
            cm = checked_add(cm, kk);
        }
    }
    return s;
}

bool coefficient_cancellation_check(Natural order) {
    return series_mul(lambert_sigma(order), pentagonal_series(order), order) ==
           pentagonal_numerator(order);
}

}  // namespace divisum
