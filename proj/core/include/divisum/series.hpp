#pragma once

#include <cstdint>
#include <vector>

#include "divisum/natural.hpp"

namespace divisum {

// Truncated formal power series with exact signed 64-bit coefficients.
// Truncation is explicit everywhere: an operation at order N produces
// coefficients c_0..c_N and nothing else. Coefficient arithmetic is checked;
// convolutions accumulate with 128-bit headroom before narrowing.
struct IntSeries {
    std::vector<std::int64_t> coeffs;  // coeffs[i] is the coefficient of x^i

    static IntSeries zero(Natural order) {
        return {std::vector<std::int64_t>(static_cast<std::size_t>(order) + 1, 0)};
    }

    Natural order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    // Coefficient of x^i, reading past the stored order as zero.
    std::int64_t coeff(Natural i) const {
        return i < coeffs.size() ? coeffs[static_cast<std::size_t>(i)] : 0;
    }

    bool operator==(const IntSeries&) const = default;
};

/// Truncated Cauchy product: c_k = sum a_i * b_(k-i) for k <= order.
IntSeries series_mul(const IntSeries& a, const IntSeries& b, Natural order);

/// q with series_mul(q, den, order) == num up to the given order, via the
/// forward recurrence q_n = (num_n - sum den_k * q_(n-k)) / den_0. Requires
/// den_0 = +1 or -1 (std::domain_error otherwise), which keeps every
/// coefficient exact.
IntSeries series_div(const IntSeries& num, const IntSeries& den, Natural order);

/// prod_(k=1..order) (1 - x^k) truncated at the given order. Factors beyond
/// the order cannot touch the kept coefficients. Expanded coefficients all
/// land in {-1, 0, +1}.
IntSeries euler_product(Natural order);

/// 1 - x - x^2 + x^5 + x^7 - x^12 - x^15 + ...: coefficient at each
/// generalized pentagonal index j(3j-1)/2 is (-1)^j, all others zero.
/// Equals euler_product at every order (the pentagonal number theorem).
IntSeries pentagonal_series(Natural order);

/// x + 2x^2 - 5x^5 - 7x^7 + 12x^12 + 15x^15 - ...: each generalized
/// pentagonal value v carries coefficient v with the recurrence sign.
/// This is -x times the derivative of pentagonal_series.
IntSeries pentagonal_numerator(Natural order);

/// -x s'/s for s = prod (1 - x^k), computed as pentagonal_numerator over
/// pentagonal_series. The coefficient of x^n is sigma(n).
IntSeries log_derivative_sigma(Natural order);

/// sum_(k>=1) k x^k / (1 - x^k) by geometric-progression rearrangement:
/// k is added at every index k, 2k, 3k, ... The coefficient of x^n is
/// sigma(n), built without any division.
IntSeries lambert_sigma(Natural order);

/// True iff lambert_sigma * pentagonal_series == pentagonal_numerator up to
/// the given order: the coefficient matching that yields the recurrence.
bool coefficient_cancellation_check(Natural order);

}  // namespace divisum
