#include "divisum/pentagonal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace divisum {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// Largest |j| whose pentagonal value can still fit 64 bits is about 3.5e9;
// anything past 4e9 overflows for certain.
constexpr std::int64_t kIndexBound = 4'000'000'000;

i128 gpent_wide(std::int64_t j) {
    return (i128{3} * j - 1) * j / 2;
}

u128 isqrt(u128 s) {
    auto r = static_cast<u128>(sqrtl(static_cast<long double>(s)));
    while (r > 0 && r * r > s) --r;
    while ((r + 1) * (r + 1) <= s) ++r;
    return r;
}

}  // namespace

Natural gpent(std::int64_t j) {
    if (j == 0) throw std::domain_error("gpent: index must be nonzero");
    if (j > kIndexBound || j < -kIndexBound)
        throw std::overflow_error("gpent: value does not fit a Natural");
    i128 v = gpent_wide(j);
    if (v > i128{std::numeric_limits<Natural>::max()})
        throw std::overflow_error("gpent: value does not fit a Natural");
    return static_cast<Natural>(v);
}

std::vector<GPentTerm> gpent_sequence(Natural limit) {
    std::vector<GPentTerm> terms;
    for (std::int64_t k = 1; k <= kIndexBound; ++k) {
        int sign = (k % 2 != 0) ? +1 : -1;
        // gpent(k) < gpent(-k) < gpent(k+1), so values stay strictly increasing
        i128 forward = gpent_wide(k);
        if (forward > i128{limit}) break;
        terms.push_back({k, static_cast<Natural>(forward), sign});
        i128 backward = gpent_wide(-k);
        if (backward > i128{limit}) break;
        terms.push_back({-k, static_cast<Natural>(backward), sign});
    }
    return terms;
}

std::optional<std::int64_t> is_gpent(Natural n) {
    if (n == 0) return std::nullopt;
    u128 s = u128{24} * n + 1;
    u128 r = isqrt(s);
    if (r * r != s) return std::nullopt;
    // r = |6j - 1|: residue 5 mod 6 means j > 0, residue 1 means j < 0
    if (r % 6 == 5) return static_cast<std::int64_t>((r + 1) / 6);
    if (r % 6 == 1) return -static_cast<std::int64_t>((r - 1) / 6);
    return std::nullopt;
}

}  // namespace divisum
