#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "divisum/natural.hpp"

namespace divisum {

enum class SigmaMethod { sieve, recurrence, factorized };

constexpr const char* to_string(SigmaMethod m) {
    switch (m) {
        case SigmaMethod::sieve: return "sieve";
        case SigmaMethod::recurrence: return "recurrence";
        case SigmaMethod::factorized: return "factorized";
    }
    return "unknown";
}

// Dense table of sigma(1..max_n), tagged with the algorithm that produced it.
// Immutable after construction; safe to share across threads.
struct SigmaTable {
    SigmaMethod provenance;
    std::vector<Natural> values;  // values[i] holds sigma(i + 1)

    Natural max_n() const { return values.size(); }

    Natural at(Natural n) const {
        if (n < 1 || n > values.size())
            throw std::out_of_range("SigmaTable::at: n outside 1..max_n");
        return values[static_cast<std::size_t>(n - 1)];
    }
};

}  // namespace divisum
