#include "treeinv/rng.hpp"

#include <limits>

#include "treeinv/errors.hpp"

namespace treeinv {

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
    if (n == 0) {
        throw OutOfRangeError("uniform_below: empty range");
    }
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = kMax - kMax % n;
    std::uint64_t x;
    do {
        x = engine();
    } while (x >= limit);
    return x % n;
}

}  // namespace treeinv
