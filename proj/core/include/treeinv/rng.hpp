#pragma once

#include <cstdint>
#include <random>

namespace treeinv {

/// Uniform draw from [0, n) by rejection sampling on raw engine output.
/// std::uniform_int_distribution is implementation-defined, which would
/// break byte-identical reproducibility across standard libraries; the
/// mt19937_64 stream itself is pinned by the standard.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n);

}  // namespace treeinv
