#pragma once

#include <cstdint>
#include <random>

namespace vpipe {

// Draws are pinned to mt19937 output + modulo so that a given seed produces
// identical bytes on every platform (std::uniform_int_distribution is
// implementation-defined and would break byte-exact regression data).
inline uint32_t uniform_u32(std::mt19937& rng, uint32_t lo, uint32_t hi) {
    return lo + rng() % (hi - lo + 1u);
}

}  // namespace vpipe
