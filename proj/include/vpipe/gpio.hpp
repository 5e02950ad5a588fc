#pragma once

#include <cstdint>
#include <tuple>

#include "vpipe/errors.hpp"

namespace vpipe {

// 32-bit configuration register for the enhancement core.
// Bit layout: [11:0] rows, [23:12] cols, [24] reset, [31:25] unused (zero).
struct GpioWord {
    uint32_t raw = 0;

    static constexpr uint32_t kFieldMask = 0xFFFu;
    static constexpr uint32_t kResetBit = 1u << 24;

    uint32_t rows() const { return raw & kFieldMask; }
    uint32_t cols() const { return (raw >> 12) & kFieldMask; }
    bool reset() const { return (raw & kResetBit) != 0; }

    friend bool operator==(const GpioWord&, const GpioWord&) = default;
};

inline GpioWord pack_gpio(uint32_t rows, uint32_t cols, bool reset) {
    if (rows > GpioWord::kFieldMask || cols > GpioWord::kFieldMask) {
        throw RangeError("gpio fields must fit in 12 bits");
    }
    return GpioWord{rows | (cols << 12) | (reset ? GpioWord::kResetBit : 0u)};
}

// Unused high bits are ignored on unpack.
inline std::tuple<uint32_t, uint32_t, bool> unpack_gpio(GpioWord w) {
    return {w.rows(), w.cols(), w.reset()};
}

}  // namespace vpipe
