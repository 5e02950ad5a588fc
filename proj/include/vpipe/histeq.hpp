#pragma once

#include <array>
#include <cstdint>

#include "vpipe/frame.hpp"

namespace vpipe {

// 256-bin luma (or single-channel) occurrence counts. Bins sum to the pixel
// count of the source frame.
struct Histogram {
    std::array<uint64_t, 256> bins{};

    uint64_t total() const {
        uint64_t sum = 0;
        for (uint64_t b : bins) sum += b;
        return sum;
    }
};

// Intensity remap table; monotone non-decreasing by construction.
struct Lut {
    std::array<uint8_t, 256> map{};

    static Lut identity() {
        Lut l;
        for (int i = 0; i < 256; ++i) l.map[i] = static_cast<uint8_t>(i);
        return l;
    }

    uint8_t operator[](uint8_t v) const { return map[v]; }

    friend bool operator==(const Lut&, const Lut&) = default;
};

enum class ColorMode {
    kLumaGain,    // equalize luma, scale RGB by the per-pixel gain
    kPerChannel,  // equalize each channel through its own LUT
};

enum class TimingMode {
    kTwoPass,       // whole frame buffered; its own histogram drives its LUT
    kFrameDelayed,  // frame N's histogram drives the LUT applied to frame N+1
};

struct HistEqConfig {
    uint32_t rows = 0;  // frame height
    uint32_t cols = 0;  // frame width
    ColorMode color_mode = ColorMode::kLumaGain;
    TimingMode timing_mode = TimingMode::kFrameDelayed;
};

Histogram compute_histogram(const Frame& f);

// Classic CDF-min normalized equalization map:
//   LUT[v] = round_half_away(255 * (cdf(v) - cdf_min) / (n - cdf_min))
// for occupied-or-later v, 0 below the first occupied bin, and the identity
// map when the histogram is degenerate (cdf_min == n, i.e. a single level).
// `n` must equal the bin sum.
Lut build_lut(const Histogram& h, uint64_t n);

// kLumaGain: y' = LUT[luma(p)]; channels scaled by y'/y (LUT value on all
// channels when y == 0). kPerChannel: each channel mapped through a LUT built
// from that channel's histogram; the `l` argument is ignored.
Frame apply_lut(const Frame& f, const Lut& l, ColorMode mode);

// Two-pass (batch) equalization of a single frame.
Frame equalize(const Frame& f, const HistEqConfig& cfg);

}  // namespace vpipe
