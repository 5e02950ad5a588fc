#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "vpipe/errors.hpp"

namespace vpipe {

// Dimension registers are 12 bits wide, so a frame side never exceeds 4095.
inline constexpr uint32_t kMaxDim = 4095;

struct Pixel {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Integer BT.601-style luma: (77*r + 150*g + 29*b) >> 8.
// Coefficients sum to 256, so gray pixels map to their own value exactly.
inline uint8_t luma(Pixel p) {
    return static_cast<uint8_t>((77u * p.r + 150u * p.g + 29u * p.b) >> 8);
}

// Owned RGB24 raster. Equality is content equality (dimensions + pixels);
// index and capture_time are transport metadata.
struct Frame {
    uint32_t width = 0;
    uint32_t height = 0;
    std::vector<Pixel> pixels;
    uint64_t index = 0;
    std::chrono::system_clock::time_point capture_time{};

    Pixel& at(uint32_t x, uint32_t y) { return pixels[static_cast<size_t>(y) * width + x]; }
    const Pixel& at(uint32_t x, uint32_t y) const {
        return pixels[static_cast<size_t>(y) * width + x];
    }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    friend bool operator==(const Frame& a, const Frame& b) {
        return a.width == b.width && a.height == b.height && a.pixels == b.pixels;
    }
};

inline Frame new_frame(uint32_t width, uint32_t height, Pixel fill = {}) {
    if (width < 1 || width > kMaxDim || height < 1 || height > kMaxDim) {
        throw DimensionError("frame dimensions must be in [1, 4095], got " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
    Frame f;
    f.width = width;
    f.height = height;
    f.pixels.assign(static_cast<size_t>(width) * height, fill);
    f.capture_time = std::chrono::system_clock::now();
    return f;
}

}  // namespace vpipe
