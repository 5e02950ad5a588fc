#pragma once

#include <array>

#include "vpipe/backend.hpp"

namespace vpipe {

// Fixed class-color palette; class ids index it modulo 8.
inline constexpr std::array<Pixel, 8> kOverlayPalette = {{
    {255, 0, 0},      // 0 red
    {0, 255, 0},      // 1 green
    {0, 0, 255},      // 2 blue
    {255, 255, 0},    // 3 yellow
    {255, 0, 255},    // 4 magenta
    {0, 255, 255},    // 5 cyan
    {255, 255, 255},  // 6 white
    {255, 165, 0},    // 7 orange
}};

inline constexpr uint32_t kBadgeSize = 16;
inline constexpr uint32_t kBoxBorder = 2;

// Renders a prediction onto a copy of the frame. Class scores become a 16x16
// solid badge at (0,0) colored by argmax; detections become 2-pixel-thick
// rectangle borders colored by class id. Geometry is clipped to the frame and
// every pixel outside it is left untouched.
Frame overlay(const Frame& f, const Prediction& p);

}  // namespace vpipe
