#pragma once

#include "vpipe/frame.hpp"

namespace vpipe {

// Nearest-neighbor resize: output (x, y) samples input
// (floor(x*in_w/out_w), floor(y*in_h/out_h)). Identity when sizes match.
Frame resize_nearest(const Frame& f, uint32_t out_w, uint32_t out_h);

}  // namespace vpipe
