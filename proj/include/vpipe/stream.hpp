#pragma once

#include <vector>

#include "vpipe/frame.hpp"

namespace vpipe {

// One beat of the pixel-at-a-time stream between stages: sof marks the first
// pixel of a frame, eol the last pixel of each row.
struct StreamToken {
    Pixel pixel;
    bool sof = false;
    bool eol = false;

    friend bool operator==(const StreamToken&, const StreamToken&) = default;
};

std::vector<StreamToken> tokenize(const Frame& f);

// Rebuilds a frame from exactly width*height tokens; flags must be
// consistent with the given geometry.
Frame detokenize(const std::vector<StreamToken>& tokens, uint32_t width, uint32_t height);

}  // namespace vpipe
