#pragma once

#include <vector>

#include "vpipe/gpio.hpp"
#include "vpipe/histeq.hpp"
#include "vpipe/stream.hpp"

namespace vpipe {

// Single-pixel transform used by the luma-gain path: y' = l[luma(p)], each
// channel scaled by y'/y (all channels take y' when y == 0).
Pixel apply_luma_gain(Pixel p, const Lut& l);

// Pixel-at-a-time enhancement core with the hardware register protocol:
// dimension changes are only accepted through a reset, and tokens pushed
// while in reset are a protocol violation.
//
// kFrameDelayed: each token is emitted immediately, transformed by the LUT
// built from the previous frame (identity right after reset release), while
// the current frame's histogram accumulates.
// kTwoPass: the frame is buffered internally; the final pixel triggers batch
// equalization and the whole output frame is emitted as tokens.
class HistEqState {
public:
    // Constructs a core that is already configured and out of reset, as if
    // the reset/run register sequence for cfg's dimensions had been applied.
    explicit HistEqState(HistEqConfig cfg);

    // Register write. A word with the reset bit set enters reset and latches
    // rows/cols; a word with it clear releases reset iff its dimensions match
    // the latched ones, otherwise the write is rejected.
    void configure(GpioWord w);

    // Pushes one token; returns zero, one, or rows*cols output tokens.
    std::vector<StreamToken> push_pixel(const StreamToken& t);

    bool in_reset() const { return in_reset_; }
    const HistEqConfig& config() const { return cfg_; }
    const Lut& active_lut() const { return active_luma_; }

private:
    void clear_accumulation();
    void end_of_frame();

    HistEqConfig cfg_;
    bool in_reset_ = false;
    Lut active_luma_ = Lut::identity();
    std::array<Lut, 3> active_rgb_{Lut::identity(), Lut::identity(), Lut::identity()};
    Histogram acc_luma_;
    std::array<Histogram, 3> acc_rgb_;
    std::vector<Pixel> buffer_;
    size_t cursor_ = 0;
    uint64_t frames_seen_ = 0;
};

}  // namespace vpipe
