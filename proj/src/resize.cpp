#include "vpipe/resize.hpp"

namespace vpipe {

Frame resize_nearest(const Frame& f, uint32_t out_w, uint32_t out_h) {
    if (f.width == out_w && f.height == out_h) return f;

    Frame out = new_frame(out_w, out_h);
    out.index = f.index;
    out.capture_time = f.capture_time;
    for (uint32_t y = 0; y < out_h; ++y) {
        uint32_t sy = static_cast<uint32_t>(static_cast<uint64_t>(y) * f.height / out_h);
        const Pixel* src_row = &f.pixels[static_cast<size_t>(sy) * f.width];
        Pixel* dst_row = &out.pixels[static_cast<size_t>(y) * out_w];
        for (uint32_t x = 0; x < out_w; ++x) {
            uint32_t sx = static_cast<uint32_t>(static_cast<uint64_t>(x) * f.width / out_w);
            dst_row[x] = src_row[sx];
        }
    }
    return out;
}

}  // namespace vpipe
