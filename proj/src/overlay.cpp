#include "vpipe/overlay.hpp"

#include <algorithm>
#include <cmath>

namespace vpipe {
namespace {

void draw_badge(Frame& f, int class_id) {
    Pixel color = kOverlayPalette[static_cast<size_t>(class_id) % kOverlayPalette.size()];
    uint32_t w = std::min(kBadgeSize, f.width);
    uint32_t h = std::min(kBadgeSize, f.height);
    for (uint32_t y = 0; y < h; ++y) {
        for (uint32_t x = 0; x < w; ++x) f.at(x, y) = color;
    }
}

void draw_box(Frame& f, const Detection& d) {
    Pixel color = kOverlayPalette[static_cast<size_t>(d.class_id) % kOverlayPalette.size()];
    int64_t x0 = std::llround(d.box.x);
    int64_t y0 = std::llround(d.box.y);
    int64_t bw = std::llround(d.box.w);
    int64_t bh = std::llround(d.box.h);
    if (bw <= 0 || bh <= 0) return;
    int64_t border = static_cast<int64_t>(kBoxBorder);
    for (int64_t py = std::max<int64_t>(y0, 0);
         py < std::min<int64_t>(y0 + bh, f.height); ++py) {
        bool edge_row = py < y0 + border || py >= y0 + bh - border;
        for (int64_t px = std::max<int64_t>(x0, 0);
             px < std::min<int64_t>(x0 + bw, f.width); ++px) {
            bool edge_col = px < x0 + border || px >= x0 + bw - border;
            if (edge_row || edge_col) {
                f.at(static_cast<uint32_t>(px), static_cast<uint32_t>(py)) = color;
            }
        }
    }
}

}  // namespace

Frame overlay(const Frame& f, const Prediction& p) {
    Frame out = f;
    if (const auto* scores = std::get_if<ClassScores>(&p)) {
        draw_badge(out, scores->argmax());
    } else {
        for (const Detection& d : std::get<Detections>(p)) draw_box(out, d);
    }
    return out;
}

}  // namespace vpipe
