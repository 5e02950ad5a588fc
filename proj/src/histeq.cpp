#include "vpipe/histeq.hpp"

#include <algorithm>

#include "vpipe/histeq_stream.hpp"

namespace vpipe {
namespace {

// round_half_away_from_zero(255 * num / den) for non-negative integers.
uint8_t scale_rounded(uint64_t num, uint64_t den) {
    uint64_t v = (2 * 255 * num + den) / (2 * den);
    return static_cast<uint8_t>(std::min<uint64_t>(v, 255));
}

Histogram channel_histogram(const Frame& f, int channel) {
    Histogram h;
    for (const Pixel& p : f.pixels) {
        uint8_t v = channel == 0 ? p.r : channel == 1 ? p.g : p.b;
        ++h.bins[v];
    }
    return h;
}

uint8_t scale_channel(uint8_t c, uint8_t y, uint8_t y_mapped) {
    // round_half_away(c * y' / y), clamped to [0, 255]
    uint64_t v = (2ull * c * y_mapped + y) / (2ull * y);
    return static_cast<uint8_t>(std::min<uint64_t>(v, 255));
}

}  // namespace

Pixel apply_luma_gain(Pixel p, const Lut& l) {
    uint8_t y = luma(p);
    uint8_t ym = l[y];
    if (y == 0) return {ym, ym, ym};
    return {scale_channel(p.r, y, ym), scale_channel(p.g, y, ym), scale_channel(p.b, y, ym)};
}

Histogram compute_histogram(const Frame& f) {
    Histogram h;
    for (const Pixel& p : f.pixels) ++h.bins[luma(p)];
    return h;
}

Lut build_lut(const Histogram& h, uint64_t n) {
    if (n < 1 || h.total() != n) {
        throw ConsistencyError("build_lut: histogram bins must sum to n");
    }

    // cdf_min is the smallest nonzero cdf value, i.e. the count at the first
    // occupied bin.
    uint64_t cdf_min = 0;
    for (uint64_t b : h.bins) {
        if (b > 0) {
            cdf_min = b;
            break;
        }
    }
    if (cdf_min == n) return Lut::identity();  // single occupied level

    Lut lut;
    uint64_t cdf = 0;
    for (int v = 0; v < 256; ++v) {
        cdf += h.bins[v];
        lut.map[v] = cdf == 0 ? 0 : scale_rounded(cdf - cdf_min, n - cdf_min);
    }
    return lut;
}

Frame apply_lut(const Frame& f, const Lut& l, ColorMode mode) {
    Frame out = f;
    if (mode == ColorMode::kLumaGain) {
        for (Pixel& p : out.pixels) p = apply_luma_gain(p, l);
    } else {
        uint64_t n = f.pixel_count();
        Lut lr = build_lut(channel_histogram(f, 0), n);
        Lut lg = build_lut(channel_histogram(f, 1), n);
        Lut lb = build_lut(channel_histogram(f, 2), n);
        for (Pixel& p : out.pixels) p = {lr[p.r], lg[p.g], lb[p.b]};
    }
    return out;
}

Frame equalize(const Frame& f, const HistEqConfig& cfg) {
    if (f.width != cfg.cols || f.height != cfg.rows) {
        throw ConfigError("equalize: frame is " + std::to_string(f.width) + "x" +
                          std::to_string(f.height) + " but config expects " +
                          std::to_string(cfg.cols) + "x" + std::to_string(cfg.rows));
    }
    if (cfg.color_mode == ColorMode::kPerChannel) {
        return apply_lut(f, Lut::identity(), ColorMode::kPerChannel);
    }
    Lut lut = build_lut(compute_histogram(f), f.pixel_count());
    return apply_lut(f, lut, ColorMode::kLumaGain);
}

}  // namespace vpipe
