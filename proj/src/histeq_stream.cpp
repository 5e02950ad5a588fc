#include "vpipe/histeq_stream.hpp"

namespace vpipe {

HistEqState::HistEqState(HistEqConfig cfg) : cfg_(cfg) {
    if (cfg.rows < 1 || cfg.rows > kMaxDim || cfg.cols < 1 || cfg.cols > kMaxDim) {
        throw ConfigError("HistEqState: rows/cols must be in [1, 4095]");
    }
}

void HistEqState::clear_accumulation() {
    acc_luma_ = Histogram{};
    acc_rgb_ = {Histogram{}, Histogram{}, Histogram{}};
    buffer_.clear();
    cursor_ = 0;
}

void HistEqState::configure(GpioWord w) {
    auto [rows, cols, reset] = unpack_gpio(w);
    if (reset) {
        in_reset_ = true;
        cfg_.rows = rows;
        cfg_.cols = cols;
        active_luma_ = Lut::identity();
        active_rgb_ = {Lut::identity(), Lut::identity(), Lut::identity()};
        clear_accumulation();
        return;
    }
    if (rows != cfg_.rows || cols != cfg_.cols) {
        throw ProtocolError("HistEqState: dimension change requires reset");
    }
    if (cfg_.rows < 1 || cfg_.cols < 1) {
        throw ConfigError("HistEqState: cannot run with zero dimensions");
    }
    in_reset_ = false;
}

std::vector<StreamToken> HistEqState::push_pixel(const StreamToken& t) {
    if (in_reset_) throw ResetViolationError("HistEqState: token pushed while in reset");

    bool want_sof = cursor_ == 0;
    bool want_eol = cursor_ % cfg_.cols == cfg_.cols - 1;
    if (t.sof != want_sof || t.eol != want_eol) {
        throw FramingError("HistEqState: sof/eol inconsistent with configured " +
                           std::to_string(cfg_.cols) + "x" + std::to_string(cfg_.rows) +
                           " geometry at pixel " + std::to_string(cursor_));
    }

    size_t frame_pixels = static_cast<size_t>(cfg_.rows) * cfg_.cols;
    bool last = cursor_ == frame_pixels - 1;

    if (cfg_.timing_mode == TimingMode::kTwoPass) {
        buffer_.push_back(t.pixel);
        if (!last) {
            ++cursor_;
            return {};
        }
        Frame f;
        f.width = cfg_.cols;
        f.height = cfg_.rows;
        f.pixels = std::move(buffer_);
        f.index = frames_seen_;
        Frame out = equalize(f, cfg_);
        end_of_frame();
        return tokenize(out);
    }

    // Frame-delayed: transform now with last frame's LUT, accumulate this one.
    Pixel out_pixel;
    if (cfg_.color_mode == ColorMode::kLumaGain) {
        out_pixel = apply_luma_gain(t.pixel, active_luma_);
    } else {
        out_pixel = {active_rgb_[0][t.pixel.r], active_rgb_[1][t.pixel.g],
                     active_rgb_[2][t.pixel.b]};
    }
    ++acc_luma_.bins[luma(t.pixel)];
    ++acc_rgb_[0].bins[t.pixel.r];
    ++acc_rgb_[1].bins[t.pixel.g];
    ++acc_rgb_[2].bins[t.pixel.b];

    if (last) {
        active_luma_ = build_lut(acc_luma_, frame_pixels);
        for (int c = 0; c < 3; ++c) active_rgb_[c] = build_lut(acc_rgb_[c], frame_pixels);
        end_of_frame();
    } else {
        ++cursor_;
    }
    return {StreamToken{out_pixel, t.sof, t.eol}};
}

void HistEqState::end_of_frame() {
    clear_accumulation();
    ++frames_seen_;
}

}  // namespace vpipe
