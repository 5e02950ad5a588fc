#include "vpipe/pipeline.hpp"

namespace vpipe {

HistEqStage::HistEqStage(HistEqConfig cfg) : cfg_(cfg), state_(cfg) {}

Frame HistEqStage::process(const Frame& f) {
    if (f.width != cfg_.cols || f.height != cfg_.rows) {
        throw ConfigError("histeq stage configured " + std::to_string(cfg_.cols) + "x" +
                          std::to_string(cfg_.rows) + ", got " + std::to_string(f.width) +
                          "x" + std::to_string(f.height));
    }
    if (cfg_.timing_mode == TimingMode::kTwoPass) return equalize(f, cfg_);

    std::vector<StreamToken> out;
    out.reserve(f.pixel_count());
    for (const StreamToken& t : tokenize(f)) {
        auto emitted = state_.push_pixel(t);
        out.insert(out.end(), emitted.begin(), emitted.end());
    }
    Frame result = detokenize(out, f.width, f.height);
    result.index = f.index;
    result.capture_time = f.capture_time;
    return result;
}

void HistEqStage::reconfigure(uint32_t rows, uint32_t cols) {
    state_.configure(pack_gpio(rows, cols, true));
    state_.configure(pack_gpio(rows, cols, false));
    cfg_.rows = rows;
    cfg_.cols = cols;
}

Pipeline::Pipeline(std::vector<std::shared_ptr<EnhancementStage>> stages, size_t ring_capacity)
    : stages_(std::move(stages)),
      input_ring_(std::make_shared<FrameRing>(ring_capacity)),
      output_ring_(std::make_shared<FrameRing>(ring_capacity)) {}

Frame Pipeline::process(const Frame& f) {
    if (dims_ && (f.height != dims_->first || f.width != dims_->second)) {
        throw ConfigError("pipeline configured " + std::to_string(dims_->second) + "x" +
                          std::to_string(dims_->first) + ", got " + std::to_string(f.width) +
                          "x" + std::to_string(f.height));
    }
    Frame out = f;
    for (auto& stage : stages_) out = stage->process(out);
    output_ring_->publish(out);
    return out;
}

std::optional<Frame> Pipeline::process_latest() {
    auto f = input_ring_->latest();
    if (!f) return std::nullopt;
    return process(*f);
}

void Pipeline::reconfigure(uint32_t rows, uint32_t cols) {
    for (auto& stage : stages_) stage->reconfigure(rows, cols);
    dims_ = {rows, cols};
}

Pipeline chain(std::vector<std::shared_ptr<EnhancementStage>> stages) {
    return Pipeline(std::move(stages));
}

void zero_copy_bind(const std::shared_ptr<FrameRing>& producer_ring, Pipeline& p) {
    if (producer_ring->capacity() != p.input_ring_->capacity()) {
        throw ConfigError("zero_copy_bind: ring capacities differ (" +
                          std::to_string(producer_ring->capacity()) + " vs " +
                          std::to_string(p.input_ring_->capacity()) + ")");
    }
    p.input_ring_ = producer_ring;
}

}  // namespace vpipe
