#pragma once

#include <memory>

#include "vpipe/backend.hpp"

namespace vpipe {

// Deterministic 5-class quadrant classifier (classes 0..3 = TL,TR,BL,BR,
// 4 = "none"). Quadrant contrast is that quadrant's mean luma minus the
// minimum quadrant mean; when the best contrast falls below the threshold the
// frame is classified "none", otherwise scores are the contrast ratios.
// Darkening compresses contrast below the threshold, enhancement restores it,
// which is what makes this a usable accuracy probe.
ClassScores classify_quadrant(const Frame& f, double contrast_threshold);

// Deterministic single-object detector: thresholds pixels whose luma exceeds
// the global mean by more than k, and reports the bounding box of that mask
// (empty mask -> no detections). class_id is the quadrant of the box center;
// score is the mask-vs-mean contrast scaled into [0, 1].
Detections detect_bright_square(const Frame& f, double k);

inline constexpr int kQuadrantClassCount = 5;
inline constexpr int kNoneClass = 4;

class QuadrantClassifier : public Backend {
public:
    QuadrantClassifier(uint32_t input_w, uint32_t input_h, double contrast_threshold)
        : input_w_(input_w), input_h_(input_h), threshold_(contrast_threshold) {}

    std::pair<uint32_t, uint32_t> input_size() const override { return {input_w_, input_h_}; }
    Tensor preprocess(const Frame& f) const override;
    RawOutput infer(const Tensor& t) const override;
    Prediction postprocess(const RawOutput& raw) const override { return raw.prediction; }

private:
    uint32_t input_w_;
    uint32_t input_h_;
    double threshold_;
};

class BrightSquareDetector : public Backend {
public:
    BrightSquareDetector(uint32_t input_w, uint32_t input_h, double k)
        : input_w_(input_w), input_h_(input_h), k_(k) {}

    std::pair<uint32_t, uint32_t> input_size() const override { return {input_w_, input_h_}; }
    Tensor preprocess(const Frame& f) const override;
    RawOutput infer(const Tensor& t) const override;
    Prediction postprocess(const RawOutput& raw) const override { return raw.prediction; }

private:
    uint32_t input_w_;
    uint32_t input_h_;
    double k_;
};

// Shared by the toy backends: frames cross the preprocess/infer boundary as
// HWC float tensors with raw 0..255 channel values (lossless for 8-bit data).
Tensor frame_to_tensor(const Frame& f);
Frame tensor_to_frame(const Tensor& t);

}  // namespace vpipe
