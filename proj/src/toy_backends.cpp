#include "vpipe/toy_backends.hpp"

#include <algorithm>
#include <cmath>

#include "vpipe/resize.hpp"

namespace vpipe {
namespace {

struct QuadrantMeans {
    double mean[4];  // TL, TR, BL, BR
    double global;
};

QuadrantMeans quadrant_means(const Frame& f) {
    double sum[4] = {};
    uint64_t count[4] = {};
    for (uint32_t y = 0; y < f.height; ++y) {
        for (uint32_t x = 0; x < f.width; ++x) {
            int q = (x < f.width / 2 ? 0 : 1) + (y < f.height / 2 ? 0 : 2);
            sum[q] += luma(f.at(x, y));
            ++count[q];
        }
    }
    QuadrantMeans m{};
    double total = 0;
    for (int q = 0; q < 4; ++q) {
        m.mean[q] = count[q] ? sum[q] / static_cast<double>(count[q]) : 0.0;
        total += sum[q];
    }
    m.global = total / static_cast<double>(f.pixel_count());
    return m;
}

int quadrant_of_point(double cx, double cy, double width, double height) {
    return (cx < width / 2 ? 0 : 1) + (cy < height / 2 ? 0 : 2);
}

}  // namespace

ClassScores classify_quadrant(const Frame& f, double contrast_threshold) {
    if (f.width < 2 || f.height < 2) {
        throw DimensionError("classify_quadrant needs a frame of at least 2x2");
    }
    QuadrantMeans m = quadrant_means(f);
    double base = *std::min_element(m.mean, m.mean + 4);

    double contrast[4];
    double best = 0;
    double total = 0;
    for (int q = 0; q < 4; ++q) {
        contrast[q] = m.mean[q] - base;
        best = std::max(best, contrast[q]);
        total += contrast[q];
    }

    ClassScores scores;
    scores.scores.assign(kQuadrantClassCount, 0.0);
    if (best < contrast_threshold || total <= 0) {
        scores.scores[kNoneClass] = 1.0;
        return scores;
    }
    for (int q = 0; q < 4; ++q) scores.scores[q] = contrast[q] / total;
    return scores;
}

Detections detect_bright_square(const Frame& f, double k) {
    QuadrantMeans m = quadrant_means(f);

    uint32_t min_x = f.width;
    uint32_t min_y = f.height;
    uint32_t max_x = 0;
    uint32_t max_y = 0;
    double mask_sum = 0;
    uint64_t mask_count = 0;
    for (uint32_t y = 0; y < f.height; ++y) {
        for (uint32_t x = 0; x < f.width; ++x) {
            double v = luma(f.at(x, y));
            if (v > m.global + k) {
                min_x = std::min(min_x, x);
                min_y = std::min(min_y, y);
                max_x = std::max(max_x, x);
                max_y = std::max(max_y, y);
                mask_sum += v;
                ++mask_count;
            }
        }
    }
    if (mask_count == 0) return {};

    Detection d;
    d.box = {static_cast<double>(min_x), static_cast<double>(min_y),
             static_cast<double>(max_x - min_x + 1), static_cast<double>(max_y - min_y + 1)};
    double contrast = mask_sum / static_cast<double>(mask_count) - m.global;
    d.score = std::clamp(contrast / 255.0, 0.0, 1.0);
    d.class_id = quadrant_of_point(d.box.x + d.box.w / 2, d.box.y + d.box.h / 2, f.width,
                                   f.height);
    return {d};
}

Tensor frame_to_tensor(const Frame& f) {
    Tensor t;
    t.dims = {f.height, f.width, 3};
    t.data.reserve(f.pixel_count() * 3);
    for (const Pixel& p : f.pixels) {
        t.data.push_back(static_cast<float>(p.r));
        t.data.push_back(static_cast<float>(p.g));
        t.data.push_back(static_cast<float>(p.b));
    }
    return t;
}

Frame tensor_to_frame(const Tensor& t) {
    if (t.dims.size() != 3 || t.dims[2] != 3 || t.data.size() != t.element_count()) {
        throw ConsistencyError("tensor_to_frame expects an HWC tensor with 3 channels");
    }
    Frame f = new_frame(static_cast<uint32_t>(t.dims[1]), static_cast<uint32_t>(t.dims[0]));
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        f.pixels[i] = {static_cast<uint8_t>(t.data[3 * i]),
                       static_cast<uint8_t>(t.data[3 * i + 1]),
                       static_cast<uint8_t>(t.data[3 * i + 2])};
    }
    return f;
}

Tensor QuadrantClassifier::preprocess(const Frame& f) const {
    return frame_to_tensor(resize_nearest(f, input_w_, input_h_));
}

RawOutput QuadrantClassifier::infer(const Tensor& t) const {
    return {classify_quadrant(tensor_to_frame(t), threshold_)};
}

Tensor BrightSquareDetector::preprocess(const Frame& f) const {
    return frame_to_tensor(resize_nearest(f, input_w_, input_h_));
}

RawOutput BrightSquareDetector::infer(const Tensor& t) const {
    return {detect_bright_square(tensor_to_frame(t), k_)};
}

}  // namespace vpipe
