#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "vpipe/frame.hpp"

namespace vpipe {

struct Tensor {
    std::vector<size_t> dims;
    std::vector<float> data;

    size_t element_count() const {
        size_t n = 1;
        for (size_t d : dims) n *= d;
        return n;
    }
};

// Axis-aligned box, pixel units, top-left origin.
struct Box {
    double x = 0;
    double y = 0;
    double w = 0;
    double h = 0;

    friend bool operator==(const Box&, const Box&) = default;
};

struct Detection {
    Box box;
    int class_id = 0;
    double score = 0;  // in [0, 1]

    friend bool operator==(const Detection&, const Detection&) = default;
};

struct ClassScores {
    std::vector<double> scores;

    // Highest-scoring class, ties broken by lower class id.
    int argmax() const {
        int best = 0;
        for (size_t i = 1; i < scores.size(); ++i) {
            if (scores[i] > scores[best]) best = static_cast<int>(i);
        }
        return best;
    }

    friend bool operator==(const ClassScores&, const ClassScores&) = default;
};

using Detections = std::vector<Detection>;
using Prediction = std::variant<ClassScores, Detections>;

struct RawOutput {
    Prediction prediction;
};

// Pluggable inference engine. Configuration is immutable after construction;
// the three phases may be called from different workers on distinct inputs
// (infer may serialize internally to model a single accelerator instance).
class Backend {
public:
    virtual ~Backend() = default;

    virtual std::pair<uint32_t, uint32_t> input_size() const = 0;  // (w, h)
    virtual Tensor preprocess(const Frame& f) const = 0;
    virtual RawOutput infer(const Tensor& t) const = 0;
    virtual Prediction postprocess(const RawOutput& raw) const = 0;
};

}  // namespace vpipe
