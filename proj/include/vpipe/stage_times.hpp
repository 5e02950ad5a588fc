#pragma once

#include <algorithm>
#include <limits>

#include "vpipe/errors.hpp"

namespace vpipe {

// Per-frame duration of each of the six serial steps.
struct StageTimes {
    double read_ms = 0;
    double preprocess_ms = 0;
    double infer_ms = 0;
    double postprocess_ms = 0;
    double overlay_ms = 0;
    double write_ms = 0;
};

struct ThroughputPrediction {
    double si_ms = 0;               // synchronous total: sum of all stages
    double psi_lower_bound_ms = 0;  // pipelined bound: slowest worker group
    double si_fps = 0;
    double psi_max_fps = 0;
};

// Analytic model of the two blocking execution modes. The pipelined bound
// uses the four hard-coded worker groups: read+preprocess | infer |
// postprocess+overlay | write. A zero time yields an unbounded (infinite)
// fps sentinel.
inline ThroughputPrediction predict_times(const StageTimes& t) {
    auto nonneg = [](double v) {
        if (v < 0) throw RangeError("stage times must be >= 0");
        return v;
    };
    ThroughputPrediction p;
    p.si_ms = nonneg(t.read_ms) + nonneg(t.preprocess_ms) + nonneg(t.infer_ms) +
              nonneg(t.postprocess_ms) + nonneg(t.overlay_ms) + nonneg(t.write_ms);
    p.psi_lower_bound_ms = std::max({t.read_ms + t.preprocess_ms, t.infer_ms,
                                     t.postprocess_ms + t.overlay_ms, t.write_ms});
    auto fps = [](double ms) {
        return ms > 0 ? 1000.0 / ms : std::numeric_limits<double>::infinity();
    };
    p.si_fps = fps(p.si_ms);
    p.psi_max_fps = fps(p.psi_lower_bound_ms);
    return p;
}

}  // namespace vpipe
