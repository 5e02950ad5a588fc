#pragma once

#include <mutex>

#include "vpipe/backend.hpp"

namespace vpipe {

// Stage durations for a timing-faithful stand-in backend. `emit` is the fixed
// prediction every inference returns.
struct MockConfig {
    double preprocess_ms = 0;
    double infer_ms = 0;
    double postprocess_ms = 0;
    Prediction emit = ClassScores{{1, 0, 0, 0, 0}};
};

// Backend that does no work but takes configured time per phase. infer() is
// serialized by an internal mutex, modeling a single accelerator instance
// that cannot overlap two inferences.
class MockBackend : public Backend {
public:
    explicit MockBackend(MockConfig cfg);

    std::pair<uint32_t, uint32_t> input_size() const override { return {1, 1}; }
    Tensor preprocess(const Frame& f) const override;
    RawOutput infer(const Tensor& t) const override;
    Prediction postprocess(const RawOutput& raw) const override;

    const MockConfig& config() const { return cfg_; }

private:
    MockConfig cfg_;
    mutable std::mutex infer_mutex_;
};

// Busy-accurate sleep helper shared by the mock and the simulated I/O
// endpoints; sleeps on the steady clock, never undershoots.
void sleep_ms(double ms);

}  // namespace vpipe
