#include "vpipe/mock_backend.hpp"

#include <chrono>
#include <thread>

namespace vpipe {

void sleep_ms(double ms) {
    if (ms <= 0) return;
    std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(ms));
}

MockBackend::MockBackend(MockConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.preprocess_ms < 0 || cfg_.infer_ms < 0 || cfg_.postprocess_ms < 0) {
        throw RangeError("mock stage durations must be >= 0");
    }
}

Tensor MockBackend::preprocess(const Frame& f) const {
    (void)f;
    sleep_ms(cfg_.preprocess_ms);
    return Tensor{{1}, {0.0f}};
}

RawOutput MockBackend::infer(const Tensor& t) const {
    (void)t;
    std::lock_guard lock(infer_mutex_);
    sleep_ms(cfg_.infer_ms);
    return {cfg_.emit};
}

Prediction MockBackend::postprocess(const RawOutput& raw) const {
    sleep_ms(cfg_.postprocess_ms);
    return raw.prediction;
}

}  // namespace vpipe
