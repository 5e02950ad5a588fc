#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vpipe/frame_ring.hpp"
#include "vpipe/histeq_stream.hpp"

namespace vpipe {

// One link of the enhancement chain. Stages are frame-granular here; the
// pixel-granular streaming model lives inside HistEqState.
class EnhancementStage {
public:
    virtual ~EnhancementStage() = default;

    virtual std::string name() const = 0;
    // Dimension-preserving transform.
    virtual Frame process(const Frame& f) = 0;
    // Follows the reset-gated register protocol where the stage models
    // hardware; plain stages just record the new geometry.
    virtual void reconfigure(uint32_t rows, uint32_t cols) = 0;

    virtual uint32_t rows() const = 0;
    virtual uint32_t cols() const = 0;
};

class IdentityStage : public EnhancementStage {
public:
    std::string name() const override { return "identity"; }
    Frame process(const Frame& f) override { return f; }
    void reconfigure(uint32_t rows, uint32_t cols) override {
        rows_ = rows;
        cols_ = cols;
    }
    uint32_t rows() const override { return rows_; }
    uint32_t cols() const override { return cols_; }

private:
    uint32_t rows_ = 0;
    uint32_t cols_ = 0;
};

// Histogram-equalization stage. kTwoPass processes each frame by batch
// equalization; kFrameDelayed drives the internal streaming core, so the LUT
// applied to a frame comes from the previous one (stateful across frames).
class HistEqStage : public EnhancementStage {
public:
    explicit HistEqStage(HistEqConfig cfg);

    std::string name() const override { return "histeq"; }
    Frame process(const Frame& f) override;
    void reconfigure(uint32_t rows, uint32_t cols) override;
    uint32_t rows() const override { return cfg_.rows; }
    uint32_t cols() const override { return cfg_.cols; }

private:
    HistEqConfig cfg_;
    HistEqState state_;
};

// Ordered enhancement stages between an input and an output frame ring.
// Both rings have the same capacity (the shared-buffer contract).
class Pipeline {
public:
    explicit Pipeline(std::vector<std::shared_ptr<EnhancementStage>> stages,
                      size_t ring_capacity = 4);

    // Applies stages left to right, publishes the result to the output ring.
    Frame process(const Frame& f);

    // Consumes the latest frame from the input ring, if any.
    std::optional<Frame> process_latest();

    // Single fan-out reconfiguration of every stage.
    void reconfigure(uint32_t rows, uint32_t cols);

    const std::vector<std::shared_ptr<EnhancementStage>>& stages() const { return stages_; }
    const std::shared_ptr<FrameRing>& input_ring() const { return input_ring_; }
    const std::shared_ptr<FrameRing>& output_ring() const { return output_ring_; }

    std::optional<std::pair<uint32_t, uint32_t>> configured_dims() const { return dims_; }

    friend void zero_copy_bind(const std::shared_ptr<FrameRing>& producer_ring, Pipeline& p);

private:
    std::vector<std::shared_ptr<EnhancementStage>> stages_;
    std::shared_ptr<FrameRing> input_ring_;
    std::shared_ptr<FrameRing> output_ring_;
    std::optional<std::pair<uint32_t, uint32_t>> dims_;  // (rows, cols) once configured
};

// An empty chain is legal and is the identity pipeline.
Pipeline chain(std::vector<std::shared_ptr<EnhancementStage>> stages);

// Makes the pipeline read from the producer's ring itself (shared storage,
// no copy). Capacities must match.
void zero_copy_bind(const std::shared_ptr<FrameRing>& producer_ring, Pipeline& p);

}  // namespace vpipe
