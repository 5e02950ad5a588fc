#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vpipe/stage_times.hpp"

namespace vpipe {

enum class RunMode { kAsync, kSync, kPipelined };

std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& s);

// Measured per-frame stage durations.
struct FrameRecord {
    uint64_t frame_index = 0;
    StageTimes stages;
    double total_ms = 0;
};

struct RunReport {
    RunMode mode = RunMode::kSync;
    std::vector<FrameRecord> records;
    StageTimes stage_means_ms;
    StageTimes stage_medians_ms;
    double fps = 0;
    uint64_t dropped_frames = 0;  // async only: frames never sampled by inference
    double elapsed_ms = 0;
    uint64_t frames = 0;
    double mean_total_ms = 0;
    uint64_t max_in_flight = 0;  // pipelined only
    size_t queue_depth = 0;      // pipelined only

    // Fills means/medians/fps/mean_total from records + elapsed.
    void finalize();

    std::string to_json() const;
    void save(const std::filesystem::path& path) const;
};

}  // namespace vpipe
