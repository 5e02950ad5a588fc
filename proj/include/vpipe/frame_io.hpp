#pragma once

#include <filesystem>

#include "vpipe/frame.hpp"

namespace vpipe {

// A "raw video" on disk is a directory of zero-padded numbered P6 files,
// frame_%06d.ppm, plus a stream.meta file of `fps=<int>` / `count=<int>` lines.
struct StreamMeta {
    uint32_t fps = 0;
    uint64_t count = 0;
};

std::filesystem::path frame_path(const std::filesystem::path& dir, uint64_t index);

void write_stream_meta(const std::filesystem::path& dir, const StreamMeta& meta);
StreamMeta read_stream_meta(const std::filesystem::path& dir);

}  // namespace vpipe
