#include "vpipe/frame_io.hpp"

#include <cstdio>
#include <fstream>

namespace vpipe {

std::filesystem::path frame_path(const std::filesystem::path& dir, uint64_t index) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06llu.ppm",
                  static_cast<unsigned long long>(index));
    return dir / name;
}

void write_stream_meta(const std::filesystem::path& dir, const StreamMeta& meta) {
    std::ofstream out(dir / "stream.meta", std::ios::trunc);
    if (!out) throw FormatError("cannot write stream.meta in " + dir.string());
    out << "fps=" << meta.fps << "\n";
    out << "count=" << meta.count << "\n";
}

StreamMeta read_stream_meta(const std::filesystem::path& dir) {
    std::ifstream in(dir / "stream.meta");
    if (!in) throw FormatError("cannot read stream.meta in " + dir.string());
    StreamMeta meta;
    bool have_fps = false;
    bool have_count = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("fps=", 0) == 0) {
            meta.fps = static_cast<uint32_t>(std::stoul(line.substr(4)));
            have_fps = true;
        } else if (line.rfind("count=", 0) == 0) {
            meta.count = std::stoull(line.substr(6));
            have_count = true;
        }
    }
    if (!have_fps || !have_count) throw FormatError("stream.meta missing fps= or count=");
    return meta;
}

}  // namespace vpipe
