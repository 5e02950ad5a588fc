#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vpipe/frame.hpp"

namespace vpipe {

// Binary P6, maxval 255, canonical header "P6\n<w> <h>\n255\n".
// The reader accepts exactly the canonical form the writer emits, which keeps
// both round trips byte-exact: write(read(b)) == b and read(write(f)) == f.
Frame read_ppm(const std::vector<uint8_t>& bytes);
std::vector<uint8_t> write_ppm(const Frame& f);

Frame load_ppm(const std::filesystem::path& path);
void save_ppm(const Frame& f, const std::filesystem::path& path);

}  // namespace vpipe
