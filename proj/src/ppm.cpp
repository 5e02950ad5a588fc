#include "vpipe/ppm.hpp"

#include <cstring>
#include <fstream>

namespace vpipe {
namespace {

// Parses a decimal literal exactly as the writer would emit it: at least one
// digit, no sign, no leading zeros (except the literal "0").
bool parse_canonical_uint(const std::vector<uint8_t>& bytes, size_t& pos, uint32_t& out) {
    size_t start = pos;
    uint64_t v = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        v = v * 10 + (bytes[pos] - '0');
        if (v > 0xFFFFFFFFull) return false;
        ++pos;
    }
    if (pos == start) return false;
    if (bytes[start] == '0' && pos - start > 1) return false;
    out = static_cast<uint32_t>(v);
    return true;
}

bool expect(const std::vector<uint8_t>& bytes, size_t& pos, const char* lit) {
    size_t n = std::strlen(lit);
    if (pos + n > bytes.size() || std::memcmp(bytes.data() + pos, lit, n) != 0) return false;
    pos += n;
    return true;
}

}  // namespace

Frame read_ppm(const std::vector<uint8_t>& bytes) {
    size_t pos = 0;
    uint32_t w = 0;
    uint32_t h = 0;
    if (!expect(bytes, pos, "P6\n")) throw FormatError("ppm: missing P6 magic");
    if (!parse_canonical_uint(bytes, pos, w)) throw FormatError("ppm: bad width");
    if (!expect(bytes, pos, " ")) throw FormatError("ppm: bad header separator");
    if (!parse_canonical_uint(bytes, pos, h)) throw FormatError("ppm: bad height");
    if (!expect(bytes, pos, "\n255\n")) throw FormatError("ppm: maxval must be 255");
    if (w < 1 || w > kMaxDim || h < 1 || h > kMaxDim) {
        throw FormatError("ppm: dimensions out of range");
    }

    size_t payload = static_cast<size_t>(w) * h * 3;
    if (bytes.size() - pos < payload) throw FormatError("ppm: truncated pixel data");
    if (bytes.size() - pos > payload) throw FormatError("ppm: trailing bytes after pixel data");

    Frame f;
    f.width = w;
    f.height = h;
    f.pixels.resize(static_cast<size_t>(w) * h);
    for (size_t i = 0; i < f.pixels.size(); ++i) {
        f.pixels[i] = {bytes[pos + 3 * i], bytes[pos + 3 * i + 1], bytes[pos + 3 * i + 2]};
    }
    return f;
}

std::vector<uint8_t> write_ppm(const Frame& f) {
    if (f.pixels.size() != f.pixel_count()) throw ConsistencyError("ppm: pixel buffer size mismatch");
    std::string header =
        "P6\n" + std::to_string(f.width) + " " + std::to_string(f.height) + "\n255\n";
    std::vector<uint8_t> out;
    out.reserve(header.size() + f.pixels.size() * 3);
    out.insert(out.end(), header.begin(), header.end());
    for (const Pixel& p : f.pixels) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

Frame load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    return read_ppm(bytes);
}

void save_ppm(const Frame& f, const std::filesystem::path& path) {
    auto bytes = write_ppm(f);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("short write to " + path.string());
}

}  // namespace vpipe
