#include "vpipe/stream.hpp"

namespace vpipe {

std::vector<StreamToken> tokenize(const Frame& f) {
    std::vector<StreamToken> tokens;
    tokens.reserve(f.pixel_count());
    for (uint32_t y = 0; y < f.height; ++y) {
        for (uint32_t x = 0; x < f.width; ++x) {
            tokens.push_back({f.at(x, y), x == 0 && y == 0, x == f.width - 1});
        }
    }
    return tokens;
}

Frame detokenize(const std::vector<StreamToken>& tokens, uint32_t width, uint32_t height) {
    Frame f = new_frame(width, height);
    if (tokens.size() != f.pixel_count()) {
        throw FramingError("detokenize: expected " + std::to_string(f.pixel_count()) +
                           " tokens, got " + std::to_string(tokens.size()));
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
        uint32_t x = static_cast<uint32_t>(i % width);
        bool want_sof = i == 0;
        bool want_eol = x == width - 1;
        if (tokens[i].sof != want_sof || tokens[i].eol != want_eol) {
            throw FramingError("detokenize: sof/eol flags inconsistent at token " +
                               std::to_string(i));
        }
        f.pixels[i] = tokens[i].pixel;
    }
    return f;
}

}  // namespace vpipe
