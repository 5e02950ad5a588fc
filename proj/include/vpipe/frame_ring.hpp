#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "vpipe/frame.hpp"

namespace vpipe {

// Fixed-capacity ring of complete frames, modeling a DMA frame buffer shared
// between a free-running producer and a sampling consumer. The producer never
// blocks: the oldest slot is simply overwritten. The consumer copies out the
// most recently completed frame, so it can never observe a torn write.
// Safe for one producer and one consumer running concurrently.
class FrameRing {
public:
    explicit FrameRing(size_t capacity = 4) : slots_(capacity) {
        if (capacity < 1) throw ConfigError("FrameRing capacity must be >= 1");
    }

    size_t capacity() const { return slots_.size(); }

    void publish(Frame f) {
        std::lock_guard lock(mutex_);
        size_t slot = write_cursor_;
        slots_[slot] = std::move(f);
        write_cursor_ = (write_cursor_ + 1) % slots_.size();
        latest_slot_ = slot;
    }

    // Copy of the most recently completed frame, or nullopt before the
    // first publish.
    std::optional<Frame> latest() const {
        std::lock_guard lock(mutex_);
        if (!latest_slot_) return std::nullopt;
        return slots_[*latest_slot_];
    }

    std::optional<uint64_t> last_complete_index() const {
        std::lock_guard lock(mutex_);
        if (!latest_slot_) return std::nullopt;
        return slots_[*latest_slot_]->index;
    }

    // Frames currently held in slots, in slot order. Test/introspection aid.
    std::vector<Frame> snapshot() const {
        std::lock_guard lock(mutex_);
        std::vector<Frame> out;
        for (const auto& s : slots_) {
            if (s) out.push_back(*s);
        }
        return out;
    }

private:
    mutable std::mutex mutex_;
    std::vector<std::optional<Frame>> slots_;
    size_t write_cursor_ = 0;
    std::optional<size_t> latest_slot_;
};

}  // namespace vpipe
