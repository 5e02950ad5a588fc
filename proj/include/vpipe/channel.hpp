#pragma once

#include <condition_variable>
#include <deque>
#include <mutex>
#include <optional>

#include "vpipe/errors.hpp"

namespace vpipe {

// Bounded, blocking, order-preserving FIFO that transfers ownership between
// pipeline workers. push blocks while full; pop blocks while empty and
// returns nullopt once the channel is closed and drained.
template <typename T>
class BoundedChannel {
public:
    explicit BoundedChannel(size_t depth) : depth_(depth) {
        if (depth < 1) throw ConfigError("channel depth must be >= 1");
    }

    // Returns false if the channel was closed before the item could be queued.
    bool push(T item) {
        std::unique_lock lock(mutex_);
        not_full_.wait(lock, [&] { return items_.size() < depth_ || closed_; });
        if (closed_) return false;
        items_.push_back(std::move(item));
        lock.unlock();
        not_empty_.notify_one();
        return true;
    }

    std::optional<T> pop() {
        std::unique_lock lock(mutex_);
        not_empty_.wait(lock, [&] { return !items_.empty() || closed_; });
        if (items_.empty()) return std::nullopt;
        T item = std::move(items_.front());
        items_.pop_front();
        lock.unlock();
        not_full_.notify_one();
        return item;
    }

    void close() {
        {
            std::lock_guard lock(mutex_);
            closed_ = true;
        }
        not_empty_.notify_all();
        not_full_.notify_all();
    }

    size_t depth() const { return depth_; }

private:
    const size_t depth_;
    std::mutex mutex_;
    std::condition_variable not_full_;
    std::condition_variable not_empty_;
    std::deque<T> items_;
    bool closed_ = false;
};

}  // namespace vpipe
