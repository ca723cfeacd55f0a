#include "lotvns/compute_pool.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace lotvns {

struct ComputePool::Impl {
    explicit Impl(int lanes) {
        // An explicit request above the machine's concurrency is honored
        // (oversubscribed) rather than silently capped.
        if (lanes > tbb::info::default_concurrency())
            limit.emplace(tbb::global_control::max_allowed_parallelism, static_cast<std::size_t>(lanes));
        arena.initialize(lanes);
    }
    std::optional<tbb::global_control> limit;
    tbb::task_arena arena;
};

ComputePool::ComputePool(std::size_t lanes) {
    if (lanes == 0) lanes = std::max(1u, std::thread::hardware_concurrency());
    impl_ = std::make_unique<Impl>(static_cast<int>(lanes));
}

ComputePool::~ComputePool() = default;

std::size_t ComputePool::lanes() const noexcept {
    return static_cast<std::size_t>(impl_->arena.max_concurrency());
}

void ComputePool::parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    if (n == 1) {
        body(0);
        return;
    }
    impl_->arena.execute([&] {
        tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n), [&](const tbb::blocked_range<std::size_t>& r) {
            for (std::size_t i = r.begin(); i != r.end(); ++i) body(i);
        });
    });
}

} // namespace lotvns
