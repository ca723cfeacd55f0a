#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace lotvns {

/// Bounded pool of execution lanes shared by every parallel region of a
/// solve. Regions nest: a parallel map issued from inside another one
/// draws from the same lanes and cannot deadlock.
class ComputePool {
public:
    /// `lanes` == 0 selects the hardware concurrency.
    explicit ComputePool(std::size_t lanes = 0);
    ~ComputePool();
    ComputePool(const ComputePool&) = delete;
    ComputePool& operator=(const ComputePool&) = delete;

    std::size_t lanes() const noexcept;

    /// Calls body(i) for every i in [0, n); returns after all calls finish.
    /// Iterations may run concurrently and in any order.
    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace lotvns
