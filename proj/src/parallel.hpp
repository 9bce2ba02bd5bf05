// Copyright 2026 The zoegd Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef ZOEGD_PARALLEL_HPP
#define ZOEGD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace zoegd {

/// Worker cap: hardware concurrency, clamped by the ZOEGD_THREADS environment
/// variable when set. Always at least 1.
int max_worker_threads();

/// Runs fn(begin, end) over a partition of [0, n) on up to
/// max_worker_threads() threads. Each index lands in exactly one block, so a
/// callback that writes only to per-index slots produces results that do not
/// depend on the worker count. `grain` is the minimum work per worker: jobs
/// smaller than one grain run inline on the calling thread.
void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                     std::size_t grain = 1);

}  // namespace zoegd

#endif  // ZOEGD_PARALLEL_HPP
