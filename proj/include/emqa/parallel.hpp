// Copyright 2026 The emqa-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace emqa {

// Number of worker threads used by parallel_for: hardware concurrency, capped
// by the EMQA_SIM_THREADS environment variable when it is set to a positive
// integer.
std::size_t worker_count();

// Runs fn(0) .. fn(n-1) on the worker pool.  Tasks must be independent; each
// task writes only to its own output slot, so results are deterministic
// regardless of interleaving.  The first exception thrown by any task is
// rethrown on the calling thread after all workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace emqa
