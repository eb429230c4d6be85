// Copyright 2026 The qutrit-msd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSD_PARALLEL_H
#define MSD_PARALLEL_H

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace msd {

/// Worker count: `requested` if positive, else MSD_WORKERS, else 1.
inline int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("MSD_WORKERS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) {
                return n;
            }
        } catch (const std::exception &) {
        }
    }
    return 1;
}

/// Calls fn(k) for k in [0, count) with indices strided across workers. Results must be written to
/// per-index slots so the outcome does not depend on the worker count. Rethrows the first exception.
template <typename F>
void parallel_for(size_t count, int workers, F &&fn) {
    size_t w = std::min<size_t>(static_cast<size_t>(std::max(workers, 1)), std::max<size_t>(count, 1));
    if (w <= 1) {
        for (size_t k = 0; k < count; k++) {
            fn(k);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    threads.reserve(w);
    for (size_t t = 0; t < w; t++) {
        threads.emplace_back([&, t] {
            try {
                for (size_t k = t; k < count; k += w) {
                    fn(k);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace msd

#endif
