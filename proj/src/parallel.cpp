// Copyright 2026 The imsteer Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imsteer/parallel.hpp"

#include <cstdlib>
#include <string>

namespace imsteer {

unsigned worker_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char *cap = std::getenv("IMSTEER_THREADS")) {
        try {
            const long requested = std::stol(cap);
            if (requested > 0) {
                n = std::min(n, static_cast<unsigned>(requested));
            }
        } catch (const std::exception &) {
            // ignore malformed values
        }
    }
    return n;
}

} // namespace imsteer
