/*
 * Copyright 2026 The polygame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Internal helpers shared by the sources; not installed.

#pragma once

#include <cstddef>
#include <limits>

namespace polygame::detail {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

inline std::size_t sat_mul(std::size_t a, std::size_t b)
{
    if (a != 0 && b > kSaturated / a)
        return kSaturated;
    return a * b;
}

inline std::size_t sat_add(std::size_t a, std::size_t b)
{
    return a > kSaturated - b ? kSaturated : a + b;
}

inline std::size_t sat_pow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp-- > 0)
        r = sat_mul(r, base);
    return r;
}

} // namespace polygame::detail
