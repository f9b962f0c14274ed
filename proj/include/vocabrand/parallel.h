// Copyright 2026 The vocabrand Authors
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

#ifndef VOCABRAND_PARALLEL_H_
#define VOCABRAND_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <utility>
#include <vector>

namespace vocabrand {

// Splits [0, total) into contiguous blocks, evaluates `block(begin, end)` on
// each (possibly concurrently) and folds the partial results left to right
// with `combine`. The result is independent of the number of workers as long
// as `combine` is associative.
template <typename T, typename Block, typename Combine>
T PartitionedReduce(std::uint64_t total, T init, Block block,
                    Combine combine, unsigned workers = 0) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinBlock = 1u << 14;
  const std::uint64_t max_workers = std::max<std::uint64_t>(1, total / kMinBlock);
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, max_workers));
  if (workers <= 1) return combine(std::move(init), block(std::uint64_t{0}, total));

  std::vector<std::future<T>> parts;
  parts.reserve(workers);
  const std::uint64_t step = (total + workers - 1) / workers;
  for (std::uint64_t begin = 0; begin < total; begin += step) {
    const std::uint64_t end = std::min(total, begin + step);
    parts.push_back(std::async(std::launch::async, block, begin, end));
  }
  for (auto& part : parts) init = combine(std::move(init), part.get());
  return init;
}

}  // namespace vocabrand

#endif  // VOCABRAND_PARALLEL_H_
