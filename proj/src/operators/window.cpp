/*
    Copyright (C) 2026 The cepnet authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "cepnet/operators/window.hpp"

namespace cepnet {

std::vector<Tuple>
WindowState::insert(Tuple t)
{
  if (!buffer.empty() && t.ts < buffer.back().ts) {
    throw OutOfOrderTuple("tuple ts " + std::to_string(t.ts) + " is older than buffered ts " +
                          std::to_string(buffer.back().ts));
  }
  buffer.push_back(std::move(t));

  std::size_t keepFrom = 0;
  if (extent.kind == WindowExtent::Kind::Time) {
    Timestamp newest = buffer.back().ts;
    while (keepFrom < buffer.size() && newest - buffer[keepFrom].ts >= extent.amount) {
      ++keepFrom;
    }
  }
  else if (buffer.size() > static_cast<std::size_t>(extent.amount)) {
    keepFrom = buffer.size() - static_cast<std::size_t>(extent.amount);
  }

  std::vector<Tuple> evicted(std::make_move_iterator(buffer.begin()),
                             std::make_move_iterator(buffer.begin() + static_cast<std::ptrdiff_t>(keepFrom)));
  buffer.erase(buffer.begin(), buffer.begin() + static_cast<std::ptrdiff_t>(keepFrom));
  return evicted;
}

WindowInsertResult
window_insert(WindowState state, Tuple t)
{
  auto evicted = state.insert(std::move(t));
  return {std::move(state), std::move(evicted)};
}

} // namespace cepnet
