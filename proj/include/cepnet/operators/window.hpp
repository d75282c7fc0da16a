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

#ifndef CEPNET_OPERATORS_WINDOW_HPP
#define CEPNET_OPERATORS_WINDOW_HPP

#include "cepnet/packet/schema.hpp"

#include <string>
#include <vector>

namespace cepnet {

class OutOfOrderTuple : public Error
{
public:
  using Error::Error;
};

/// Time extent in milliseconds or a tuple count.
struct WindowExtent
{
  enum class Kind { Time, Count };

  Kind kind = Kind::Time;
  std::int64_t amount = 1;

  static WindowExtent
  time(std::int64_t millis)
  {
    return {Kind::Time, millis};
  }

  static WindowExtent
  count(std::int64_t tuples)
  {
    return {Kind::Count, tuples};
  }

  friend bool
  operator==(const WindowExtent&, const WindowExtent&) = default;
};

/// Sliding window buffer, sorted by ts ascending.
struct WindowState
{
  std::string queryHash;
  int operatorIndex = 0;
  WindowExtent extent;
  std::vector<Tuple> buffer;

  /// Buffers the tuple and returns the evicted tuples, oldest first.
  /// Throws OutOfOrderTuple if t is older than the newest buffered tuple.
  std::vector<Tuple>
  insert(Tuple t);

  friend bool
  operator==(const WindowState&, const WindowState&) = default;
};

struct WindowInsertResult
{
  WindowState state;
  std::vector<Tuple> evicted;
};

WindowInsertResult
window_insert(WindowState state, Tuple t);

} // namespace cepnet

#endif // CEPNET_OPERATORS_WINDOW_HPP
