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

#ifndef CEPNET_COMMON_HPP
#define CEPNET_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cepnet {

/// Logical time in milliseconds, supplied by datasets or the simulator clock.
using Timestamp = std::int64_t;

using FaceId = std::uint32_t;
using NodeId = std::string;

/// Root of every error raised by this library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// 64-bit FNV-1a, used for query hashes and trace digests.
inline std::uint64_t
fnv1a(const std::string& text, std::uint64_t seed = 0xcbf29ce484222325ULL)
{
  std::uint64_t h = seed;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace cepnet

#endif // CEPNET_COMMON_HPP
