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

#ifndef CEPNET_ENGINE_FACE_HPP
#define CEPNET_ENGINE_FACE_HPP

#include "cepnet/packet/packet.hpp"

#include <deque>
#include <optional>
#include <string>

namespace cepnet {

enum class FaceKind {
  Network, ///< link to another node
  Local,   ///< application on the same node
};

/// Communication interface of a node with an outbound queue. At most
/// `outstandingCap` packets are in flight; the rest wait. When the waiting
/// queue is longer than the cap, the oldest waiting DataStream is dropped.
/// Interest, Data and query control packets are never dropped.
class Face
{
public:
  Face(FaceId id, std::string peer, FaceKind kind, std::size_t outstandingCap = 64);

  FaceId
  id() const noexcept
  {
    return m_id;
  }

  const std::string&
  peer() const noexcept
  {
    return m_peer;
  }

  FaceKind
  kind() const noexcept
  {
    return m_kind;
  }

  std::size_t
  outstandingCap() const noexcept
  {
    return m_cap;
  }

  /// Packet waiting for the link with a caller-defined tag.
  struct Queued
  {
    Packet packet;
    std::uint64_t tag = 0;
  };

  /// Returns true when a DataStream packet had to be dropped.
  bool
  enqueue(Packet p, std::uint64_t tag = 0);

  /// Next packet to put on the link, if one waits and the cap allows.
  std::optional<Queued>
  transmit();

  /// A transmitted packet reached the peer.
  void
  delivered();

  std::size_t
  waiting() const noexcept
  {
    return m_queue.size();
  }

  std::size_t
  outstanding() const noexcept
  {
    return m_outstanding;
  }

  std::size_t
  drops() const noexcept
  {
    return m_drops;
  }

private:
  FaceId m_id;
  std::string m_peer;
  FaceKind m_kind;
  std::size_t m_cap;
  std::deque<Queued> m_queue;
  std::size_t m_outstanding = 0;
  std::size_t m_drops = 0;
};

} // namespace cepnet

#endif // CEPNET_ENGINE_FACE_HPP
