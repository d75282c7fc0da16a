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

#include "cepnet/engine/face.hpp"

#include <algorithm>

namespace cepnet {

Face::Face(FaceId id, std::string peer, FaceKind kind, std::size_t outstandingCap)
  : m_id(id)
  , m_peer(std::move(peer))
  , m_kind(kind)
  , m_cap(outstandingCap)
{
  if (m_cap == 0) {
    throw Error("face outstanding cap must be positive");
  }
}

bool
Face::enqueue(Packet p, std::uint64_t tag)
{
  m_queue.push_back({std::move(p), tag});
  if (m_queue.size() <= m_cap) {
    return false;
  }
  auto victim = std::find_if(m_queue.begin(), m_queue.end(),
                             [](const Queued& q) { return std::holds_alternative<DataStream>(q.packet); });
  if (victim == m_queue.end()) {
    return false;
  }
  m_queue.erase(victim);
  ++m_drops;
  return true;
}

std::optional<Face::Queued>
Face::transmit()
{
  if (m_queue.empty() || m_outstanding >= m_cap) {
    return std::nullopt;
  }
  Queued q = std::move(m_queue.front());
  m_queue.pop_front();
  ++m_outstanding;
  return q;
}

void
Face::delivered()
{
  if (m_outstanding > 0) {
    --m_outstanding;
  }
}

} // namespace cepnet
