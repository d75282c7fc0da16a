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

#include "cepnet/packet/packet.hpp"

namespace cepnet {

PacketType
type_of(const Packet& p) noexcept
{
  return static_cast<PacketType>(p.index() + 1);
}

const char*
to_string(PacketType t) noexcept
{
  switch (t) {
    case PacketType::Interest:
      return "Interest";
    case PacketType::Data:
      return "Data";
    case PacketType::DataStream:
      return "DataStream";
    case PacketType::AddQueryInterest:
      return "AddQueryInterest";
    case PacketType::RemoveQueryInterest:
      return "RemoveQueryInterest";
  }
  return "Unknown";
}

namespace {

struct Summarizer
{
  std::string
  operator()(const Interest& i) const
  {
    return "Interest " + i.name.toUri();
  }

  std::string
  operator()(const Data& d) const
  {
    return "Data " + d.name.toUri() + " ts=" + std::to_string(d.ts) + " bytes=" +
           std::to_string(d.payload.size());
  }

  std::string
  operator()(const DataStream& s) const
  {
    return "DataStream " + s.streamName.toUri() + " ts=" + std::to_string(s.tuple.ts);
  }

  std::string
  operator()(const AddQueryInterest& q) const
  {
    return "AddQueryInterest nonce=" + std::to_string(q.nonce) + " \"" + q.query + "\"";
  }

  std::string
  operator()(const RemoveQueryInterest& q) const
  {
    return "RemoveQueryInterest nonce=" + std::to_string(q.nonce) + " \"" + q.query + "\"";
  }
};

} // namespace

std::string
summarize(const Packet& p)
{
  return std::visit(Summarizer{}, p);
}

} // namespace cepnet
