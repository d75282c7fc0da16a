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

#ifndef CEPNET_PACKET_PACKET_HPP
#define CEPNET_PACKET_PACKET_HPP

#include "cepnet/packet/name.hpp"
#include "cepnet/packet/schema.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace cepnet {

/// Consumer request for named data.
struct Interest
{
  Name name;

  friend bool
  operator==(const Interest&, const Interest&) = default;
};

/// Reply to an Interest, or a complex event delivered as a data object.
struct Data
{
  Name name;
  std::string payload;
  Timestamp ts = 0;

  friend bool
  operator==(const Data&, const Data&) = default;
};

/// One tuple of a producer-initiated stream.
struct DataStream
{
  Name streamName;
  Tuple tuple;

  friend bool
  operator==(const DataStream&, const DataStream&) = default;
};

/// Standing CEP query subscription.
struct AddQueryInterest
{
  std::string query;
  std::uint64_t nonce = 0;

  friend bool
  operator==(const AddQueryInterest&, const AddQueryInterest&) = default;
};

/// Cancels a subscription made with AddQueryInterest.
struct RemoveQueryInterest
{
  std::string query;
  std::uint64_t nonce = 0;

  friend bool
  operator==(const RemoveQueryInterest&, const RemoveQueryInterest&) = default;
};

using Packet = std::variant<Interest, Data, DataStream, AddQueryInterest, RemoveQueryInterest>;

/// Wire type tags, one byte per packet kind.
enum class PacketType : std::uint8_t {
  Interest = 0x01,
  Data = 0x02,
  DataStream = 0x03,
  AddQueryInterest = 0x04,
  RemoveQueryInterest = 0x05,
};

PacketType
type_of(const Packet& p) noexcept;

const char*
to_string(PacketType t) noexcept;

/// Single-line description used by traces and logs.
std::string
summarize(const Packet& p);

} // namespace cepnet

#endif // CEPNET_PACKET_PACKET_HPP
