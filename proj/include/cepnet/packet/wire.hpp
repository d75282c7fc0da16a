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

#ifndef CEPNET_PACKET_WIRE_HPP
#define CEPNET_PACKET_WIRE_HPP

#include "cepnet/packet/packet.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cepnet {

using Bytes = std::vector<std::uint8_t>;

/// Raised by decode_packet on truncated input, unknown tags or bad counts.
class MalformedPacket : public Error
{
public:
  using Error::Error;
};

/// Length-prefixed tagged encoding; see docs/protocol.md for the byte layout.
Bytes
encode_packet(const Packet& p);

/// Inverse of encode_packet. The input must hold exactly one packet.
Packet
decode_packet(std::span<const std::uint8_t> bytes);

std::string
to_hex(std::span<const std::uint8_t> bytes);

} // namespace cepnet

#endif // CEPNET_PACKET_WIRE_HPP
