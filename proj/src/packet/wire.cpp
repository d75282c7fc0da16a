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

#include "cepnet/packet/wire.hpp"

#include <bit>
#include <cstring>
#include <limits>

namespace cepnet {

namespace {

constexpr std::uint8_t VALUE_NUMBER = 0x00;
constexpr std::uint8_t VALUE_TEXT = 0x01;

class Writer
{
public:
  void
  u8(std::uint8_t v)
  {
    m_out.push_back(v);
  }

  void
  be(std::uint64_t v, int width)
  {
    for (int i = width - 1; i >= 0; --i) {
      m_out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  }

  void
  text(std::string_view s)
  {
    be(s.size(), 4);
    m_out.insert(m_out.end(), s.begin(), s.end());
  }

  void
  name(const Name& n)
  {
    be(n.size(), 2);
    for (const auto& c : n.components()) {
      text(c);
    }
  }

  void
  value(const Value& v)
  {
    if (const double* d = std::get_if<double>(&v)) {
      u8(VALUE_NUMBER);
      be(std::bit_cast<std::uint64_t>(*d), 8);
    }
    else {
      u8(VALUE_TEXT);
      text(std::get<std::string>(v));
    }
  }

  void
  tuple(const Tuple& t)
  {
    be(static_cast<std::uint64_t>(t.ts), 8);
    text(t.schemaId);
    be(t.values.size(), 4);
    for (const auto& v : t.values) {
      value(v);
    }
  }

  Bytes&
  bytes() noexcept
  {
    return m_out;
  }

private:
  Bytes m_out;
};

bool
is_utf8(std::string_view s)
{
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    }
    else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    }
    else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    }
    else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    }
    else {
      return false;
    }
    if (i + extra >= s.size()) {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        return false;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr std::uint32_t minimum[] = {0, 0x80, 0x800, 0x10000};
    if (cp < minimum[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

class Reader
{
public:
  explicit
  Reader(std::span<const std::uint8_t> in)
    : m_in(in)
  {
  }

  std::size_t
  remaining() const noexcept
  {
    return m_in.size() - m_pos;
  }

  std::uint8_t
  u8()
  {
    need(1);
    return m_in[m_pos++];
  }

  std::uint64_t
  be(int width)
  {
    need(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v = (v << 8) | m_in[m_pos++];
    }
    return v;
  }

  std::string
  bytes()
  {
    auto len = be(4);
    need(len);
    std::string s(reinterpret_cast<const char*>(m_in.data() + m_pos), len);
    m_pos += len;
    return s;
  }

  std::string
  text()
  {
    auto s = bytes();
    if (!is_utf8(s)) {
      throw MalformedPacket("text field is not valid UTF-8");
    }
    return s;
  }

  Name
  name()
  {
    auto count = be(2);
    // every component costs at least its 4-byte length prefix
    if (count == 0 || count * 4 > remaining()) {
      throw MalformedPacket("bad name component count");
    }
    std::vector<std::string> components;
    components.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      components.push_back(text());
    }
    try {
      return Name(std::move(components));
    }
    catch (const Name::Error& e) {
      throw MalformedPacket(std::string("invalid name: ") + e.what());
    }
  }

  Value
  value()
  {
    switch (u8()) {
      case VALUE_NUMBER:
        return std::bit_cast<double>(be(8));
      case VALUE_TEXT:
        return text();
      default:
        throw MalformedPacket("unknown value tag");
    }
  }

  Tuple
  tuple()
  {
    Tuple t;
    t.ts = static_cast<Timestamp>(be(8));
    t.schemaId = text();
    auto count = be(4);
    if (count * 2 > remaining()) {
      throw MalformedPacket("bad value count");
    }
    t.values.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      t.values.push_back(value());
    }
    return t;
  }

private:
  void
  need(std::uint64_t n) const
  {
    if (n > remaining()) {
      throw MalformedPacket("truncated packet");
    }
  }

  std::span<const std::uint8_t> m_in;
  std::size_t m_pos = 0;
};

struct BodyEncoder
{
  Writer& w;

  void
  operator()(const Interest& i) const
  {
    w.name(i.name);
  }

  void
  operator()(const Data& d) const
  {
    w.name(d.name);
    w.text(d.payload);
    w.be(static_cast<std::uint64_t>(d.ts), 8);
  }

  void
  operator()(const DataStream& s) const
  {
    w.name(s.streamName);
    w.tuple(s.tuple);
  }

  void
  operator()(const AddQueryInterest& q) const
  {
    w.text(q.query);
    w.be(q.nonce, 8);
  }

  void
  operator()(const RemoveQueryInterest& q) const
  {
    w.text(q.query);
    w.be(q.nonce, 8);
  }
};

} // namespace

Bytes
encode_packet(const Packet& p)
{
  Writer body;
  std::visit(BodyEncoder{body}, p);
  Writer out;
  out.u8(static_cast<std::uint8_t>(type_of(p)));
  out.be(body.bytes().size(), 4);
  auto& b = out.bytes();
  b.insert(b.end(), body.bytes().begin(), body.bytes().end());
  return std::move(out.bytes());
}

Packet
decode_packet(std::span<const std::uint8_t> bytes)
{
  if (bytes.empty()) {
    throw MalformedPacket("empty input");
  }
  Reader header(bytes);
  auto tag = header.u8();
  auto length = header.be(4);
  if (length != header.remaining()) {
    throw MalformedPacket("length prefix does not match packet size");
  }
  Reader r(bytes.subspan(5));
  Packet p = [&]() -> Packet {
    switch (static_cast<PacketType>(tag)) {
      case PacketType::Interest:
        return Interest{r.name()};
      case PacketType::Data: {
        auto name = r.name();
        auto payload = r.bytes();
        auto ts = static_cast<Timestamp>(r.be(8));
        return Data{std::move(name), std::move(payload), ts};
      }
      case PacketType::DataStream: {
        auto name = r.name();
        return DataStream{std::move(name), r.tuple()};
      }
      case PacketType::AddQueryInterest: {
        auto q = r.text();
        return AddQueryInterest{std::move(q), r.be(8)};
      }
      case PacketType::RemoveQueryInterest: {
        auto q = r.text();
        return RemoveQueryInterest{std::move(q), r.be(8)};
      }
    }
    throw MalformedPacket("unknown packet type tag " + std::to_string(tag));
  }();
  if (r.remaining() != 0) {
    throw MalformedPacket("trailing bytes after packet body");
  }
  return p;
}

std::string
to_hex(std::span<const std::uint8_t> bytes)
{
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0x0F];
  }
  return out;
}

} // namespace cepnet
