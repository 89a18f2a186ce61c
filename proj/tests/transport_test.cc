/*
 * Copyright 2026 The ptincl Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <thread>

#include <gtest/gtest.h>

#include "ptincl/crypto/bigint.hpp"
#include "ptincl/error.hpp"
#include "ptincl/transport/channel.hpp"
#include "ptincl/transport/frame.hpp"
#include "ptincl/transport/transcript.hpp"
#include "ptincl/transport/wire.hpp"

namespace ptincl::transport {
namespace {

using namespace std::chrono_literals;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kProtocol;
}

Frame Make(uint8_t tag, size_t size) {
  Frame f{tag, std::vector<uint8_t>(size)};
  for (size_t i = 0; i < size; ++i) f.payload[i] = static_cast<uint8_t>(i * 7);
  return f;
}

TEST(Frame, EncodeDecodeRoundTrip) {
  const Frame f = Make(0x31, 300);
  const auto bytes = EncodeFrame(f);
  ASSERT_EQ(bytes.size(), f.wire_size());
  // Length prefix is big-endian and covers the tag byte.
  EXPECT_EQ(bytes[0], 0);
  EXPECT_EQ(bytes[2], 0x01);
  EXPECT_EQ(bytes[3], 301 - 256);
  size_t used = 0;
  const auto back = DecodeFrame(bytes, &used);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, f);
  EXPECT_EQ(used, bytes.size());
  EXPECT_FALSE(DecodeFrame(std::span(bytes).first(10), &used).has_value());
}

TEST(Frame, RejectsBadLengths) {
  const std::array<uint8_t, 4> zero{0, 0, 0, 0};
  EXPECT_EQ(CodeOf([&] { DecodeLength(zero); }), ErrorCode::kFrameDecode);
  const std::array<uint8_t, 4> huge{0x7f, 0xff, 0xff, 0xff};
  EXPECT_EQ(CodeOf([&] { DecodeLength(huge); }), ErrorCode::kFrameDecode);
}

TEST(Wire, RoundTrip) {
  Writer w;
  w.U8(7).U32(0xdeadbeef).U64(1ull << 40).I64(-5).String("hi");
  w.Int(crypto::BigInt(-300)).Int(crypto::BigInt(5), 16);
  const std::vector<crypto::BigInt> v{1, -2, 3};
  w.Ints(v);
  const std::vector<uint8_t> raw{9, 8};
  w.Bytes(raw);
  const auto bytes = w.Take();
  Reader r(bytes);
  EXPECT_EQ(r.U8(), 7);
  EXPECT_EQ(r.U32(), 0xdeadbeefu);
  EXPECT_EQ(r.U64(), 1ull << 40);
  EXPECT_EQ(r.I64(), -5);
  EXPECT_EQ(r.String(), "hi");
  EXPECT_EQ(r.Int(), -300);
  EXPECT_EQ(r.Int(), 5);
  EXPECT_EQ(r.Ints(), v);
  EXPECT_EQ(r.Bytes(), raw);
  EXPECT_TRUE(r.AtEnd());
  r.End();
}

TEST(Wire, FixedWidthIntegersHaveEqualSize) {
  Writer a, b;
  a.Int(crypto::BigInt(1), 64);
  b.Int(crypto::PowerOfTwo(500), 64);
  EXPECT_EQ(a.data().size(), b.data().size());
}

TEST(Wire, RejectsTruncationAndTrailingBytes) {
  Writer w;
  w.U32(5).String("hello");
  auto bytes = w.Take();
  std::vector<uint8_t> cut(bytes.begin(), bytes.end() - 2);
  Reader r(cut);
  r.U32();
  EXPECT_EQ(CodeOf([&] { r.String(); }), ErrorCode::kFrameDecode);
  bytes.push_back(0);
  Reader t(bytes);
  t.U32();
  t.String();
  EXPECT_EQ(CodeOf([&] { t.End(); }), ErrorCode::kFrameDecode);
  // Sign byte 1 with an empty magnitude is a negative zero.
  const std::vector<uint8_t> negzero{1, 0, 0, 0, 0};
  Reader z(negzero);
  EXPECT_EQ(CodeOf([&] { z.Int(); }), ErrorCode::kFrameDecode);
}

TEST(Transcript, CountsRoundsWithoutHello) {
  Transcript t;
  t.Append(Direction::kAliceToBob, Make(kTagHello, 4));
  t.Append(Direction::kBobToAlice, Make(kTagHello, 4));
  EXPECT_EQ(t.Rounds(), 0u);
  t.Append(Direction::kAliceToBob, Make(0x10, 10));
  t.Append(Direction::kAliceToBob, Make(0x20, 10));
  t.Append(Direction::kBobToAlice, Make(0x11, 3));
  t.Append(Direction::kAliceToBob, Make(0x03, 1));
  EXPECT_EQ(t.Rounds(), 3u);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.Count(Direction::kAliceToBob), 4u);
  EXPECT_EQ(t.CountTag(0x10), 1u);
  EXPECT_EQ(t.Bytes(Direction::kBobToAlice), 9u + 8u);
  EXPECT_EQ(t.TotalBytes(), 9u + 9u + 15u + 15u + 8u + 6u);
  EXPECT_EQ(t.LengthsTo(Direction::kAliceToBob), (std::vector<uint32_t>{9, 8}));
}

TEST(Transcript, JsonLinesRoundTrip) {
  Transcript t;
  t.Append(Direction::kAliceToBob, Make(0x10, 10));
  t.Append(Direction::kBobToAlice, Make(0x11, 3));
  const std::string text = t.ToJsonLines();
  EXPECT_NE(text.find("\"direction\":\"alice->bob\""), std::string::npos);
  const Transcript back = Transcript::FromJsonLines(text);
  EXPECT_TRUE(back.SameFrames(t));
  EXPECT_EQ(back.records(), t.records());
  EXPECT_EQ(t.ToJsonLines(false).find("timestamp"), std::string::npos);
}

TEST(Transcript, MalformedInputIsRejected) {
  Transcript t;
  t.Append(Direction::kAliceToBob, Make(0x10, 10));
  t.Append(Direction::kBobToAlice, Make(0x11, 3));
  const std::string text = t.ToJsonLines();
  EXPECT_EQ(CodeOf([&] { Transcript::FromJsonLines(text.substr(0, text.size() - 9)); }),
            ErrorCode::kMalformedTranscript);
  EXPECT_EQ(CodeOf([&] { Transcript::FromJsonLines(text.substr(0, text.size() - 1)); }),
            ErrorCode::kMalformedTranscript);
  const std::string second = text.substr(text.find('\n') + 1);
  EXPECT_EQ(CodeOf([&] { Transcript::FromJsonLines(second); }),
            ErrorCode::kMalformedTranscript);
  EXPECT_EQ(CodeOf([] { Transcript::FromJsonLines("{\"seq\":0}\n"); }),
            ErrorCode::kMalformedTranscript);
}

TEST(MemoryChannel, DeliversInOrderAndCloses) {
  auto [a, b] = MemoryChannelPair(2s);
  a->Send(Make(1, 3));
  a->Send(Make(2, 0));
  EXPECT_EQ(b->Receive(), Make(1, 3));
  EXPECT_EQ(b->Receive(), Make(2, 0));
  b->Send(Make(3, 1));
  EXPECT_EQ(a->Receive(), Make(3, 1));
  a->Send(Make(4, 1));
  a->Close();
  EXPECT_EQ(b->Receive(), Make(4, 1));
  EXPECT_EQ(CodeOf([&] { b->Receive(); }), ErrorCode::kChannelClosed);
  EXPECT_EQ(CodeOf([&] { b->Send(Make(5, 1)); }), ErrorCode::kChannelClosed);
}

TEST(MemoryChannel, ReceiveTimesOut) {
  auto [a, b] = MemoryChannelPair(50ms);
  EXPECT_EQ(CodeOf([&] { b->Receive(); }), ErrorCode::kNetwork);
}

TEST(RecordingChannel, RecordsBothDirections) {
  auto [a, b] = MemoryChannelPair(2s);
  Transcript t;
  RecordingChannel rec(*a, t, Direction::kBobToAlice);
  rec.Send(Make(0x10, 5));
  b->Send(Make(0x11, 2));
  EXPECT_EQ(rec.Receive(), Make(0x11, 2));
  const auto r = t.records();
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].direction, Direction::kBobToAlice);
  EXPECT_EQ(r[1].direction, Direction::kAliceToBob);
  EXPECT_EQ(r[1].length, 7u);
  EXPECT_EQ(r[0].payload_hash, PayloadHash(Make(0x10, 5).payload));
}

TEST(HostPort, Parsing) {
  const HostPort hp = ParseHostPort("127.0.0.1:8080");
  EXPECT_EQ(hp.host, "127.0.0.1");
  EXPECT_EQ(hp.port, 8080);
  EXPECT_EQ(ParseHostPort("localhost:0").port, 0);
  EXPECT_EQ(CodeOf([] { ParseHostPort("nohost"); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([] { ParseHostPort("h:70000"); }), ErrorCode::kValidation);
  EXPECT_EQ(CodeOf([] { ParseHostPort("h:x1"); }), ErrorCode::kValidation);
}

TEST(Tcp, LoopbackExchange) {
  TcpListener listener(ParseHostPort("127.0.0.1:0"));
  ASSERT_NE(listener.port(), 0);
  std::thread client([port = listener.port()] {
    auto c = TcpConnect({"127.0.0.1", port});
    c->Send(Make(0x10, 100000));
    const Frame f = c->Receive();
    EXPECT_EQ(f, Make(0x11, 0));
    c->Close();
  });
  auto server = listener.Accept(5s);
  EXPECT_EQ(server->Receive(), Make(0x10, 100000));
  server->Send(Make(0x11, 0));
  client.join();
  EXPECT_EQ(CodeOf([&] { server->Receive(); }), ErrorCode::kChannelClosed);
}

TEST(Tcp, OversizeLengthIsRejected) {
  TcpListener listener(ParseHostPort("127.0.0.1:0"));
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  ASSERT_GE(fd, 0);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(listener.port());
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  ASSERT_EQ(::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr), 0);
  const uint8_t header[5] = {0x7f, 0xff, 0xff, 0xff, 0x10};
  ASSERT_EQ(::send(fd, header, sizeof header, 0), 5);
  auto server = listener.Accept(5s);
  EXPECT_EQ(CodeOf([&] { server->Receive(); }), ErrorCode::kFrameDecode);
  ::close(fd);
}

TEST(Tcp, ConnectFailureIsNetworkError) {
  uint16_t port;
  {
    TcpListener l(ParseHostPort("127.0.0.1:0"));
    port = l.port();
  }
  EXPECT_EQ(CodeOf([&] { TcpConnect({"127.0.0.1", port}, 1s); }),
            ErrorCode::kNetwork);
  EXPECT_EQ(CodeOf([] { TcpConnect({"no.such.host.invalid", 1}, 1s); }),
            ErrorCode::kNetwork);
}

TEST(Tcp, AcceptTimesOut) {
  TcpListener listener(ParseHostPort("127.0.0.1:0"));
  EXPECT_EQ(CodeOf([&] { listener.Accept(50ms); }), ErrorCode::kNetwork);
}

}  // namespace
}  // namespace ptincl::transport
