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

#ifndef PTINCL_TRANSPORT_CHANNEL_HPP_
#define PTINCL_TRANSPORT_CHANNEL_HPP_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "ptincl/transport/frame.hpp"
#include "ptincl/transport/transcript.hpp"

namespace ptincl::transport {

inline constexpr std::chrono::seconds kDefaultReceiveTimeout{300};

// Duplex, reliable, FIFO frame channel. One sending and one receiving
// context may use an endpoint concurrently.
class Channel {
 public:
  virtual ~Channel() = default;

  // Throws Error(kChannelClosed) or Error(kNetwork).
  virtual void Send(const Frame& frame) = 0;
  // Blocks until a frame arrives. Throws Error(kChannelClosed) if the peer
  // closed, Error(kFrameDecode) on corrupt input, Error(kNetwork) on
  // timeout or I/O failure.
  virtual Frame Receive() = 0;
  virtual void Close() = 0;
};

// Records every frame passing through `inner` into `transcript`. Frames
// sent through this endpoint are logged with direction `outgoing`.
class RecordingChannel : public Channel {
 public:
  RecordingChannel(Channel& inner, Transcript& transcript, Direction outgoing)
      : inner_(inner), transcript_(transcript), outgoing_(outgoing) {}

  void Send(const Frame& frame) override;
  Frame Receive() override;
  void Close() override { inner_.Close(); }

 private:
  Channel& inner_;
  Transcript& transcript_;
  Direction outgoing_;
};

// Two connected in-memory endpoints.
std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> MemoryChannelPair(
    std::chrono::milliseconds receive_timeout = kDefaultReceiveTimeout);

struct HostPort {
  std::string host;
  uint16_t port = 0;
};

// Parses "host:port". Throws Error(kValidation).
HostPort ParseHostPort(const std::string& text);

class TcpListener {
 public:
  // Port 0 picks an ephemeral port. Throws Error(kNetwork).
  explicit TcpListener(const HostPort& addr);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  uint16_t port() const { return port_; }
  std::unique_ptr<Channel> Accept(
      std::chrono::milliseconds receive_timeout = kDefaultReceiveTimeout);
  void Close();

 private:
  int fd_ = -1;
  uint16_t port_ = 0;
};

// Retries refused connections until `connect_timeout` elapses.
std::unique_ptr<Channel> TcpConnect(
    const HostPort& addr,
    std::chrono::milliseconds connect_timeout = std::chrono::seconds(10),
    std::chrono::milliseconds receive_timeout = kDefaultReceiveTimeout);

}  // namespace ptincl::transport

#endif  // PTINCL_TRANSPORT_CHANNEL_HPP_
