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
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <thread>

#include "ptincl/error.hpp"
#include "ptincl/transport/channel.hpp"

namespace ptincl::transport {

namespace {

[[noreturn]] void ThrowErrno(const std::string& what) {
  throw Error(ErrorCode::kNetwork, what + ": " + std::strerror(errno));
}

void SetReceiveTimeout(int fd, std::chrono::milliseconds timeout) {
  timeval tv{};
  tv.tv_sec = static_cast<time_t>(timeout.count() / 1000);
  tv.tv_usec = static_cast<suseconds_t>((timeout.count() % 1000) * 1000);
  setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
  const int one = 1;
  setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

class TcpEndpoint : public Channel {
 public:
  explicit TcpEndpoint(int fd) : fd_(fd) {}
  ~TcpEndpoint() override {
    Close();
    ::close(fd_);
  }

  void Send(const Frame& frame) override {
    const std::vector<uint8_t> bytes = EncodeFrame(frame);
    std::lock_guard<std::mutex> lock(send_mu_);
    size_t sent = 0;
    while (sent < bytes.size()) {
      const ssize_t n =
          ::send(fd_, bytes.data() + sent, bytes.size() - sent, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        if (errno == EPIPE || errno == ECONNRESET) {
          throw Error(ErrorCode::kChannelClosed, "connection closed by peer");
        }
        ThrowErrno("send failed");
      }
      sent += static_cast<size_t>(n);
    }
  }

  Frame Receive() override {
    std::lock_guard<std::mutex> lock(recv_mu_);
    uint8_t header[kFrameHeaderSize];
    if (!ReadExact(header, sizeof(header), true)) {
      throw Error(ErrorCode::kChannelClosed, "connection closed by peer");
    }
    uint32_t len = 0;
    try {
      len = DecodeLength(std::span<const uint8_t, kFrameHeaderSize>(header));
    } catch (...) {
      Close();
      throw;
    }
    std::vector<uint8_t> body(len);
    if (!ReadExact(body.data(), body.size(), false)) {
      throw Error(ErrorCode::kFrameDecode, "connection closed mid-frame");
    }
    Frame f;
    f.tag = body[0];
    f.payload.assign(body.begin() + 1, body.end());
    return f;
  }

  void Close() override { ::shutdown(fd_, SHUT_RDWR); }

 private:
  // False on orderly EOF before the first byte when `eof_ok`.
  bool ReadExact(uint8_t* out, size_t len, bool eof_ok) {
    size_t got = 0;
    while (got < len) {
      const ssize_t n = ::recv(fd_, out + got, len - got, 0);
      if (n == 0) {
        if (eof_ok && got == 0) return false;
        throw Error(ErrorCode::kFrameDecode, "connection closed mid-frame");
      }
      if (n < 0) {
        if (errno == EINTR) continue;
        if (errno == EAGAIN || errno == EWOULDBLOCK) {
          throw Error(ErrorCode::kNetwork, "receive timed out");
        }
        if (errno == ECONNRESET) {
          throw Error(ErrorCode::kChannelClosed, "connection reset by peer");
        }
        ThrowErrno("recv failed");
      }
      got += static_cast<size_t>(n);
    }
    return true;
  }

  int fd_;
  std::mutex send_mu_;
  std::mutex recv_mu_;
};

struct AddrInfoDeleter {
  void operator()(addrinfo* p) const { freeaddrinfo(p); }
};

std::unique_ptr<addrinfo, AddrInfoDeleter> Resolve(const HostPort& addr,
                                                   bool passive) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  if (passive) hints.ai_flags = AI_PASSIVE;
  addrinfo* res = nullptr;
  const std::string port = std::to_string(addr.port);
  const int rc = getaddrinfo(addr.host.c_str(), port.c_str(), &hints, &res);
  if (rc != 0) {
    throw Error(ErrorCode::kNetwork,
                "cannot resolve " + addr.host + ": " + gai_strerror(rc));
  }
  return std::unique_ptr<addrinfo, AddrInfoDeleter>(res);
}

}  // namespace

TcpListener::TcpListener(const HostPort& addr) {
  auto res = Resolve(addr, true);
  for (addrinfo* ai = res.get(); ai != nullptr; ai = ai->ai_next) {
    const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd < 0) continue;
    const int one = 1;
    setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd, ai->ai_addr, ai->ai_addrlen) == 0 && ::listen(fd, 4) == 0) {
      fd_ = fd;
      break;
    }
    ::close(fd);
  }
  if (fd_ < 0) ThrowErrno("cannot listen on " + addr.host + ":" +
                          std::to_string(addr.port));
  sockaddr_storage ss{};
  socklen_t len = sizeof(ss);
  getsockname(fd_, reinterpret_cast<sockaddr*>(&ss), &len);
  if (ss.ss_family == AF_INET) {
    port_ = ntohs(reinterpret_cast<sockaddr_in*>(&ss)->sin_port);
  } else {
    port_ = ntohs(reinterpret_cast<sockaddr_in6*>(&ss)->sin6_port);
  }
}

TcpListener::~TcpListener() { Close(); }

void TcpListener::Close() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
}

std::unique_ptr<Channel> TcpListener::Accept(
    std::chrono::milliseconds receive_timeout) {
  pollfd p{fd_, POLLIN, 0};
  const int rc = ::poll(&p, 1, static_cast<int>(receive_timeout.count()));
  if (rc == 0) throw Error(ErrorCode::kNetwork, "accept timed out");
  if (rc < 0) ThrowErrno("poll failed");
  const int fd = ::accept(fd_, nullptr, nullptr);
  if (fd < 0) ThrowErrno("accept failed");
  SetReceiveTimeout(fd, receive_timeout);
  return std::make_unique<TcpEndpoint>(fd);
}

std::unique_ptr<Channel> TcpConnect(const HostPort& addr,
                                    std::chrono::milliseconds connect_timeout,
                                    std::chrono::milliseconds receive_timeout) {
  const auto deadline = std::chrono::steady_clock::now() + connect_timeout;
  auto res = Resolve(addr, false);
  while (true) {
    int last_errno = 0;
    for (addrinfo* ai = res.get(); ai != nullptr; ai = ai->ai_next) {
      const int fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
      if (fd < 0) continue;
      if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) {
        SetReceiveTimeout(fd, receive_timeout);
        return std::make_unique<TcpEndpoint>(fd);
      }
      last_errno = errno;
      ::close(fd);
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      errno = last_errno;
      ThrowErrno("cannot connect to " + addr.host + ":" +
                 std::to_string(addr.port));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace ptincl::transport
