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

#include <condition_variable>
#include <deque>
#include <mutex>

#include "ptincl/error.hpp"
#include "ptincl/transport/channel.hpp"

namespace ptincl::transport {

namespace {

struct Queue {
  std::deque<Frame> frames;
};

struct Shared {
  std::mutex mu;
  std::condition_variable cv;
  Queue queues[2];
  bool closed[2] = {false, false};
};

class MemoryEndpoint : public Channel {
 public:
  MemoryEndpoint(std::shared_ptr<Shared> shared, int side,
                 std::chrono::milliseconds timeout)
      : shared_(std::move(shared)), side_(side), timeout_(timeout) {}
  ~MemoryEndpoint() override { Close(); }

  void Send(const Frame& frame) override {
    if (frame.payload.size() + 1 > kMaxFrameLength) {
      throw Error(ErrorCode::kFrameDecode, "frame exceeds the maximum size");
    }
    std::lock_guard<std::mutex> lock(shared_->mu);
    if (shared_->closed[side_] || shared_->closed[1 - side_]) {
      throw Error(ErrorCode::kChannelClosed, "channel endpoint closed");
    }
    shared_->queues[1 - side_].frames.push_back(frame);
    shared_->cv.notify_all();
  }

  Frame Receive() override {
    std::unique_lock<std::mutex> lock(shared_->mu);
    auto& q = shared_->queues[side_].frames;
    const bool ready = shared_->cv.wait_for(lock, timeout_, [&] {
      return !q.empty() || shared_->closed[side_] || shared_->closed[1 - side_];
    });
    if (!q.empty()) {
      Frame f = std::move(q.front());
      q.pop_front();
      return f;
    }
    if (!ready) throw Error(ErrorCode::kNetwork, "receive timed out");
    throw Error(ErrorCode::kChannelClosed, "channel endpoint closed");
  }

  void Close() override {
    std::lock_guard<std::mutex> lock(shared_->mu);
    shared_->closed[side_] = true;
    shared_->cv.notify_all();
  }

 private:
  std::shared_ptr<Shared> shared_;
  int side_;
  std::chrono::milliseconds timeout_;
};

}  // namespace

std::pair<std::unique_ptr<Channel>, std::unique_ptr<Channel>> MemoryChannelPair(
    std::chrono::milliseconds receive_timeout) {
  auto shared = std::make_shared<Shared>();
  return {std::make_unique<MemoryEndpoint>(shared, 0, receive_timeout),
          std::make_unique<MemoryEndpoint>(shared, 1, receive_timeout)};
}

}  // namespace ptincl::transport
