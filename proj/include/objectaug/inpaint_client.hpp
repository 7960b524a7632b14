// Copyright 2026 The objectaug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OBJECTAUG_INPAINT_CLIENT_HPP_
#define OBJECTAUG_INPAINT_CLIENT_HPP_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "objectaug/raster.hpp"

// Client side of the inpainting wire protocol:
//
//   POST {endpoint}/v1/inpaint
//   {"image": <base64 RGB PNG>, "mask": <base64 gray PNG, 255 = hole>}
//   200 {"image": <base64 RGB PNG, same size>}
//   400 {"error": "..."}   bad dimensions or payload
//   503                    model not ready

namespace objectaug {

// An endpoint URL split into what the HTTP client connects to and the path
// prefix the protocol routes hang off.
struct Endpoint {
  std::string origin;     // "http://host:port"
  std::string base_path;  // "" or "/prefix" without trailing slash
};

// Accepts http://host[:port][/path]. Throws ValidationError otherwise.
Endpoint parse_endpoint(std::string_view url);

// Caps the number of requests in flight to one service.
class RequestGate {
 public:
  explicit RequestGate(int limit);
  RequestGate(const RequestGate&) = delete;
  RequestGate& operator=(const RequestGate&) = delete;

  void acquire();
  void release();

  int limit() const { return limit_; }

 private:
  std::mutex mutex_;
  std::condition_variable cv_;
  int limit_;
  int available_;
};

struct ExternalFill {
  std::string endpoint;
  std::chrono::milliseconds timeout{30000};
  std::shared_ptr<RequestGate> gate;  // optional
};

std::string base64_encode(std::span<const std::uint8_t> bytes);
// Throws DecodeError on malformed input.
std::vector<std::uint8_t> base64_decode(std::string_view text);

std::string make_inpaint_request(const RgbImage& image,
                                 const BinaryMask& hole);

// Throws ExternalProtocol if the body is malformed or the returned image
// does not measure width x height.
RgbImage parse_inpaint_response(std::string_view body, int width,
                                int height);

// Sends one request and returns the service's image as-is (no compositing).
// Throws ExternalUnavailable or ExternalProtocol.
RgbImage request_inpaint(const ExternalFill& service, const RgbImage& image,
                         const BinaryMask& hole);

}  // namespace objectaug

#endif  // OBJECTAUG_INPAINT_CLIENT_HPP_
