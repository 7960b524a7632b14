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

#include "objectaug/inpaint_client.hpp"

#include <openssl/evp.h>

#include <regex>

#include "httplib.h"
#include "json.hpp"
#include "objectaug/png_codec.hpp"

namespace objectaug {

Endpoint parse_endpoint(std::string_view url) {
  static const std::regex kUrl(
      R"(^(http://[A-Za-z0-9.\-]+|http://\[[0-9A-Fa-f:]+\])(:[0-9]{1,5})?(/[^\s?#]*)?$)");
  std::cmatch m;
  if (!std::regex_match(url.data(), url.data() + url.size(), m, kUrl)) {
    throw ValidationError("malformed inpaint endpoint URL '" +
                          std::string(url) + "' (expected http://host[:port])");
  }
  if (m[2].matched && std::stoi(m[2].str().substr(1)) > 65535) {
    throw ValidationError("inpaint endpoint port out of range");
  }
  Endpoint ep;
  ep.origin = m[1].str() + m[2].str();
  ep.base_path = m[3].str();
  while (!ep.base_path.empty() && ep.base_path.back() == '/') {
    ep.base_path.pop_back();
  }
  return ep;
}

RequestGate::RequestGate(int limit) : limit_(limit), available_(limit) {
  if (limit < 1) throw ValidationError("connection limit must be >= 1");
}

void RequestGate::acquire() {
  std::unique_lock lock(mutex_);
  cv_.wait(lock, [this] { return available_ > 0; });
  --available_;
}

void RequestGate::release() {
  {
    std::lock_guard lock(mutex_);
    ++available_;
  }
  cv_.notify_one();
}

std::string base64_encode(std::span<const std::uint8_t> bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                bytes.data(), static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) {
    throw DecodeError("base64 length is not a multiple of 4");
  }
  std::vector<std::uint8_t> out(3 * (text.size() / 4));
  const int n = EVP_DecodeBlock(
      out.data(), reinterpret_cast<const unsigned char*>(text.data()),
      static_cast<int>(text.size()));
  if (n < 0) throw DecodeError("invalid base64 payload");
  // EVP_DecodeBlock counts padding as zero bytes.
  std::size_t padding = 0;
  for (auto it = text.rbegin(); it != text.rend() && *it == '=' && padding < 2;
       ++it) {
    ++padding;
  }
  out.resize(static_cast<std::size_t>(n) - padding);
  return out;
}

std::string make_inpaint_request(const RgbImage& image,
                                 const BinaryMask& hole) {
  if (!image.same_dims(hole)) {
    throw DimensionMismatch("inpaint image and hole differ in size");
  }
  LabelMap wire_mask(hole.width(), hole.height(), 0);
  for (std::size_t i = 0; i < hole.pixel_count(); ++i) {
    wire_mask.data()[i] = hole.data()[i] ? 255 : 0;
  }
  nlohmann::json body;
  body["image"] = base64_encode(encode_png(image));
  body["mask"] = base64_encode(encode_png(wire_mask));
  return body.dump();
}

RgbImage parse_inpaint_response(std::string_view body, int width,
                                int height) {
  nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("image") ||
      !doc["image"].is_string()) {
    throw ExternalProtocol("inpaint response lacks a string 'image' field");
  }
  RgbImage image;
  try {
    image = decode_rgb_png(base64_decode(doc["image"].get<std::string>()));
  } catch (const DecodeError& e) {
    throw ExternalProtocol(std::string("inpaint response image: ") + e.what());
  }
  if (image.width() != width || image.height() != height) {
    throw ExternalProtocol(
        "inpaint response is " + std::to_string(image.width()) + "x" +
        std::to_string(image.height()) + ", expected " +
        std::to_string(width) + "x" + std::to_string(height));
  }
  return image;
}

RgbImage request_inpaint(const ExternalFill& service, const RgbImage& image,
                         const BinaryMask& hole) {
  const Endpoint ep = parse_endpoint(service.endpoint);
  const std::string body = make_inpaint_request(image, hole);

  httplib::Client client(ep.origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
      service.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      service.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  if (service.gate) service.gate->acquire();
  httplib::Result res =
      client.Post(ep.base_path + "/v1/inpaint", body, "application/json");
  if (service.gate) service.gate->release();

  if (!res) {
    throw ExternalUnavailable("inpaint service " + service.endpoint + ": " +
                              httplib::to_string(res.error()));
  }
  if (res->status == 503) {
    throw ExternalUnavailable("inpaint service not ready (503)");
  }
  if (res->status != 200) {
    std::string reason;
    auto err = nlohmann::json::parse(res->body, nullptr, false);
    if (err.is_object() && err.contains("error") && err["error"].is_string()) {
      reason = ": " + err["error"].get<std::string>();
    }
    throw ExternalProtocol("inpaint service returned HTTP " +
                           std::to_string(res->status) + reason);
  }
  return parse_inpaint_response(res->body, image.width(), image.height());
}

}  // namespace objectaug
