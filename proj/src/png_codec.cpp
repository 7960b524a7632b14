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

#include "objectaug/png_codec.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <fstream>
#include <string>

namespace objectaug {
namespace {

// libpng reports errors by longjmp. Every object with a destructor is
// created before setjmp in the functions below, so unwinding skips nothing.

struct ReadSource {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t offset;
  char message[256];
};

struct WriteSink {
  std::vector<std::uint8_t>* out;
  char message[256];
};

void on_png_error(png_structp png, png_const_charp msg) {
  auto* buffer = static_cast<char*>(png_get_error_ptr(png));
  std::strncpy(buffer, msg, 255);
  buffer[255] = '\0';
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

void read_from_memory(png_structp png, png_bytep out, png_size_t length) {
  auto* src = static_cast<ReadSource*>(png_get_io_ptr(png));
  if (src->offset + length > src->size) {
    png_error(png, "unexpected end of PNG data");
  }
  std::memcpy(out, src->data + src->offset, length);
  src->offset += length;
}

void write_to_memory(png_structp png, png_bytep data, png_size_t length) {
  auto* sink = static_cast<WriteSink*>(png_get_io_ptr(png));
  sink->out->insert(sink->out->end(), data, data + length);
}

void flush_noop(png_structp) {}

enum class DecodeMode { kRgb, kIndex };

struct Decoded {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
  std::vector<png_bytep> rows;
};

// Returns an empty string on success, else the failure reason.
std::string decode(std::span<const std::uint8_t> bytes, DecodeMode mode,
                   Decoded& out) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    return "not a PNG file";
  }
  ReadSource src{bytes.data(), bytes.size(), 0, {}};
  std::string reject;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, src.message,
                                           on_png_error, on_png_warning);
  if (png == nullptr) return "png_create_read_struct failed";
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return "png_create_info_struct failed";
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return src.message;
  }
  png_set_read_fn(png, &src, read_from_memory);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  int channels = 3;
  if (mode == DecodeMode::kRgb) {
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
  } else {
    channels = 1;
    if (color_type != PNG_COLOR_TYPE_GRAY &&
        color_type != PNG_COLOR_TYPE_PALETTE) {
      reject = "mask is not single-channel (gray or palette)";
    } else if (bit_depth > 8) {
      reject = "mask bit depth exceeds 8";
    }
    if (!reject.empty()) {
      png_destroy_read_struct(&png, &info, nullptr);
      return reject;
    }
    // Unpack sub-byte samples one per byte, keeping raw values.
    png_set_packing(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  out.width = static_cast<int>(png_get_image_width(png, info));
  out.height = static_cast<int>(png_get_image_height(png, info));
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  if (rowbytes != static_cast<std::size_t>(out.width) * channels) {
    png_destroy_read_struct(&png, &info, nullptr);
    return "unexpected row layout after transforms";
  }
  out.pixels.resize(rowbytes * out.height);
  out.rows.resize(out.height);
  for (int y = 0; y < out.height; ++y) {
    out.rows[y] = out.pixels.data() + rowbytes * y;
  }
  png_read_image(png, out.rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return {};
}

std::string encode(int width, int height, int color_type,
                   std::span<const std::uint8_t> pixels, int channels,
                   std::vector<std::uint8_t>& out) {
  WriteSink sink{&out, {}};
  std::vector<png_const_bytep> rows(height);
  for (int y = 0; y < height; ++y) {
    rows[y] = pixels.data() + static_cast<std::size_t>(width) * channels * y;
  }
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING,
                                            sink.message, on_png_error,
                                            on_png_warning);
  if (png == nullptr) return "png_create_write_struct failed";
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    return "png_create_info_struct failed";
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return sink.message;
  }
  png_set_write_fn(png, &sink, write_to_memory, flush_noop);
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, const_cast<png_bytepp>(rows.data()));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return {};
}

}  // namespace

RgbImage decode_rgb_png(std::span<const std::uint8_t> bytes) {
  Decoded d;
  if (std::string err = decode(bytes, DecodeMode::kRgb, d); !err.empty()) {
    throw DecodeError("image: " + err);
  }
  return RgbImage(d.width, d.height, std::move(d.pixels));
}

LabelMap decode_index_png(std::span<const std::uint8_t> bytes) {
  Decoded d;
  if (std::string err = decode(bytes, DecodeMode::kIndex, d); !err.empty()) {
    throw DecodeError("mask: " + err);
  }
  return LabelMap(d.width, d.height, std::move(d.pixels));
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
  std::vector<std::uint8_t> out;
  if (std::string err = encode(image.width(), image.height(),
                               PNG_COLOR_TYPE_RGB, image.data(), 3, out);
      !err.empty()) {
    throw IoError("PNG encode failed: " + err);
  }
  return out;
}

std::vector<std::uint8_t> encode_png(const LabelMap& gray) {
  std::vector<std::uint8_t> out;
  if (std::string err = encode(gray.width(), gray.height(),
                               PNG_COLOR_TYPE_GRAY, gray.data(), 1, out);
      !err.empty()) {
    throw IoError("PNG encode failed: " + err);
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace objectaug
