// Copyright 2026 The ncrecon Authors
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

#include "ncrecon/io/nmb.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace ncrecon {

static_assert(std::endian::native == std::endian::little,
              "nmb io assumes a little-endian host");

void write_nmb(const std::string& path, const ImageF& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_nmb: cannot open " + path);
  f.write("NMB1", 4);
  uint32_t dims[3] = {uint32_t(img.height), uint32_t(img.width), uint32_t(img.channels)};
  f.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  f.write(reinterpret_cast<const char*>(img.data.data()), std::streamsize(img.data.size() * 4));
  if (!f) throw std::runtime_error("write_nmb: short write to " + path);
}

ImageF read_nmb(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_nmb: cannot open " + path);
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, "NMB1", 4) != 0)
    throw std::runtime_error("read_nmb: bad magic in " + path);
  uint32_t dims[3];
  f.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!f || dims[0] == 0 || dims[1] == 0 || dims[2] == 0 || dims[2] > 16)
    throw std::runtime_error("read_nmb: bad header in " + path);
  ImageF img{int(dims[0]), int(dims[1]), int(dims[2])};
  f.read(reinterpret_cast<char*>(img.data.data()), std::streamsize(img.data.size() * 4));
  if (!f) throw std::runtime_error("read_nmb: truncated data in " + path);
  return img;
}

}  // namespace ncrecon
