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

#pragma once

#include <string>

#include "ncrecon/core/image.hpp"

namespace ncrecon {

// Float-map container (.nmb): "NMB1" magic, then u32 height, width,
// channels, then height*width*channels float32 values, row-major,
// channel-interleaved. All integers and floats are little-endian.

void write_nmb(const std::string& path, const ImageF& img);
ImageF read_nmb(const std::string& path);

}  // namespace ncrecon
