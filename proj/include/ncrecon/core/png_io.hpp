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

/// Writes an 8-bit PNG (1 = gray, 3 = RGB channels). Throws std::runtime_error on IO failure.
void write_png(const std::string& path, const ImageU8& img);

/// Reads an 8-bit PNG as gray or RGB (alpha stripped, palette expanded).
ImageU8 read_png(const std::string& path);

}  // namespace ncrecon
