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

#include "ncrecon/core/image.hpp"

namespace ncrecon {

/// Canny-style texture intensity: Gaussian blur, Sobel gradients,
/// non-maximum suppression, hysteresis linking. Surviving pixels keep
/// their gradient magnitude; everything else is zero.
ImageF texture_intensity(const ImageF& image, float low_thresh, float high_thresh,
                         float sigma = 1.4f);

/// Grayscale dilation (running max over a (2r+1)^2 square window).
ImageF dilate_max(const ImageF& map, int radius);

/// Pixels whose dilated intensity reaches l_i. Thresholding the dilated
/// map is equivalent to binary-dilating the thresholded map.
MaskImage informative_mask(const ImageF& intensity, float l_i, int dilation);

}  // namespace ncrecon
