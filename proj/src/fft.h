// Copyright 2026 The cvgup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CVGUP_SRC_FFT_H
#define CVGUP_SRC_FFT_H

#include <cstddef>
#include <span>
#include <vector>

#include "cvgup/grid.h"

namespace cvgup::detail {

// Unnormalized in-place DFT, X_k = sum_j x_j exp(-2 pi i j k / n) for sign < 0.
void dft(std::span<Complex> data, int sign);

// Same for a row-major n0 x n1 array.
void dft2(std::span<Complex> data, std::size_t n0, std::size_t n1, int sign);

// Full linear convolution c_k = sum_i a_i b_{k-i}, length a.size() + b.size() - 1.
std::vector<double> linear_convolution(std::span<const double> a, std::span<const double> b);

}  // namespace cvgup::detail

#endif  // CVGUP_SRC_FFT_H
