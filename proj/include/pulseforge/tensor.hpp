// Copyright 2026 The Pulseforge Authors
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

#pragma once

#include <vector>

#include "pulseforge/linalg.hpp"

// Dense tensor-product helpers. Node 0 is the most significant factor, so a
// basis index is sum_k i_k * prod_{j > k} dims[j].
namespace pulseforge::tensor {

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// H += op acting on `slots` (in the given order) and identity elsewhere.
void add_embedded(CMatrix& H, const CMatrix& op, const std::vector<int>& slots, const std::vector<int>& dims);

/// Returns (1 x .. x A x .. x 1)^dag M (1 x .. x A x .. x 1) with A on `slot`.
CMatrix conjugate_slot(const CMatrix& M, const CMatrix& A, int slot, const std::vector<int>& dims);

}  // namespace pulseforge::tensor
