// Copyright 2026 The Lance Authors. All rights reserved.
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

#include "lance/bench.hpp"
#include "lance/engines.hpp"
#include "lance/lowpgemm.hpp"
#include "lance/matrix.hpp"
#include "lance/metrics.hpp"
#include "lance/parallel.hpp"
#include "lance/quant.hpp"
#include "lance/rng.hpp"
#include "lance/tensor.hpp"
#include "lance/tensor_io.hpp"
#include "lance/verify.hpp"
#include "lance/winograd.hpp"
