// Copyright 2026 The spinotto Authors
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

#include "pair_flip.hpp"
#include "spinotto/dynamics.hpp"

namespace spinotto::detail {

/** In-place RK4 evolution of a block density over one stroke. */
EvolutionReport evolve_blocks(BlockDensity& rho, const ParityBasis& basis,
                              const ChainParams& params, const DriveProtocol& protocol,
                              const EvolutionConfig& cfg);

}  // namespace spinotto::detail
