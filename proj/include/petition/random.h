// Copyright 2026 The Authors.
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

// Portable sampling helpers over std::mt19937_64. The standard distribution
// classes are implementation-defined, so seeded output would differ between
// standard libraries; these only consume raw engine words.

#ifndef PETITION_RANDOM_H_
#define PETITION_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>

namespace petition {

using Rng = std::mt19937_64;

// Uniform in [0, n). n must be positive.
std::uint64_t UniformIndex(Rng& rng, std::uint64_t n);

// Uniform in [0, 1) with 53 random bits.
double UniformReal(Rng& rng);

bool Bernoulli(Rng& rng, double p);

// Index drawn with probability proportional to weights[i]. At least one
// weight must be positive.
std::size_t WeightedIndex(Rng& rng, std::span<const std::uint64_t> weights);

}  // namespace petition

#endif  // PETITION_RANDOM_H_
