// Copyright 2026 The qopt Authors
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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace qopt {

/// A computational basis state over at most 64 qubits. Bit i (0-based) holds
/// qubit i+1, so the integer value is the usual notation n = sum_i b_i 2^(i-1).
using Bits = std::uint64_t;

inline constexpr std::size_t kMaxBits = 64;

constexpr bool test_bit(Bits b, std::size_t i) { return ((b >> i) & 1U) != 0; }

constexpr Bits flip_bit(Bits b, std::size_t i) { return b ^ (Bits{1} << i); }

/// Number of basis states on n qubits. Requires n < 64.
constexpr std::uint64_t basis_size(std::size_t n) { return std::uint64_t{1} << n; }

/// Renders b as "b_1 b_2 ... b_n" with qubit 1 leftmost.
std::string bits_to_string(Bits b, std::size_t n);

/// Inverse of bits_to_string. Throws std::invalid_argument on characters
/// other than '0'/'1' or on strings longer than 64.
Bits bits_from_string(std::string_view text);

}  // namespace qopt
