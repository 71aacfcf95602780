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

#include "qopt/bits.hpp"

#include <stdexcept>

namespace qopt {

std::string bits_to_string(Bits b, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (test_bit(b, i)) out[i] = '1';
  }
  return out;
}

Bits bits_from_string(std::string_view text) {
  if (text.size() > kMaxBits) {
    throw std::invalid_argument("bitstring longer than 64 bits");
  }
  Bits b = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      b |= Bits{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring contains '" + std::string(1, text[i]) + "'");
    }
  }
  return b;
}

}  // namespace qopt
