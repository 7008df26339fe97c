// Copyright 2026 The oneshot Authors. All rights reserved.
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

#ifndef ONESHOT_HASH_HPP_
#define ONESHOT_HASH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oneshot/errors.hpp"

namespace oneshot {

// Affine hash family over GF(2^k): seed (a, b) with a != 0 maps x to the
// top ell bits of a*x + b in the field. Any pair of distinct inputs
// collides with probability at most 2^-ell over the seed, and each member
// is a truncated bijection, so hashing the full field is exactly balanced.
class HashFamily {
 public:
  // field_bits = k, output_bits = ell <= k. Throws InvalidParameter when
  // the field degree is outside the shipped table (1..16) or ell > k.
  HashFamily(unsigned field_bits, unsigned output_bits);

  // Smallest family able to hash `alphabet` symbols to `output_bits` bits.
  static HashFamily for_alphabet(std::size_t alphabet, unsigned output_bits);

  std::uint64_t family_size() const;  // (2^k - 1) * 2^k seeds
  unsigned field_bits() const { return k_; }
  unsigned output_bits() const { return ell_; }

  std::uint32_t evaluate(std::uint64_t seed, std::uint32_t x) const;

  // Collision probability over the whole family for a fixed pair; exposed
  // so the two-universal property can be certified exhaustively.
  double collision_probability(std::uint32_t x1, std::uint32_t x2) const;

  std::string describe() const;

 private:
  unsigned k_;
  unsigned ell_;
  std::uint32_t modulus_;  // field polynomial, degree k
};

// Product in GF(2^k) with the given modulus polynomial.
std::uint32_t gf_multiply(std::uint32_t a, std::uint32_t b, unsigned k, std::uint32_t modulus);

// Modulus polynomial of degree k from the shipped table (k in 1..16).
std::uint32_t gf_modulus(unsigned k);

}  // namespace oneshot

#endif  // ONESHOT_HASH_HPP_
