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

#include "oneshot/hash.hpp"

namespace oneshot {
namespace {

// Irreducible polynomials over GF(2), one per degree. Certified by the
// test suite via trial division.
constexpr std::uint32_t kModuli[17] = {
    0,
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11B,    // x^8 + x^4 + x^3 + x + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x402B,   // x^14 + x^5 + x^3 + x + 1
    0x8003,   // x^15 + x + 1
    0x1002B,  // x^16 + x^5 + x^3 + x + 1
};

}  // namespace

std::uint32_t gf_modulus(unsigned k) {
  if (k < 1 || k > 16) {
    throw_error(ErrorKind::kInvalidParameter,
                "field degree " + std::to_string(k) + " outside 1..16");
  }
  return kModuli[k];
}

std::uint32_t gf_multiply(std::uint32_t a, std::uint32_t b, unsigned k, std::uint32_t modulus) {
  std::uint64_t acc = 0;
  std::uint64_t aa = a;
  while (b) {
    if (b & 1u) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  // Reduce the carry-less product modulo the field polynomial.
  for (int bit = 2 * static_cast<int>(k) - 2; bit >= static_cast<int>(k); --bit) {
    if (acc & (std::uint64_t{1} << bit)) {
      acc ^= static_cast<std::uint64_t>(modulus) << (bit - static_cast<int>(k));
    }
  }
  return static_cast<std::uint32_t>(acc);
}

HashFamily::HashFamily(unsigned field_bits, unsigned output_bits)
    : k_(field_bits), ell_(output_bits), modulus_(gf_modulus(field_bits)) {
  if (output_bits > field_bits) {
    throw_error(ErrorKind::kInvalidParameter, "output length exceeds the field degree");
  }
}

HashFamily HashFamily::for_alphabet(std::size_t alphabet, unsigned output_bits) {
  unsigned k = 1;
  while ((std::size_t{1} << k) < alphabet && k < 16) ++k;
  if (k < output_bits) k = output_bits;
  if ((std::size_t{1} << k) < alphabet) {
    throw_error(ErrorKind::kInvalidParameter, "alphabet too large for the hash family");
  }
  return HashFamily(k, output_bits);
}

std::uint64_t HashFamily::family_size() const {
  std::uint64_t field = std::uint64_t{1} << k_;
  return (field - 1) * field;
}

std::uint32_t HashFamily::evaluate(std::uint64_t seed, std::uint32_t x) const {
  std::uint64_t field = std::uint64_t{1} << k_;
  std::uint64_t s = seed % family_size();
  std::uint32_t a = static_cast<std::uint32_t>(1 + s % (field - 1));
  std::uint32_t b = static_cast<std::uint32_t>(s / (field - 1));
  std::uint32_t v = gf_multiply(a, x, k_, modulus_) ^ b;
  return ell_ == 0 ? 0u : v >> (k_ - ell_);
}

double HashFamily::collision_probability(std::uint32_t x1, std::uint32_t x2) const {
  if (x1 == x2) return 1.0;
  if (ell_ == 0) return 1.0;
  // The offset cancels under xor, so collisions depend on the multiplier
  // alone: count a != 0 with the top ell bits of a*(x1^x2) all zero.
  std::uint64_t field = std::uint64_t{1} << k_;
  std::uint64_t collisions = 0;
  std::uint32_t d = x1 ^ x2;
  for (std::uint32_t a = 1; a < field; ++a) {
    if (gf_multiply(a, d, k_, modulus_) >> (k_ - ell_) == 0u) ++collisions;
  }
  return static_cast<double>(collisions) / static_cast<double>(field - 1);
}

std::string HashFamily::describe() const {
  return "gf2^" + std::to_string(k_) + "-affine/msb" + std::to_string(ell_);
}

}  // namespace oneshot
