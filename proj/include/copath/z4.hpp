#pragma once

#include <cstdint>
#include <vector>

namespace copath {

// Function Z4^B -> ring, stored dense: values[t] for t = sum t_i 4^i.
struct Z4Table {
  int b = 0;
  std::vector<std::uint64_t> values;  // size 4^b

  static Z4Table zero(int b);
};

// Working prime for the transform: 61 bits, = 1 (mod 4), above 4^30, so a
// fourth root of unity exists and exact counts of 0/1 inputs never wrap.
inline constexpr std::uint64_t kZ4Modulus = 1152921504606847009ULL;
inline constexpr std::uint64_t kZ4Root = 164394589713157382ULL;  // i^2 = -1
inline constexpr int kZ4MaxIndexBits = 30;

// Coordinate-wise mod-4 cyclic addition of packed 2-bit digit vectors.
inline std::uint64_t z4_add_packed(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kLow = 0x5555555555555555ULL;
  constexpr std::uint64_t kHigh = 0xAAAAAAAAAAAAAAAAULL;
  return ((a & kLow) + (b & kLow)) ^ ((a ^ b) & kHigh);
}

inline std::uint64_t z4_mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kZ4Modulus);
}

inline std::uint64_t z4_addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kZ4Modulus ? s - kZ4Modulus : s;
}

// Exact coordinate-wise mod-4 convolution by double enumeration. Reference
// implementation; values combine with plain (wrapping) uint64 arithmetic.
Z4Table z4_product_naive(const Z4Table& f, const Z4Table& g);

// Same product mod 2. Inputs are reduced to {0,1}, lifted through a length-4
// DFT per coordinate over the prime field, multiplied pointwise, inverted,
// and reduced mod 2. Exactness holds because counts stay below the modulus.
Z4Table z4_product_fast(const Z4Table& f, const Z4Table& g);

// Product mod 2, picking naive below the cutoff where transform setup loses.
Z4Table z4_product_mod2(const Z4Table& f, const Z4Table& g,
                        int naive_cutoff = 3);

// In-place transforms over the prime field (values must be < modulus).
void z4_forward(std::vector<std::uint64_t>& values, int b);
void z4_inverse(std::vector<std::uint64_t>& values, int b);

}  // namespace copath
