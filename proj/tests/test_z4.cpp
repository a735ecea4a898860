#include <doctest.h>

#include <random>

#include "copath/z4.hpp"

using namespace copath;

namespace {

Z4Table random_bits(int b, std::mt19937_64& rng) {
  Z4Table t = Z4Table::zero(b);
  for (auto& v : t.values) v = rng() & 1;
  return t;
}

Z4Table indicator(int b, std::uint64_t idx) {
  Z4Table t = Z4Table::zero(b);
  t.values[idx] = 1;
  return t;
}

bool equal_mod2(const Z4Table& exact, const Z4Table& bits) {
  if (exact.values.size() != bits.values.size()) return false;
  for (std::size_t i = 0; i < exact.values.size(); ++i)
    if ((exact.values[i] & 1) != bits.values[i]) return false;
  return true;
}

// Triple-loop cross-check, structured differently from the library's naive
// product (iterates output cells, not input pairs).
Z4Table product_by_output(const Z4Table& f, const Z4Table& g) {
  Z4Table out = Z4Table::zero(f.b);
  for (std::size_t t = 0; t < out.values.size(); ++t)
    for (std::size_t t1 = 0; t1 < f.values.size(); ++t1)
      for (std::size_t t2 = 0; t2 < g.values.size(); ++t2)
        if (z4_add_packed(t1, t2) == t)
          out.values[t] += f.values[t1] * g.values[t2];
  return out;
}

}  // namespace

TEST_CASE("packed digit addition") {
  CHECK(z4_add_packed(0b01, 0b11) == 0b00);  // 1 + 3 = 0 mod 4
  CHECK(z4_add_packed(0b10, 0b11) == 0b01);
  // No carry between digits: (3,3) + (1,2) = (0,1).
  CHECK(z4_add_packed(0b1111, 0b0110) == 0b0001);
}

TEST_CASE("scalar and single-coordinate products") {
  Z4Table f = Z4Table::zero(0), g = Z4Table::zero(0);
  f.values[0] = 3;
  g.values[0] = 5;
  CHECK(z4_product_naive(f, g).values[0] == 15);

  Z4Table a = indicator(1, 1), b = indicator(1, 3);
  Z4Table prod = z4_product_naive(a, b);
  CHECK(prod.values == std::vector<std::uint64_t>{1, 0, 0, 0});
  CHECK(equal_mod2(prod, z4_product_fast(a, b)));
}

TEST_CASE("naive product matches an independent enumeration") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Z4Table f = random_bits(2, rng), g = random_bits(2, rng);
    CHECK(z4_product_naive(f, g).values == product_by_output(f, g).values);
  }
}

TEST_CASE("transform round trip is exact") {
  std::mt19937_64 rng(17);
  for (int b = 0; b <= 5; ++b) {
    std::vector<std::uint64_t> v(std::size_t{1} << (2 * b));
    for (auto& x : v) x = rng() % kZ4Modulus;
    std::vector<std::uint64_t> orig = v;
    z4_forward(v, b);
    z4_inverse(v, b);
    CHECK(v == orig);
  }
}

TEST_CASE("fast product equals naive mod 2") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const int b = static_cast<int>(rng() % 5);  // sizes 0..4
    Z4Table f = random_bits(b, rng), g = random_bits(b, rng);
    CHECK(equal_mod2(z4_product_naive(f, g), z4_product_fast(f, g)));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Z4Table f = random_bits(5, rng), g = random_bits(5, rng);
    CHECK(equal_mod2(z4_product_naive(f, g), z4_product_fast(f, g)));
  }
}

TEST_CASE("annihilator and selector edge cases") {
  std::mt19937_64 rng(23);
  Z4Table f = Z4Table::zero(3);
  Z4Table g = random_bits(3, rng);
  CHECK(z4_product_fast(f, g).values == Z4Table::zero(3).values);
  // Convolving with the delta at 0 returns the input.
  Z4Table delta = indicator(3, 0);
  CHECK(z4_product_fast(delta, g).values == g.values);
}

TEST_CASE("commutative and associative mod 2") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int b = 1 + static_cast<int>(rng() % 3);
    Z4Table f = random_bits(b, rng), g = random_bits(b, rng),
            h = random_bits(b, rng);
    CHECK(z4_product_fast(f, g).values == z4_product_fast(g, f).values);
    CHECK(z4_product_fast(z4_product_fast(f, g), h).values ==
          z4_product_fast(f, z4_product_fast(g, h)).values);
  }
}

TEST_CASE("selector picks naive under the cutoff") {
  std::mt19937_64 rng(31);
  for (int b : {0, 2, 3, 4}) {
    Z4Table f = random_bits(b, rng), g = random_bits(b, rng);
    CHECK(equal_mod2(z4_product_naive(f, g), z4_product_mod2(f, g)));
  }
}

TEST_CASE("size mismatches are rejected") {
  Z4Table f = Z4Table::zero(2), g = Z4Table::zero(3);
  CHECK_THROWS_AS(z4_product_naive(f, g), std::invalid_argument);
  CHECK_THROWS_AS(z4_product_fast(f, g), std::invalid_argument);
  Z4Table bad = Z4Table::zero(2);
  bad.values.pop_back();
  CHECK_THROWS_AS(z4_product_naive(bad, bad), std::invalid_argument);
}
