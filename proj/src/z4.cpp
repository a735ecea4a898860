#include "copath/z4.hpp"

#include <stdexcept>
#include <string>

namespace copath {

namespace {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return z4_mulmod(a, b);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  return z4_addmod(a, b);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + kZ4Modulus - b;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

void check_size(const Z4Table& t, const char* who) {
  if (t.b < 0 || t.b > kZ4MaxIndexBits)
    throw std::invalid_argument(std::string(who) + ": index set too large");
  if (t.values.size() != (std::size_t{1} << (2 * t.b)))
    throw std::invalid_argument(std::string(who) + ": bad table size");
}

// One radix-4 DFT pass per coordinate; 4^b * b butterfly work in total.
void transform(std::vector<std::uint64_t>& v, int b, std::uint64_t root) {
  const std::uint64_t i1 = root;  // omega, with omega^2 = -1
  const std::int64_t total = std::int64_t{1} << (2 * b);
  for (int c = 0; c < b; ++c) {
    const std::int64_t stride = std::int64_t{1} << (2 * c);
    const std::int64_t block = stride * 4;
#pragma omp parallel for schedule(static) if (total >= (1 << 18))
    for (std::int64_t base = 0; base < total; base += block) {
      for (std::int64_t off = 0; off < stride; ++off) {
        std::uint64_t* p = v.data() + base + off;
        const std::uint64_t x0 = p[0];
        const std::uint64_t x1 = p[stride];
        const std::uint64_t x2 = p[2 * stride];
        const std::uint64_t x3 = p[3 * stride];
        // With omega^2 = -1: y1 = (x0-x2) + omega (x1-x3), y3 its mirror.
        const std::uint64_t e = addmod(x0, x2), o = addmod(x1, x3);
        const std::uint64_t de = submod(x0, x2);
        const std::uint64_t t = mulmod(i1, submod(x1, x3));
        p[0] = addmod(e, o);
        p[2 * stride] = submod(e, o);
        p[stride] = addmod(de, t);
        p[3 * stride] = submod(de, t);
      }
    }
  }
}

}  // namespace

Z4Table Z4Table::zero(int b) {
  Z4Table t;
  t.b = b;
  t.values.assign(std::size_t{1} << (2 * b), 0);
  return t;
}

Z4Table z4_product_naive(const Z4Table& f, const Z4Table& g) {
  check_size(f, "z4_product_naive");
  check_size(g, "z4_product_naive");
  if (f.b != g.b)
    throw std::invalid_argument("z4_product_naive: index set mismatch");
  Z4Table out = Z4Table::zero(f.b);
  const std::size_t size = f.values.size();
  for (std::size_t t1 = 0; t1 < size; ++t1) {
    if (f.values[t1] == 0) continue;
    for (std::size_t t2 = 0; t2 < size; ++t2)
      out.values[z4_add_packed(t1, t2)] += f.values[t1] * g.values[t2];
  }
  return out;
}

void z4_forward(std::vector<std::uint64_t>& values, int b) {
  transform(values, b, kZ4Root);
}

void z4_inverse(std::vector<std::uint64_t>& values, int b) {
  transform(values, b, powmod(kZ4Root, 3));  // omega^-1 = omega^3
  const std::uint64_t scale =
      powmod(powmod(4, static_cast<std::uint64_t>(b)), kZ4Modulus - 2);
  for (auto& x : values) x = mulmod(x, scale);
}

Z4Table z4_product_fast(const Z4Table& f, const Z4Table& g) {
  check_size(f, "z4_product_fast");
  check_size(g, "z4_product_fast");
  if (f.b != g.b)
    throw std::invalid_argument("z4_product_fast: index set mismatch");
  std::vector<std::uint64_t> a(f.values.size()), c(g.values.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.values[i] & 1;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.values[i] & 1;
  z4_forward(a, f.b);
  z4_forward(c, f.b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = mulmod(a[i], c[i]);
  z4_inverse(a, f.b);
  Z4Table out;
  out.b = f.b;
  out.values = std::move(a);
  for (auto& x : out.values) x &= 1;
  return out;
}

Z4Table z4_product_mod2(const Z4Table& f, const Z4Table& g, int naive_cutoff) {
  if (f.b <= naive_cutoff) {
    Z4Table out = z4_product_naive(f, g);
    for (auto& x : out.values) x &= 1;
    return out;
  }
  return z4_product_fast(f, g);
}

}  // namespace copath
