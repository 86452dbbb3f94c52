#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "tdc/finite_field.hpp"

using tdc::FieldElement;
using tdc::FieldSpec;

namespace {

// Independent oracle for the GF(2^m) modulus choice: polynomials as bit
// masks, irreducibility by trial division, candidates in increasing value of
// the low-order coefficient bits.
std::uint32_t smallest_irreducible_gf2(int m) {
  auto mod2 = [](std::uint32_t f, std::uint32_t g) {
    const int dg = 31 - __builtin_clz(g);
    while (f >= (1u << dg)) {
      const int df = 31 - __builtin_clz(f);
      if (df < dg) break;
      f ^= g << (df - dg);
    }
    return f;
  };
  for (std::uint32_t v = 0; v < (1u << m); ++v) {
    const std::uint32_t f = v | (1u << m);
    bool irreducible = true;
    for (int dg = 1; 2 * dg <= m && irreducible; ++dg)
      for (std::uint32_t gv = 0; gv < (1u << dg); ++gv)
        if (mod2(f, gv | (1u << dg)) == 0) {
          irreducible = false;
          break;
        }
    if (irreducible) return f;
  }
  return 0;
}

}  // namespace

TEST_CASE("prime field basics") {
  const FieldSpec f = tdc::field_new(11, 1);
  CHECK(f.q() == 11);
  CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});  // x
  CHECK(f.mul_rep(3, 4) == 1);                             // 12 mod 11
  CHECK(mul(f.element(3), f.element(4)).rep == 1);
  CHECK_THROWS_AS(inv(f.element(0)), tdc::ZeroInverseError);
  // 1 + 2x at x = 3
  const std::vector<FieldElement> coeffs{f.element(1), f.element(2)};
  CHECK(eval_poly(coeffs, f.element(3)).rep == 7);
}

TEST_CASE("constant polynomial evaluates to itself") {
  const FieldSpec f = tdc::field_new(7, 1);
  const std::vector<FieldElement> coeffs{f.element(5)};
  for (std::uint32_t x = 0; x < 7; ++x)
    CHECK(eval_poly(coeffs, f.element(x)).rep == 5);
}

TEST_CASE("GF(16) uses the smallest irreducible modulus") {
  const FieldSpec f = tdc::field_new(2, 4);
  CHECK(f.q() == 16);
  // Oracle: enumerate degree-4 candidates, trial-divide. x^4+x+1 <-> bits 10011.
  CHECK(smallest_irreducible_gf2(4) == 0b10011);
  CHECK(f.modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  // x * x^3 = x^4 = x + 1
  CHECK(f.mul_rep(2, 8) == 3);
  // x^2 via eval of the polynomial x^2 at rep 2
  const std::vector<std::uint32_t> xsq{0, 0, 1};
  CHECK(f.eval_poly_rep(xsq, 2) == 4);
}

TEST_CASE("modulus choice matches the oracle for small GF(2^m)") {
  for (int m : {2, 3, 4, 5, 6}) {
    const FieldSpec f = tdc::field_new(2, m);
    std::uint32_t bits = 0;
    for (int i = 0; i <= m; ++i) bits |= f.modulus()[static_cast<std::size_t>(i)] << i;
    CHECK(bits == smallest_irreducible_gf2(m));
  }
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(tdc::field_new(4, 1), tdc::NonPrimeError);
  CHECK_THROWS_AS(tdc::field_new(1, 1), tdc::NonPrimeError);
  CHECK_THROWS_AS(tdc::field_new(2, 17), tdc::OverflowError);
  CHECK_THROWS_AS(tdc::field_new(257, 2), tdc::OverflowError);
}

TEST_CASE("mixed fields are rejected") {
  const FieldSpec f11 = tdc::field_new(11, 1);
  const FieldSpec f13 = tdc::field_new(13, 1);
  CHECK_THROWS_AS(add(f11.element(1), f13.element(1)), tdc::MixedFieldsError);
  CHECK_THROWS_AS(mul(f11.element(1), f13.element(1)), tdc::MixedFieldsError);
  const std::vector<FieldElement> coeffs{f11.element(1)};
  CHECK_THROWS_AS(eval_poly(coeffs, f13.element(1)), tdc::MixedFieldsError);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {7, 1},
                      {2, 3},
                      {3, 2},
                      {11, 1},
                      {13, 1},
                      {2, 4},
                      {5, 2},
                      {3, 3},
                      {2, 5},
                      {7, 2},
                      {2, 6}}) {
    const FieldSpec f(p, m);
    const std::uint32_t q = f.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add_rep(a, b) == f.add_rep(b, a));
        CHECK(f.mul_rep(a, b) == f.mul_rep(b, a));
        for (std::uint32_t c = 0; c < q; ++c) {
          REQUIRE(f.add_rep(f.add_rep(a, b), c) == f.add_rep(a, f.add_rep(b, c)));
          REQUIRE(f.mul_rep(f.mul_rep(a, b), c) == f.mul_rep(a, f.mul_rep(b, c)));
          REQUIRE(f.mul_rep(a, f.add_rep(b, c)) ==
                  f.add_rep(f.mul_rep(a, b), f.mul_rep(a, c)));
        }
      }
      if (a != 0) REQUIRE(f.mul_rep(a, f.inv_rep(a)) == 1);
      CHECK(f.mul_rep(a, 1) == a);
      CHECK(f.add_rep(a, 0) == a);
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
  for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                      {2, 4},
                      {3, 2},
                      {5, 2},
                      {2, 6}}) {
    const FieldSpec f(p, m);
    const std::uint32_t q = f.q();
    bool found = false;
    for (std::uint32_t g = 1; g < q && !found; ++g) {
      std::uint32_t x = 1, order = 0;
      do {
        x = f.mul_rep(x, g);
        ++order;
      } while (x != 1);
      found = order == q - 1;
    }
    CHECK(found);
    // The table generator itself must have full order.
    std::uint32_t x = 1, order = 0;
    do {
      x = f.mul_rep(x, f.generator());
      ++order;
    } while (x != 1);
    CHECK(order == q - 1);
  }
}

TEST_CASE("nonzero polynomials of degree <= lambda have at most lambda roots") {
  // Equivalent to: two distinct degree-<=lambda polynomials agree on at most
  // lambda points (their difference runs over all nonzero polynomials).
  struct Case {
    std::uint32_t p, m;
    int lambda;
  };
  for (auto [p, m, lambda] :
       {Case{5, 1, 3}, Case{2, 2, 3}, Case{2, 4, 3}, Case{11, 1, 2}}) {
    const FieldSpec f(p, m);
    const std::uint32_t q = f.q();
    std::uint64_t n_polys = 1;
    for (int i = 0; i <= lambda; ++i) n_polys *= q;
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(lambda) + 1);
    for (std::uint64_t v = 1; v < n_polys; ++v) {
      std::uint64_t rest = v;
      for (int i = 0; i <= lambda; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      int roots = 0;
      for (std::uint32_t x = 0; x < q; ++x)
        if (f.eval_poly_rep(coeffs, x) == 0) ++roots;
      REQUIRE(roots <= lambda);
    }
  }
}
