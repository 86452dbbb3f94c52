#include "tdc/finite_field.hpp"

#include <algorithm>

namespace tdc {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

// Polynomials over GF(p) as digit vectors, constant term first, no trailing
// zero normalization required by callers.
using Poly = std::vector<std::uint32_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of f divided by monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const int dg = degree(g);
  for (int df = degree(f); df >= dg; df = degree(f)) {
    const std::uint32_t c = f[static_cast<std::size_t>(df)];
    for (int i = 0; i <= dg; ++i) {
      auto& digit = f[static_cast<std::size_t>(df - dg + i)];
      digit = (digit + p - c * g[static_cast<std::size_t>(i)] % p) % p;
    }
  }
  return f;
}

Poly value_to_poly(std::uint32_t v, std::uint32_t p, std::uint32_t len) {
  Poly f(len, 0);
  for (std::uint32_t i = 0; i < len && v != 0; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int df = degree(f);
  if (df < 1) return false;
  // Trial division by every monic polynomial of degree 1..df/2.
  for (int dg = 1; 2 * dg <= df; ++dg) {
    std::uint32_t count = 1;
    for (int i = 0; i < dg; ++i) count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      Poly g = value_to_poly(v, p, static_cast<std::uint32_t>(dg) + 1);
      g[static_cast<std::size_t>(dg)] = 1;
      if (degree(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
  if (q < 2) return false;
  std::uint32_t base = q;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      base = d;
      break;
    }
  }
  std::uint32_t v = q, e = 0;
  while (v % base == 0) {
    v /= base;
    ++e;
  }
  if (v != 1) return false;
  p = base;
  m = e;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw InvalidParamsError("extension degree m must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw OverflowError("p^m exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (m == 1) {
    modulus_ = {0, 1};  // x
  } else {
    // Smallest monic irreducible of degree m, ordered by the base-p integer
    // encoding of the low-order coefficients.
    bool found = false;
    for (std::uint32_t v = 0; v < q_ && !found; ++v) {
      Poly f = value_to_poly(v, p, m + 1);
      f[m] = 1;
      if (is_irreducible(f, p)) {
        modulus_.assign(f.begin(), f.end());
        found = true;
      }
    }
    if (!found) throw Error("no irreducible polynomial found");  // unreachable
  }

  // Log/antilog tables over the smallest generator.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, order = 0;
    do {
      x = mul_poly(x, g);
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      generator_ = g;
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = mul_poly(x, generator_);
  }
}

std::uint32_t FieldSpec::mul_poly(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) {
    // Carry-less multiply with reduction by the modulus bit mask.
    std::uint32_t mod_bits = 0;
    for (std::uint32_t i = 0; i <= m_; ++i) mod_bits |= modulus_[i] << i;
    std::uint32_t r = 0;
    while (b != 0) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & q_) a ^= mod_bits;
    }
    return r;
  }
  // Schoolbook product of digit vectors, then reduction.
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  std::uint32_t av = a, ai = 0;
  for (; av != 0; av /= p_, ++ai) {
    const std::uint32_t da = av % p_;
    if (da == 0) continue;
    std::uint32_t bv = b, bi = 0;
    for (; bv != 0; bv /= p_, ++bi)
      prod[ai + bi] = (prod[ai + bi] + da * (bv % p_)) % p_;
  }
  // Reduce x^k for k >= m using x^m = -(modulus without leading term).
  for (int k = static_cast<int>(prod.size()) - 1; k >= static_cast<int>(m_); --k) {
    const std::uint32_t c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(k)] = 0;
    for (std::uint32_t i = 0; i < m_; ++i) {
      auto& digit = prod[static_cast<std::size_t>(k) - m_ + i];
      digit = (digit + (p_ - modulus_[i] % p_) * c) % p_;
    }
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = m_; i-- > 0;) r = r * p_ + prod[i];
  return r;
}

FieldElement FieldSpec::element(std::uint32_t rep) const {
  if (rep >= q_) throw InvalidParamsError("element rep out of range");
  return FieldElement{rep, this};
}

std::uint32_t FieldSpec::add_rep(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t FieldSpec::mul_rep(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t e = log_[a] + log_[b];
  return exp_[e >= q_ - 1 ? e - (q_ - 1) : e];
}

std::uint32_t FieldSpec::inv_rep(std::uint32_t a) const {
  if (a == 0) throw ZeroInverseError("inverse of zero");
  const std::uint32_t e = log_[a];
  return exp_[e == 0 ? 0 : q_ - 1 - e];
}

std::uint32_t FieldSpec::eval_poly_rep(std::span<const std::uint32_t> coeffs,
                                       std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = add_rep(mul_rep(acc, x), coeffs[i]);
  return acc;
}

FieldSpec field_new(std::uint32_t p, std::uint32_t m) { return FieldSpec(p, m); }

namespace {
const FieldSpec& same_field(FieldElement a, FieldElement b) {
  if (a.field == nullptr || a.field != b.field)
    throw MixedFieldsError("elements belong to different fields");
  return *a.field;
}
}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
  const FieldSpec& f = same_field(a, b);
  return FieldElement{f.add_rep(a.rep, b.rep), &f};
}

FieldElement mul(FieldElement a, FieldElement b) {
  const FieldSpec& f = same_field(a, b);
  return FieldElement{f.mul_rep(a.rep, b.rep), &f};
}

FieldElement inv(FieldElement a) {
  if (a.field == nullptr) throw MixedFieldsError("element has no field");
  return FieldElement{a.field->inv_rep(a.rep), a.field};
}

FieldElement eval_poly(std::span<const FieldElement> coeffs, FieldElement x) {
  if (x.field == nullptr) throw MixedFieldsError("element has no field");
  std::vector<std::uint32_t> reps(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].field != x.field)
      throw MixedFieldsError("polynomial coefficients from a different field");
    reps[i] = coeffs[i].rep;
  }
  return FieldElement{x.field->eval_poly_rep(reps, x.rep), x.field};
}

}  // namespace tdc
