#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tdc/errors.hpp"

namespace tdc {

class FieldSpec;

/// An element of a specific GF(q). `rep` encodes the coefficient vector of the
/// residue polynomial in base p: rep = c0 + c1*p + ... + c_{m-1}*p^{m-1}.
struct FieldElement {
  std::uint32_t rep = 0;
  const FieldSpec* field = nullptr;
};

/// Arithmetic in GF(q), q = p^m with p prime and m >= 1, q <= 2^16.
///
/// The modulus is the irreducible monic polynomial of degree m over GF(p)
/// whose low-order coefficient vector has the smallest base-p integer
/// encoding (for m = 1 the modulus is x and the field is Z_p).
/// Multiplication and inversion go through log/antilog tables built from the
/// smallest generator of the multiplicative group.
///
/// Immutable after construction; all operations are const and thread-safe.
class FieldSpec {
 public:
  FieldSpec(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients of the modulus, constant term first, length m+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Smallest generator of the multiplicative group.
  std::uint32_t generator() const { return generator_; }

  FieldElement element(std::uint32_t rep) const;

  // Raw-encoding operations; arguments must be in [0, q).
  std::uint32_t add_rep(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_rep(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_rep(std::uint32_t a) const;
  /// Horner evaluation of sum coeffs[i] * x^i; coeffs constant term first.
  std::uint32_t eval_poly_rep(std::span<const std::uint32_t> coeffs,
                              std::uint32_t x) const;

 private:
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_, m_, q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i; log_[0] unused
};

/// Constructs GF(p^m). Throws NonPrimeError for composite p and OverflowError
/// when p^m exceeds 2^16.
FieldSpec field_new(std::uint32_t p, std::uint32_t m);

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);
FieldElement eval_poly(std::span<const FieldElement> coeffs, FieldElement x);

inline bool operator==(FieldElement a, FieldElement b) {
  return a.field == b.field && a.rep == b.rep;
}

bool is_prime(std::uint32_t n);
/// Decomposes q = p^m with p prime; returns false if q is not a prime power.
bool factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m);

}  // namespace tdc
