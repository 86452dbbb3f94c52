#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tdc/binary_code.hpp"
#include "tdc/errors.hpp"

namespace tdc {

/// Parameters of one Kautz-Singleton/Reed-Solomon family member.
///
///   t  = q^(lambda+1)        codewords: polynomials of degree <= lambda
///   w  = lambda*floor(q/lambda) + 1
///   N  = q*w
///   s  = max { s >= 1 : w > lambda*s*(s+1)/2 }
///   T  = w*s,  T' = w*(s+1) - s*(s+1)*lambda/2
///   R  = log2(t)/N
struct KsFamilyParams {
  std::uint32_t q = 0;
  int lambda = 0;
  std::int64_t t = 0;
  int w = 0;
  int N = 0;
  int s = 0;
  int T = 0;
  int T_prime = 0;
  double R = 0.0;
};

/// Derives the family parameters for a prime power q and 1 <= lambda < q.
/// Throws NotPrimePowerError or NoValidStrengthError.
KsFamilyParams derive_params(std::uint32_t q, int lambda);

/// Builds the binary code: columns are the q^(lambda+1) polynomials of degree
/// <= lambda over GF(q) in lexicographic coefficient order (constant term
/// fastest). Evaluation points are the first w field elements in rep order;
/// when w = q+1 the last point is the point at infinity, whose value is the
/// degree-lambda coefficient. Each q-ary symbol becomes a q-bit one-hot block
/// (bit r set for value r), blocks stacked in evaluation-point order.
BinaryCode build_code(const KsFamilyParams& params,
                      double memory_budget_bits = 2147483648.0);

/// Upper bound (log2 s'/s')*(2/(s'+1)), s' = s(s+1)/2, on the rate of any
/// family member of strength s.
double family_rate_bound(int s);

/// One row of the published parameter table next to the recomputed values.
struct Table1Row {
  KsFamilyParams computed;
  std::array<std::int64_t, 8> printed;  // q, t, N, w, lambda, s, T, T'
  std::array<bool, 8> mismatch;
  bool documented_typo = false;  // printed t inconsistent with t = q^(lambda+1)
};

/// The seven published (q, lambda) rows recomputed and compared against the
/// printed values. The q=31, lambda=3 row prints t = 923581 while
/// q^(lambda+1) = 923521; that one cell is flagged as a documented typo.
std::vector<Table1Row> table1_comparison();

}  // namespace tdc
