#include "tdc/ks_construction.hpp"

#include <cmath>

#include "tdc/finite_field.hpp"

namespace tdc {

KsFamilyParams derive_params(std::uint32_t q, int lambda) {
  std::uint32_t p = 0, m = 0;
  if (!factor_prime_power(q, p, m))
    throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
  if (lambda < 1 || static_cast<std::uint32_t>(lambda) >= q)
    throw InvalidParamsError("need 1 <= lambda < q");

  KsFamilyParams out;
  out.q = q;
  out.lambda = lambda;
  out.w = lambda * static_cast<int>(q / static_cast<std::uint32_t>(lambda)) + 1;
  out.N = static_cast<int>(q) * out.w;
  out.t = 1;
  for (int i = 0; i <= lambda; ++i) {
    if (out.t > (std::int64_t{1} << 62) / q)
      throw InvalidParamsError("q^(lambda+1) exceeds the representable range");
    out.t *= q;
  }
  if (out.w <= lambda) throw NoValidStrengthError("no strength s >= 1 exists");
  int s = 1;
  while (static_cast<std::int64_t>(out.w) * 2 >
         static_cast<std::int64_t>(lambda) * (s + 1) * (s + 2))
    ++s;
  out.s = s;
  out.T = out.w * s;
  out.T_prime = out.w * (s + 1) - s * (s + 1) * lambda / 2;
  out.R = std::log2(static_cast<double>(out.t)) / out.N;
  // T < T' is equivalent to the defining inequality w > lambda*s*(s+1)/2.
  if (out.T >= out.T_prime) throw Error("internal: T < T' violated");
  return out;
}

BinaryCode build_code(const KsFamilyParams& params, double memory_budget_bits) {
  const std::uint32_t q = params.q;
  std::uint32_t p = 0, m = 0;
  if (!factor_prime_power(q, p, m))
    throw NotPrimePowerError(std::to_string(q) + " is not a prime power");
  if (static_cast<double>(params.t) * params.N > memory_budget_bits)
    throw MemoryBudgetError("code of " + std::to_string(params.t) + " x " +
                            std::to_string(params.N) + " bits exceeds budget");
  const FieldSpec field(p, m);
  const int w = params.w;
  const bool use_infinity = (w == static_cast<int>(q) + 1);

  BinaryCode code(params.N, static_cast<int>(params.t));
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(params.lambda) + 1);
  for (std::int64_t col = 0; col < params.t; ++col) {
    std::int64_t v = col;
    for (int i = 0; i <= params.lambda; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    for (int point = 0; point < w; ++point) {
      const std::uint32_t value =
          (use_infinity && point == w - 1)
              ? coeffs[static_cast<std::size_t>(params.lambda)]
              : field.eval_poly_rep(coeffs, static_cast<std::uint32_t>(point));
      code.set(point * static_cast<int>(q) + static_cast<int>(value),
               static_cast<int>(col), true);
    }
  }
  return code;
}

double family_rate_bound(int s) {
  if (s < 2) throw InvalidParamsError("need s >= 2");
  const double sp = static_cast<double>(s) * (s + 1) / 2.0;
  return std::log2(sp) / sp * 2.0 / (sp + 1.0);
}

std::vector<Table1Row> table1_comparison() {
  // Published rows: q, t, N, w, lambda, s, T, T'.
  static constexpr std::array<std::array<std::int64_t, 8>, 7> kPrinted = {{
      {11, 121, 132, 12, 1, 4, 48, 50},
      {17, 289, 306, 18, 1, 5, 90, 93},
      {16, 4096, 272, 17, 2, 3, 51, 56},
      {23, 12167, 529, 23, 2, 4, 92, 95},
      {32, 32768, 1056, 33, 2, 5, 165, 168},
      {31, 923581, 961, 31, 3, 4, 124, 125},
      {16, 1048576, 272, 17, 4, 2, 34, 39},
  }};
  std::vector<Table1Row> rows;
  rows.reserve(kPrinted.size());
  for (const auto& printed : kPrinted) {
    Table1Row row;
    row.printed = printed;
    row.computed = derive_params(static_cast<std::uint32_t>(printed[0]),
                                 static_cast<int>(printed[4]));
    const std::array<std::int64_t, 8> computed = {
        row.computed.q,      row.computed.t, row.computed.N, row.computed.w,
        row.computed.lambda, row.computed.s, row.computed.T, row.computed.T_prime,
    };
    for (std::size_t i = 0; i < 8; ++i) row.mismatch[i] = computed[i] != printed[i];
    // The printed t of the (31, 3) row is inconsistent with t = q^(lambda+1).
    row.documented_typo = row.mismatch[1] && printed[0] == 31 && printed[4] == 3;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tdc
