#pragma once

#include "tdc/errors.hpp"

namespace tdc {

/// Result of a rate-bound evaluation: the bound value in bits per test plus
/// the interior optimizers and solver diagnostics.
struct BoundResult {
  double value = 0.0;
  double argmax_Q = 0.0;
  double argmax_tau = 0.0;
  double y1 = 0.0;  // root for the strength-s exponent (1.0 at the q = sQ edge)
  double y2 = 0.0;  // root for the strength-(s+1) exponent
  long iterations = 0;
  bool tolerance_met = false;
};

/// Binary entropy in bits; h(0) = h(1) = 0 by continuity.
double binary_entropy(double Q);

/// Unique y in (0,1) with q_arg = Q*(1-y^s)/(1-y), i.e. the partial geometric
/// sum 1+y+...+y^{s-1} equals q_arg/Q. Bisection on the strictly increasing
/// sum; residual below 1e-12. Throws RangeError unless Q < q_arg < s*Q.
double solve_y(int s, double Q, double q_arg);

/// Random-coding exponent
///   A(s,Q,q) = (1-q)log2(1-q) + q log2[Q y^s/(1-y)] + sQ log2[(1-y)/y] + s h(Q)
/// with y = solve_y(s,Q,q). Requires Q < q_arg < min(1, sQ) (RangeError).
/// A >= 0 with a unique zero at q = 1-(1-Q)^s.
double exponent_A(int s, double Q, double q_arg);

/// Total extension of exponent_A: +infinity outside [Q, sQ]; at the edges the
/// continuous limits are used. At q = Q the root degenerates (y -> 0) and the
/// divergent log terms cancel, leaving
///   A(s,Q,Q) = (s-1) h(Q),
/// which matches the chance that s random w-sets coincide. At q = sQ (y -> 1)
/// the limit is
///   A(s,Q,sQ) = (1-sQ)log2(1-sQ) + sQ log2(Q) + s h(Q)
/// (first term 0 when sQ >= 1), the exponent of s sets being disjoint.
double exponent_A_prime(int s, double Q, double q_arg);

/// Lower bound on the rate of threshold codes with relative threshold tau:
/// maximizes min{ A'(s,Q,tau)/(s-1), A(s+1,Q,tau)/s } over Q in the open
/// interval (1-(1-tau)^{1/(s+1)}, 1-(1-tau)^{1/s}).
///
/// Inside the interval the first term decreases to 0 at the upper end and the
/// second increases from 0 at the lower end, so the optimizer bisects on
/// their difference to locate the crossing. When tau >= sQ on a prefix of the
/// interval the first term is the +infinity sentinel and the exponent root
/// y1 would leave (0,1); if the crossing has already happened at Q = tau/s
/// (edge value of the first term at or below the second), the supremum is the
/// left limit of the second term there and that value is returned with
/// y1 = 1. Reproducible to 1e-9 in Q.
BoundResult lower_rate_tau(int s, double tau);

/// Optimal-threshold lower bound: maximizes lower_rate_tau(s, .) over tau in
/// (0,1). Golden-section refinement around the best of the seeds
/// tau = (c+1)/s, c in {1,2,4,8}, tau = 1/s, and a fixed 64-point coarse grid
/// (the asymptotic seeds alone overshoot for small s). Deterministic, no RNG.
BoundResult lower_rate_thr(int s);

/// Final max-min objective of the asymptotic analysis:
///   min{ d(d-c+c ln(c/d)), d(d-c-2+(c+2) ln((c+2)/d)) },
/// defined on the strip c > 0, c < d < c+2 (ObjectiveDomainError outside).
double theorem2_objective(double c, double d);

/// Upper bound tau/(floor(s/2)^2+floor(s/2)) * log2(e s (s+2)/(4 tau)) on the
/// rate of bounded-weight (and hence threshold) codes.
double bonis_upper(int s, double tau);

}  // namespace tdc
