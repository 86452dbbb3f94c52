#include "tdc/rate_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tdc {

namespace {

constexpr double kLog2E = 1.4426950408889634074;  // log2(e)
constexpr double kInf = std::numeric_limits<double>::infinity();

// All bound math uses natural logs scaled by log2(e).
double log2_(double x) { return std::log(x) * kLog2E; }

// 1 + y + ... + y^{s-1}, compensated.
double geom_sum(double y, int s) {
  double sum = 0.0, comp = 0.0, term = 1.0;
  for (int i = 0; i < s; ++i) {
    const double v = term - comp;
    const double t = sum + v;
    comp = (t - sum) - v;
    sum = t;
    term *= y;
  }
  return sum;
}

void check_sQ(int s, double Q) {
  if (s < 2) throw InvalidParamsError("need s >= 2");
  if (!(Q > 0.0 && Q < 1.0)) throw RangeError("need Q in (0,1)");
}

// Continuous extension of A at q = sQ (y -> 1). See exponent_A_prime docs.
double exponent_A_edge_high(int s, double Q) {
  const double q = s * Q;
  const double first = q >= 1.0 ? 0.0 : (1.0 - q) * log2_(1.0 - q);
  return first + q * log2_(Q) + s * binary_entropy(Q);
}

}  // namespace

double binary_entropy(double Q) {
  if (Q <= 0.0 || Q >= 1.0) return 0.0;
  return -Q * log2_(Q) - (1.0 - Q) * log2_(1.0 - Q);
}

double solve_y(int s, double Q, double q_arg) {
  check_sQ(s, Q);
  const double target = q_arg / Q;
  if (!(target > 1.0 && target < static_cast<double>(s)))
    throw RangeError("q_arg must lie strictly between Q and s*Q");
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (geom_sum(mid, s) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double exponent_A(int s, double Q, double q_arg) {
  check_sQ(s, Q);
  if (!(q_arg > Q && q_arg < std::min(1.0, s * Q)))
    throw RangeError("q_arg must lie in (Q, min(1, s*Q))");
  double y = solve_y(s, Q, q_arg);
  // Guard the log terms against a root rounded onto an endpoint.
  y = std::clamp(y, 1e-300, 1.0 - 1e-17);
  return (1.0 - q_arg) * log2_(1.0 - q_arg) + q_arg * log2_(Q) +
         s * (q_arg - Q) * log2_(y) + (s * Q - q_arg) * log2_(1.0 - y) +
         s * binary_entropy(Q);
}

double exponent_A_prime(int s, double Q, double q_arg) {
  check_sQ(s, Q);
  const double hi = s * Q;
  const double slack = 1e-13 * std::max(1.0, hi);
  if (q_arg < Q - slack || q_arg > hi + slack) return kInf;
  if (q_arg <= Q + slack) return (s - 1) * binary_entropy(Q);
  if (q_arg >= hi - slack) return exponent_A_edge_high(s, Q);
  if (q_arg >= 1.0) return kInf;  // relative weights never exceed 1
  return exponent_A(s, Q, q_arg);
}

BoundResult lower_rate_tau(int s, double tau) {
  if (s < 2) throw InvalidParamsError("need s >= 2");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidTauError("need tau in (0,1)");

  // Q-interval (a, b) = (1-(1-tau)^{1/(s+1)}, 1-(1-tau)^{1/s}).
  const double a = -std::expm1(std::log1p(-tau) / (s + 1));
  const double b = -std::expm1(std::log1p(-tau) / s);
  const double eps = 1e-9 * (b - a);
  double lo = a + eps;
  double hi = b - eps;

  BoundResult res;
  res.argmax_tau = tau;
  long iters = 0;

  const auto f1 = [&](double Q) {
    ++iters;
    return exponent_A_prime(s, Q, tau) / (s - 1);
  };
  const auto f2 = [&](double Q) {
    ++iters;
    return exponent_A_prime(s + 1, Q, tau) / s;
  };

  const double q_edge = tau / s;  // first term is +inf left of this point
  if (q_edge > lo) {
    const double edge1 = exponent_A_edge_high(s, q_edge) / (s - 1);
    const double edge2 = f2(q_edge);
    if (edge1 <= edge2) {
      // The first term drops through the second at its +inf sentinel edge;
      // the supremum of the min is the left limit of the second term here.
      res.value = edge2;
      res.argmax_Q = q_edge;
      res.y1 = 1.0;
      res.y2 = solve_y(s + 1, q_edge, tau);
      res.iterations = iters;
      res.tolerance_met = true;
      return res;
    }
    lo = q_edge;
  }

  // Crossing of the decreasing first term and the increasing second term.
  const double span = b - a;
  double dlo = f1(lo) - f2(lo);
  double dhi = f1(hi) - f2(hi);
  double Qstar;
  bool bracket_ok = dlo > 0.0 && dhi < 0.0;
  if (bracket_ok) {
    double x0 = lo, x1 = hi;
    for (int i = 0; i < 200 && (x1 - x0) > 1e-12 * span; ++i) {
      const double mid = 0.5 * (x0 + x1);
      if (mid == x0 || mid == x1) break;
      if (f1(mid) - f2(mid) > 0.0)
        x0 = mid;
      else
        x1 = mid;
    }
    Qstar = 0.5 * (x0 + x1);
    res.tolerance_met = (x1 - x0) <= 1e-12 * span;
  } else {
    // No sign change: golden-section on the min itself.
    const double gr = 0.6180339887498948482;
    double x0 = lo, x1 = hi;
    double c = x1 - gr * (x1 - x0), d = x0 + gr * (x1 - x0);
    double fc = std::min(f1(c), f2(c)), fd = std::min(f1(d), f2(d));
    for (int i = 0; i < 200; ++i) {
      if (fc < fd) {
        x0 = c;
        c = d;
        fc = fd;
        d = x0 + gr * (x1 - x0);
        fd = std::min(f1(d), f2(d));
      } else {
        x1 = d;
        d = c;
        fd = fc;
        c = x1 - gr * (x1 - x0);
        fc = std::min(f1(c), f2(c));
      }
    }
    Qstar = 0.5 * (x0 + x1);
    res.tolerance_met = (x1 - x0) <= 1e-9 * span;
  }

  res.value = std::max(0.0, std::min(f1(Qstar), f2(Qstar)));
  res.argmax_Q = Qstar;
  res.y1 = (tau > Qstar && tau < s * Qstar) ? solve_y(s, Qstar, tau) : 1.0;
  res.y2 = solve_y(s + 1, Qstar, tau);
  res.iterations = iters;
  return res;
}

BoundResult lower_rate_thr(int s) {
  if (s < 2) throw InvalidParamsError("need s >= 2");
  const double eps = 1e-9;

  // Deterministic seed set: asymptotic guesses, 1/s, and a coarse grid.
  double best_tau = 0.5, best_val = -1.0;
  const auto consider = [&](double tau) {
    tau = std::clamp(tau, eps, 1.0 - eps);
    const double v = lower_rate_tau(s, tau).value;
    if (v > best_val) {
      best_val = v;
      best_tau = tau;
    }
  };
  for (int c : {1, 2, 4, 8}) consider(static_cast<double>(c + 1) / s);
  consider(1.0 / s);
  for (int k = 1; k < 64; ++k) consider(k / 64.0);

  // Golden-section refinement around the best seed.
  const double gr = 0.6180339887498948482;
  double x0 = std::max(eps, best_tau - 1.0 / 32);
  double x1 = std::min(1.0 - eps, best_tau + 1.0 / 32);
  double c = x1 - gr * (x1 - x0), d = x0 + gr * (x1 - x0);
  double fc = lower_rate_tau(s, c).value, fd = lower_rate_tau(s, d).value;
  for (int i = 0; i < 200; ++i) {
    if (fc < fd) {
      x0 = c;
      c = d;
      fc = fd;
      d = x0 + gr * (x1 - x0);
      fd = lower_rate_tau(s, d).value;
    } else {
      x1 = d;
      d = c;
      fd = fc;
      c = x1 - gr * (x1 - x0);
      fc = lower_rate_tau(s, c).value;
    }
  }
  const double tau = 0.5 * (x0 + x1);
  BoundResult res = lower_rate_tau(s, tau);
  if (res.value < best_val) res = lower_rate_tau(s, best_tau);
  return res;
}

double theorem2_objective(double c, double d) {
  if (!(c > 0.0) || !(d > c) || !(d < c + 2.0))
    throw ObjectiveDomainError("need c > 0 and c < d < c+2");
  const double first = d * (d - c + c * std::log(c / d));
  const double second = d * (d - c - 2.0 + (c + 2.0) * std::log((c + 2.0) / d));
  return std::min(first, second);
}

double bonis_upper(int s, double tau) {
  if (s < 2) throw InvalidParamsError("need s >= 2");
  if (!(tau > 0.0 && tau < 1.0)) throw InvalidTauError("need tau in (0,1)");
  const double half = static_cast<double>(s / 2);
  const double e = 2.718281828459045235;
  return tau / (half * half + half) * log2_(e * s * (s + 2) / (4.0 * tau));
}

}  // namespace tdc
