#include "tdc/simulator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace tdc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t limit = n * (std::numeric_limits<std::uint64_t>::max() / n);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

// Floyd's uniform k-subset of {0..t-1}.
std::vector<int> sample_subset(std::mt19937_64& eng, int t, int k) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = t - k; j < t; ++j) {
    const int r =
        static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(j) + 1));
    if (std::find(out.begin(), out.end(), r) != out.end())
      out.push_back(j);
    else
      out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TrialOutcome decide(const BinaryCode& code, int s, int T,
                    std::span<const int> defect_set) {
  if (T <= 0 || T >= code.length()) throw InvalidParamsError("need 0 < T < N");
  TrialOutcome out;
  out.defect_set.assign(defect_set.begin(), defect_set.end());
  out.p = code.union_weight(defect_set);  // validates indices; 0 for empty set
  out.decided_active = out.p <= T;
  out.truly_active = static_cast<int>(defect_set.size()) <= s;
  out.correct = out.decided_active == out.truly_active;
  return out;
}

ExhaustiveReport exhaustive_accuracy(const BinaryCode& code, int s, int T,
                                     int max_size, double budget) {
  const int t = code.size();
  if (max_size < 0 || max_size > t)
    throw InvalidParamsError("max_size out of range");
  double cost = 1.0;
  for (int k = 1; k <= max_size; ++k)
    cost += binomial_d(t, k) * k * code.words_per_col();
  if (cost > budget)
    throw BudgetError("exhaustive accuracy scan needs ~" + std::to_string(cost) +
                          " ops",
                      cost);

  ExhaustiveReport rep;
  rep.s = s;
  rep.T = T;
  rep.max_size = max_size;
  rep.by_size.resize(static_cast<std::size_t>(max_size) + 1);

  // Empty set: p = 0 <= T, truth Active.
  rep.by_size[0] = {0, 1, 0};
  rep.subsets = 1;

  std::vector<int> idx;
  for (int k = 1; k <= max_size; ++k) {
    auto& bucket = rep.by_size[static_cast<std::size_t>(k)];
    bucket.size = k;
    idx.assign(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      const TrialOutcome o = decide(code, s, T, idx);
      ++bucket.trials;
      if (!o.correct) ++bucket.errors;
      // next subset, colex order
      int i = 0;
      while (i < k) {
        const int limit = (i + 1 < k) ? idx[static_cast<std::size_t>(i + 1)] : t;
        if (idx[static_cast<std::size_t>(i)] + 1 < limit) break;
        ++i;
      }
      if (i == k) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j;
    }
    rep.subsets += bucket.trials;
    rep.errors += bucket.errors;
  }
  return rep;
}

TrialReport random_trials(const BinaryCode& code, int s, int T,
                          const std::vector<int>& sizes, std::uint64_t n_trials,
                          std::uint64_t seed) {
  if (n_trials < 1) throw InvalidParamsError("need n_trials >= 1");
  if (sizes.empty()) throw InvalidDistributionError("size list is empty");
  for (int k : sizes)
    if (k < 0 || k > code.size())
      throw InvalidDistributionError("size " + std::to_string(k) +
                                     " out of [0, t]");
  if (T <= 0 || T >= code.length()) throw InvalidParamsError("need 0 < T < N");

  TrialReport rep;
  rep.code_length = code.length();
  rep.code_size = code.size();
  rep.s = s;
  rep.T = T;
  rep.trials = n_trials;
  rep.seed = seed;
  rep.rng = "mt19937_64(splitmix64(seed+i)), rejection-sampled bounds";

  std::map<int, SizeAccuracy> by_size;
  std::map<int, std::uint64_t> histogram;
  std::uint64_t correct = 0;
  for (std::uint64_t i = 0; i < n_trials; ++i) {
    std::mt19937_64 eng(splitmix64(seed + i));
    const int size = sizes[static_cast<std::size_t>(
        uniform_below(eng, sizes.size()))];
    std::vector<int> defects =
        size == 0 ? std::vector<int>{} : sample_subset(eng, code.size(), size);
    const TrialOutcome o = decide(code, s, T, defects);
    auto& bucket = by_size[size];
    bucket.size = size;
    ++bucket.trials;
    if (!o.correct) ++bucket.errors;
    if (o.correct) ++correct;
    ++histogram[o.p];
  }
  for (const auto& [size, acc] : by_size) rep.accuracy_by_size.push_back(acc);
  for (const auto& [p, count] : histogram) rep.p_histogram.emplace_back(p, count);
  rep.accuracy = static_cast<double>(correct) / static_cast<double>(n_trials);
  return rep;
}

}  // namespace tdc
