#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tdc/binary_code.hpp"

namespace tdc {

/// One run of the decision protocol: p positive tests observed, declared
/// Active (p <= T) or Defective (p >= T+1). The decision uses only p and T,
/// never the code contents. Truth compares |defect_set| with s; for the empty
/// set p = 0 and the outcome is Active.
struct TrialOutcome {
  std::vector<int> defect_set;
  int p = 0;
  bool decided_active = false;
  bool truly_active = false;
  bool correct = false;
};

TrialOutcome decide(const BinaryCode& code, int s, int T,
                    std::span<const int> defect_set);

struct SizeAccuracy {
  int size = 0;
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
};

struct ExhaustiveReport {
  int s = 0;
  int T = 0;
  int max_size = 0;
  std::vector<SizeAccuracy> by_size;  // sizes 0..max_size
  std::uint64_t subsets = 0;
  std::uint64_t errors = 0;
};

/// Runs decide over every defect set of size <= max_size and counts decision
/// errors per size. For a verified threshold code the error count is zero.
ExhaustiveReport exhaustive_accuracy(const BinaryCode& code, int s, int T,
                                     int max_size, double budget = 1e9);

struct TrialReport {
  int code_length = 0;
  int code_size = 0;
  int s = 0;
  int T = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng;  // algorithm identifier, for cross-implementation notes
  std::vector<SizeAccuracy> accuracy_by_size;  // sizes ascending
  std::vector<std::pair<int, std::uint64_t>> p_histogram;  // p ascending
  double accuracy = 0.0;
};

/// Seeded Monte-Carlo trials: each trial draws a size uniformly from `sizes`,
/// then a uniform defect set of that size, and runs the protocol. Per-trial
/// engines derive from (seed, trial index), so the aggregate is independent
/// of evaluation order. Identical seeds give identical reports.
TrialReport random_trials(const BinaryCode& code, int s, int T,
                          const std::vector<int>& sizes, std::uint64_t n_trials,
                          std::uint64_t seed);

}  // namespace tdc
