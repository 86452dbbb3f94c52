#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdc/errors.hpp"

namespace tdc {

/// Fixed-length bit vector used for response vectors and column copies.
struct BitVector {
  int nbits = 0;
  std::vector<std::uint64_t> words;

  bool get(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int popcount() const;
  /// True when every set bit of `other` is set in *this.
  bool covers(const BitVector& other) const;
  void or_with(const BitVector& other);
};

/// Binary code of length N (rows, tests) and size t (columns, codewords),
/// stored column-major as bitsets. Immutable once built; all checks are const.
class BinaryCode {
 public:
  BinaryCode(int length, int size);

  int length() const { return length_; }
  int size() const { return size_; }

  bool get(int row, int col) const;
  void set(int row, int col, bool value);

  /// Number of ones in column j.
  int weight(int col) const;
  /// Bitwise OR of the given columns. Throws EmptySetError on an empty set.
  BitVector response_vector(std::span<const int> cols) const;
  /// Weight of the OR of the given columns (0 for the empty set).
  int union_weight(std::span<const int> cols) const;
  /// Largest pairwise AND-weight over distinct columns.
  int max_dot_product() const;

  BitVector column(int col) const;

  /// Strict "N t" header + N rows of t chars from {0,1}, LF line endings.
  static BinaryCode load(std::istream& in);
  static BinaryCode load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  int words_per_col() const { return words_per_col_; }
  const std::uint64_t* col_words(int col) const {
    return bits_.data() + static_cast<std::size_t>(col) * words_per_col_;
  }

 private:
  void check_col(int col) const;

  int length_;
  int size_;
  int words_per_col_;
  std::vector<std::uint64_t> bits_;
};

enum class Property { disjunctive, threshold, bounded_weight };
enum class Violation { none, cover, union_too_heavy, union_too_light };

struct VerificationReport {
  Property property;
  int s = 0;
  std::optional<int> T;
  bool passed = false;
  Violation violation = Violation::none;
  std::vector<int> witness;      // violating subset, first in colex scan order
  std::optional<int> covered;    // covered column, for cover violations
  std::uint64_t subsets_checked = 0;
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  /// Cap on elementary bitset word operations for exhaustive scans.
  double budget = 1e9;
  int threads = 1;
  /// When set, checks `*sample_count` random subsets per phase instead of an
  /// exhaustive scan; the result is evidence, not a proof.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;
};

/// Disjunctive s-code check: no s-union covers a column outside the union.
VerificationReport verify_disjunctive(const BinaryCode& code, int s,
                                      const VerifyOptions& opts = {});

/// Threshold code check: disjunctive, every s-union has weight <= T and every
/// (s+1)-union has weight >= T+1. By OR-monotonicity it suffices to scan
/// subsets of size exactly s and exactly s+1, and this reduction is used.
VerificationReport verify_threshold(const BinaryCode& code, int s, int T,
                                    const VerifyOptions& opts = {});

/// Bounded-weight code check: disjunctive and every s-union has weight <= T
/// (no lower-weight clause).
VerificationReport verify_bounded_weight(const BinaryCode& code, int s, int T,
                                         const VerifyOptions& opts = {});

/// Exact distribution of the OR-weight of s independent uniform w-subsets of
/// [N]; entry k is P{weight = k}. Long-double dynamic programming with
/// compensated summation; masses sum to 1 within 1e-12.
std::vector<double> union_weight_distribution(int N, int w, int s);

/// Same distribution computed in exact rational arithmetic (N <= 80), used to
/// certify the floating-point path.
std::vector<double> union_weight_distribution_exact(int N, int w, int s);

/// Colexicographic enumeration helpers (exposed for tests).
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);  // saturating
void colex_unrank(std::uint64_t rank, int s, std::vector<int>& out);

}  // namespace tdc
