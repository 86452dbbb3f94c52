#include "tdc/binary_code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace tdc {

int BitVector::popcount() const {
  int n = 0;
  for (auto word : words) n += std::popcount(word);
  return n;
}

bool BitVector::covers(const BitVector& other) const {
  for (std::size_t i = 0; i < words.size(); ++i)
    if (other.words[i] & ~words[i]) return false;
  return true;
}

void BitVector::or_with(const BitVector& other) {
  for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
}

BinaryCode::BinaryCode(int length, int size)
    : length_(length), size_(size), words_per_col_((length + 63) / 64) {
  if (length < 1) throw InvalidParamsError("code length must be >= 1");
  if (size < 2) throw InvalidParamsError("code size must be >= 2");
  bits_.assign(static_cast<std::size_t>(size) * words_per_col_, 0);
}

void BinaryCode::check_col(int col) const {
  if (col < 0 || col >= size_) throw IndexError("column index out of range");
}

bool BinaryCode::get(int row, int col) const {
  check_col(col);
  if (row < 0 || row >= length_) throw IndexError("row index out of range");
  return (col_words(col)[row >> 6] >> (row & 63)) & 1;
}

void BinaryCode::set(int row, int col, bool value) {
  check_col(col);
  if (row < 0 || row >= length_) throw IndexError("row index out of range");
  auto& word = bits_[static_cast<std::size_t>(col) * words_per_col_ + (row >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (row & 63);
  if (value)
    word |= mask;
  else
    word &= ~mask;
}

int BinaryCode::weight(int col) const {
  check_col(col);
  int n = 0;
  const std::uint64_t* w = col_words(col);
  for (int i = 0; i < words_per_col_; ++i) n += std::popcount(w[i]);
  return n;
}

BitVector BinaryCode::column(int col) const {
  check_col(col);
  BitVector v;
  v.nbits = length_;
  v.words.assign(col_words(col), col_words(col) + words_per_col_);
  return v;
}

BitVector BinaryCode::response_vector(std::span<const int> cols) const {
  if (cols.empty()) throw EmptySetError("response vector of an empty set");
  BitVector v;
  v.nbits = length_;
  v.words.assign(static_cast<std::size_t>(words_per_col_), 0);
  for (int c : cols) {
    check_col(c);
    const std::uint64_t* w = col_words(c);
    for (int i = 0; i < words_per_col_; ++i) v.words[i] |= w[i];
  }
  return v;
}

int BinaryCode::union_weight(std::span<const int> cols) const {
  if (cols.empty()) return 0;
  return response_vector(cols).popcount();
}

int BinaryCode::max_dot_product() const {
  if (size_ < 2) throw InvalidParamsError("need at least two columns");
  int best = 0;
  for (int u = 0; u < size_; ++u) {
    const std::uint64_t* wu = col_words(u);
    for (int v = u + 1; v < size_; ++v) {
      const std::uint64_t* wv = col_words(v);
      int dot = 0;
      for (int i = 0; i < words_per_col_; ++i) dot += std::popcount(wu[i] & wv[i]);
      if (dot > best) best = dot;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// File format

BinaryCode BinaryCode::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing header line", 1);
  if (!line.empty() && line.back() == '\r')
    throw FormatError("CR line ending; LF required", 1);
  std::istringstream header(line);
  long long n = 0, t = 0;
  char extra;
  if (!(header >> n >> t) || (header >> extra))
    throw FormatError("header must be \"N t\"", 1);
  if (n < 1 || t < 2 || n > (1 << 24) || t > (1 << 24))
    throw FormatError("header values out of range", 1);
  BinaryCode code(static_cast<int>(n), static_cast<int>(t));
  for (int row = 0; row < n; ++row) {
    const int line_no = row + 2;
    if (!std::getline(in, line))
      throw FormatError("unexpected end of file", line_no);
    const bool hit_eof = in.eof();
    if (!line.empty() && line.back() == '\r')
      throw FormatError("CR line ending; LF required", line_no);
    if (static_cast<long long>(line.size()) != t)
      throw FormatError("expected exactly " + std::to_string(t) + " characters",
                        line_no);
    for (int col = 0; col < t; ++col) {
      const char c = line[static_cast<std::size_t>(col)];
      if (c == '1')
        code.set(row, col, true);
      else if (c != '0')
        throw FormatError("characters must be 0 or 1", line_no);
    }
    if (hit_eof && row + 1 == n)
      throw FormatError("missing final newline", line_no);
  }
  if (std::getline(in, line))
    throw FormatError("trailing content after last row", static_cast<int>(n) + 2);
  return code;
}

BinaryCode BinaryCode::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path, 0);
  return load(in);
}

void BinaryCode::save(std::ostream& out) const {
  out << length_ << ' ' << size_ << '\n';
  std::string row(static_cast<std::size_t>(size_), '0');
  for (int r = 0; r < length_; ++r) {
    for (int c = 0; c < size_; ++c)
      row[static_cast<std::size_t>(c)] =
          ((col_words(c)[r >> 6] >> (r & 63)) & 1) ? '1' : '0';
    out << row << '\n';
  }
}

void BinaryCode::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open " + path + " for writing", 0);
  save(out);
  out.flush();
  if (!out) throw FormatError("write failure on " + path, 0);
}

// ---------------------------------------------------------------------------
// Colexicographic subset machinery

namespace {
constexpr std::uint64_t kBinomialCap = std::uint64_t{1} << 62;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kBinomialCap) return kBinomialCap;
  }
  return static_cast<std::uint64_t>(r);
}

void colex_unrank(std::uint64_t rank, int s, std::vector<int>& out) {
  out.resize(static_cast<std::size_t>(s));
  for (int i = s; i-- > 0;) {
    const std::uint64_t kk = static_cast<std::uint64_t>(i) + 1;
    std::uint64_t hi = kk;
    while (binomial(hi, kk) <= rank) hi *= 2;
    std::uint64_t lo = hi / 2;  // binomial(lo, kk) <= rank < binomial(hi, kk)
    while (lo + 1 < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (binomial(mid, kk) <= rank)
        lo = mid;
      else
        hi = mid;
    }
    out[static_cast<std::size_t>(i)] = static_cast<int>(lo);
    rank -= binomial(lo, kk);
  }
}

namespace {

// Enumerates `count` k-subsets of {0..t-1} in colexicographic order starting
// at `start_rank`, maintaining the OR of the selected columns via suffix
// accumulators (low indices advance most often, so the amortized cost per
// subset is O(words)). The visitor gets (local_index, indices, or_words) and
// returns false to stop early.
template <typename Visitor>
void scan_colex(const BinaryCode& code, int k, std::uint64_t start_rank,
                std::uint64_t count, Visitor&& visit) {
  const int t = code.size();
  const int W = code.words_per_col();
  std::vector<int> idx;
  colex_unrank(start_rank, k, idx);
  // suffix[i] = OR of columns idx[i..k-1]; suffix[k] = 0
  std::vector<std::uint64_t> suffix(static_cast<std::size_t>(W) * (k + 1), 0);
  auto refresh = [&](int from) {
    for (int i = from; i >= 0; --i) {
      const std::uint64_t* col = code.col_words(idx[static_cast<std::size_t>(i)]);
      std::uint64_t* dst = suffix.data() + static_cast<std::size_t>(i) * W;
      const std::uint64_t* src = suffix.data() + static_cast<std::size_t>(i + 1) * W;
      for (int w = 0; w < W; ++w) dst[w] = src[w] | col[w];
    }
  };
  refresh(k - 1);
  for (std::uint64_t done = 0; done < count; ++done) {
    if (!visit(done, idx, suffix.data())) return;
    // advance to the next subset in colex order
    int i = 0;
    while (i < k) {
      const int limit = (i + 1 < k) ? idx[static_cast<std::size_t>(i + 1)] : t;
      if (idx[static_cast<std::size_t>(i)] + 1 < limit) break;
      ++i;
    }
    if (i == k) return;  // exhausted
    ++idx[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) idx[static_cast<std::size_t>(j)] = j;
    refresh(i);
  }
}

struct PhaseViolation {
  std::uint64_t rank;
  Violation kind;
  std::vector<int> subset;
  int covered = -1;
};

// Scans all k-subsets, possibly across threads; returns the violation with
// the smallest colex rank, so the outcome is independent of partitioning.
// check(idx, or_words) -> (Violation::none, -1) or a violation kind plus the
// covered column when the kind is cover.
template <typename Check>
std::optional<PhaseViolation> scan_phase(const BinaryCode& code, int k,
                                         int threads, std::uint64_t total,
                                         std::uint64_t& checked, Check check) {
  const int nthreads =
      std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                             total / 1024 + 1, 64))));
  std::vector<std::optional<PhaseViolation>> found(
      static_cast<std::size_t>(nthreads));
  auto run = [&](int ti) {
    const std::uint64_t begin = total * ti / nthreads;
    const std::uint64_t end = total * (ti + 1) / nthreads;
    scan_colex(code, k, begin, end - begin,
               [&](std::uint64_t local, const std::vector<int>& idx,
                   const std::uint64_t* or_words) {
                 auto [kind, covered] = check(idx, or_words);
                 if (kind != Violation::none) {
                   found[static_cast<std::size_t>(ti)] =
                       PhaseViolation{begin + local, kind, idx, covered};
                   return false;
                 }
                 return true;
               });
  };
  if (nthreads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int ti = 0; ti < nthreads; ++ti) pool.emplace_back(run, ti);
    for (auto& th : pool) th.join();
  }
  std::optional<PhaseViolation> best;
  for (auto& f : found)
    if (f && (!best || f->rank < best->rank)) best = std::move(f);
  checked = best ? best->rank + 1 : total;
  return best;
}

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_budget(double cost, double budget) {
  if (cost > budget)
    throw BudgetError("exhaustive scan needs ~" + std::to_string(cost) +
                          " bitset ops, budget is " + std::to_string(budget),
                      cost);
}

// One seeded engine per report; bounded sampling by rejection so the stream
// is reproducible across platforms.
std::uint64_t uniform_below(std::mt19937_64& eng, std::uint64_t n) {
  const std::uint64_t limit = n * (std::numeric_limits<std::uint64_t>::max() / n);
  std::uint64_t x;
  do {
    x = eng();
  } while (x >= limit);
  return x % n;
}

std::vector<int> sample_subset(std::mt19937_64& eng, int t, int k) {
  // Floyd's algorithm, then sort ascending.
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int j = t - k; j < t; ++j) {
    const int r = static_cast<int>(uniform_below(eng, static_cast<std::uint64_t>(j) + 1));
    if (std::find(out.begin(), out.end(), r) != out.end())
      out.push_back(j);
    else
      out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Does the OR of `idx` cover any column outside `idx`? Returns that column.
int find_covered(const BinaryCode& code, const std::vector<int>& idx,
                 const std::uint64_t* or_words) {
  const int W = code.words_per_col();
  for (int j = 0; j < code.size(); ++j) {
    if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
    const std::uint64_t* col = code.col_words(j);
    bool covered = true;
    for (int w = 0; w < W; ++w) {
      if (col[w] & ~or_words[w]) {
        covered = false;
        break;
      }
    }
    if (covered) return j;
  }
  return -1;
}

int popcount_words(const std::uint64_t* words, int W) {
  int n = 0;
  for (int w = 0; w < W; ++w) n += std::popcount(words[w]);
  return n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Verification

namespace {

// Shared engine for the three public checks. `want_heavy` enables the
// s-union weight-<=-T clause, `want_light` the (s+1)-union weight->=-T+1
// clause; cover-freeness is always checked. Scan order: size-s subsets in
// colex order (weight clause before cover clause per subset), then size-s+1
// subsets.
VerificationReport verify_impl(const BinaryCode& code, Property property, int s,
                               std::optional<int> T, bool want_heavy,
                               bool want_light, const VerifyOptions& opts) {
  const int t = code.size();
  const int N = code.length();
  const int W = code.words_per_col();
  if (s < 1 || s >= t) throw InvalidParamsError("need 1 <= s < t");
  if (T && (*T <= 0 || *T >= N)) throw InvalidParamsError("need 0 < T < N");

  VerificationReport rep;
  rep.property = property;
  rep.s = s;
  rep.T = T;
  rep.passed = true;

  if (opts.sample_count) {
    rep.sampled = true;
    rep.seed = opts.seed;
    rep.samples = *opts.sample_count;
    std::mt19937_64 eng(opts.seed);
    const std::uint64_t n = *opts.sample_count;
    for (std::uint64_t i = 0; i < n && rep.passed; ++i) {
      auto idx = sample_subset(eng, t, s);
      const BitVector rv = code.response_vector(idx);
      ++rep.subsets_checked;
      if (want_heavy && rv.popcount() > *T) {
        rep.passed = false;
        rep.violation = Violation::union_too_heavy;
        rep.witness = idx;
        break;
      }
      const int covered = find_covered(code, idx, rv.words.data());
      if (covered >= 0) {
        rep.passed = false;
        rep.violation = Violation::cover;
        rep.witness = idx;
        rep.covered = covered;
        break;
      }
    }
    if (want_light) {
      for (std::uint64_t i = 0; i < n && rep.passed; ++i) {
        auto idx = sample_subset(eng, t, s + 1);
        ++rep.subsets_checked;
        if (code.union_weight(idx) < *T + 1) {
          rep.passed = false;
          rep.violation = Violation::union_too_light;
          rep.witness = idx;
          break;
        }
      }
    }
    return rep;
  }

  const double total_s = binomial_d(t, s);
  double cost = total_s * (s + (t - s)) * W;
  if (want_light) cost += binomial_d(t, s + 1) * (s + 1) * W;
  require_budget(cost, opts.budget);

  const std::uint64_t count_s = binomial(static_cast<std::uint64_t>(t),
                                         static_cast<std::uint64_t>(s));
  std::uint64_t checked = 0;
  auto violation = scan_phase(
      code, s, opts.threads, count_s, checked,
      [&](const std::vector<int>& idx, const std::uint64_t* or_words)
          -> std::pair<Violation, int> {
        if (want_heavy && popcount_words(or_words, W) > *T)
          return {Violation::union_too_heavy, -1};
        const int covered = find_covered(code, idx, or_words);
        if (covered >= 0) return {Violation::cover, covered};
        return {Violation::none, -1};
      });
  rep.subsets_checked = checked;
  if (!violation && want_light) {
    const std::uint64_t count_s1 = binomial(static_cast<std::uint64_t>(t),
                                            static_cast<std::uint64_t>(s) + 1);
    violation = scan_phase(
        code, s + 1, opts.threads, count_s1, checked,
        [&](const std::vector<int>&, const std::uint64_t* or_words)
            -> std::pair<Violation, int> {
          if (popcount_words(or_words, W) < *T + 1)
            return {Violation::union_too_light, -1};
          return {Violation::none, -1};
        });
    rep.subsets_checked += checked;
  }
  if (violation) {
    rep.passed = false;
    rep.violation = violation->kind;
    rep.witness = violation->subset;
    if (violation->covered >= 0) rep.covered = violation->covered;
  }
  return rep;
}

}  // namespace

VerificationReport verify_disjunctive(const BinaryCode& code, int s,
                                      const VerifyOptions& opts) {
  return verify_impl(code, Property::disjunctive, s, std::nullopt, false, false,
                     opts);
}

VerificationReport verify_threshold(const BinaryCode& code, int s, int T,
                                    const VerifyOptions& opts) {
  return verify_impl(code, Property::threshold, s, T, true, true, opts);
}

VerificationReport verify_bounded_weight(const BinaryCode& code, int s, int T,
                                         const VerifyOptions& opts) {
  return verify_impl(code, Property::bounded_weight, s, T, true, false, opts);
}

// ---------------------------------------------------------------------------
// Union weight distribution

namespace {
struct Kahan {
  long double sum = 0, comp = 0;
  void add(long double x) {
    const long double y = x - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};
}  // namespace

std::vector<double> union_weight_distribution(int N, int w, int s) {
  if (N < 1 || w < 1 || w > N || s < 1)
    throw InvalidParamsError("need 1 <= w <= N and s >= 1");
  if (static_cast<double>(N + 1) * (w + 1) > 1e7)
    throw InvalidParamsError("N*w too large for the DP table");

  // C[n][j] for n <= N, j <= w
  std::vector<long double> C(static_cast<std::size_t>(N + 1) * (w + 1), 0.0L);
  auto at = [&](int n, int j) -> long double& {
    return C[static_cast<std::size_t>(n) * (w + 1) + j];
  };
  for (int n = 0; n <= N; ++n) {
    at(n, 0) = 1.0L;
    for (int j = 1; j <= std::min(n, w); ++j)
      at(n, j) = at(n - 1, j - 1) + (j <= n - 1 ? at(n - 1, j) : 0.0L);
  }
  const long double denom = at(N, w);

  std::vector<long double> cur(static_cast<std::size_t>(N + 1), 0.0L);
  cur[static_cast<std::size_t>(w)] = 1.0L;
  for (int step = 2; step <= s; ++step) {
    std::vector<Kahan> next(static_cast<std::size_t>(N + 1));
    const int mhi = std::min(N, (step - 1) * w);
    for (int m = w; m <= mhi; ++m) {
      const long double pm = cur[static_cast<std::size_t>(m)];
      if (pm == 0.0L) continue;
      const int jlo = std::max(0, w - (N - m));
      for (int j = jlo; j <= std::min(w, m); ++j) {
        const int k = m + w - j;
        next[static_cast<std::size_t>(k)].add(pm * at(m, j) * at(N - m, w - j) /
                                              denom);
      }
    }
    for (int k = 0; k <= N; ++k) cur[static_cast<std::size_t>(k)] =
        next[static_cast<std::size_t>(k)].sum;
  }
  std::vector<double> out(static_cast<std::size_t>(N + 1));
  for (int k = 0; k <= N; ++k) out[static_cast<std::size_t>(k)] =
      static_cast<double>(cur[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<double> union_weight_distribution_exact(int N, int w, int s) {
  if (N < 1 || w < 1 || w > N || s < 1)
    throw InvalidParamsError("need 1 <= w <= N and s >= 1");
  if (N > 80) throw InvalidParamsError("exact mode is limited to N <= 80");

  namespace mp = boost::multiprecision;
  std::vector<mp::cpp_int> C(static_cast<std::size_t>(N + 1) * (w + 1), 0);
  auto at = [&](int n, int j) -> mp::cpp_int& {
    return C[static_cast<std::size_t>(n) * (w + 1) + j];
  };
  for (int n = 0; n <= N; ++n) {
    at(n, 0) = 1;
    for (int j = 1; j <= std::min(n, w); ++j)
      at(n, j) = at(n - 1, j - 1) + (j <= n - 1 ? at(n - 1, j) : mp::cpp_int(0));
  }
  const mp::cpp_rational denom(at(N, w));

  std::vector<mp::cpp_rational> cur(static_cast<std::size_t>(N + 1), 0);
  cur[static_cast<std::size_t>(w)] = 1;
  for (int step = 2; step <= s; ++step) {
    std::vector<mp::cpp_rational> next(static_cast<std::size_t>(N + 1), 0);
    const int mhi = std::min(N, (step - 1) * w);
    for (int m = w; m <= mhi; ++m) {
      const mp::cpp_rational pm = cur[static_cast<std::size_t>(m)];
      if (pm == 0) continue;
      const int jlo = std::max(0, w - (N - m));
      for (int j = jlo; j <= std::min(w, m); ++j) {
        const int k = m + w - j;
        next[static_cast<std::size_t>(k)] +=
            pm * mp::cpp_rational(at(m, j) * at(N - m, w - j)) / denom;
      }
    }
    cur = std::move(next);
  }
  std::vector<double> out(static_cast<std::size_t>(N + 1));
  for (int k = 0; k <= N; ++k)
    out[static_cast<std::size_t>(k)] =
        cur[static_cast<std::size_t>(k)].convert_to<double>();
  return out;
}

}  // namespace tdc
