#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tdc/binary_code.hpp"
#include "tdc/ks_construction.hpp"
#include "tdc/rate_bounds.hpp"

using tdc::BinaryCode;
using tdc::VerifyOptions;

namespace {

// Rows given as strings of '0'/'1'; row i character j is x_i(j).
BinaryCode code_from_rows(const std::vector<std::string>& rows) {
  BinaryCode code(static_cast<int>(rows.size()),
                  static_cast<int>(rows[0].size()));
  for (int r = 0; r < code.length(); ++r)
    for (int c = 0; c < code.size(); ++c)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '1')
        code.set(r, c, true);
  return code;
}

BinaryCode identity4() {
  return code_from_rows({"1000", "0100", "0010", "0001"});
}

}  // namespace

TEST_CASE("column weight") {
  const BinaryCode code = code_from_rows({"10", "00", "10"});
  CHECK(code.weight(0) == 2);  // column 101
  CHECK(code.weight(1) == 0);  // all-zero column
  CHECK_THROWS_AS(code.weight(2), tdc::IndexError);
}

TEST_CASE("KS q=11 lambda=1 columns all have weight 12") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(11, 1));
  for (int j = 0; j < code.size(); ++j) CHECK(code.weight(j) == 12);
}

TEST_CASE("response vector") {
  const BinaryCode code = code_from_rows({"10", "01", "11"});
  const std::vector<int> s0{0};
  CHECK(code.response_vector(s0).covers(code.column(0)));
  CHECK(code.column(0).covers(code.response_vector(s0)));
  const std::vector<int> both{0, 1};
  const tdc::BitVector rv = code.response_vector(both);  // 101 | 011 = 111
  CHECK(rv.popcount() == 3);
  const std::vector<int> empty;
  CHECK_THROWS_AS(code.response_vector(empty), tdc::EmptySetError);
  const std::vector<int> bad{0, 5};
  CHECK_THROWS_AS(code.response_vector(bad), tdc::IndexError);
}

TEST_CASE("OR-weight is monotone under set inclusion") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  std::mt19937_64 eng(12345);
  for (int round = 0; round < 200; ++round) {
    std::vector<int> sub, super;
    for (int j = 0; j < code.size(); ++j) {
      const auto bits = eng();
      if (bits & 1) super.push_back(j);
      if ((bits & 3) == 3) sub.push_back(j);  // sub is a subset of super
    }
    if (sub.empty() || super.empty()) continue;
    CHECK(code.union_weight(sub) <= code.union_weight(super));
  }
}

TEST_CASE("max dot product") {
  CHECK(code_from_rows({"11", "11", "00"}).max_dot_product() == 2);  // identical
  CHECK(code_from_rows({"10", "01"}).max_dot_product() == 0);        // disjoint
}

TEST_CASE("KS q=16 lambda=2 has max dot product 2") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(16, 2));
  CHECK(code.max_dot_product() == 2);
}

TEST_CASE("verify_disjunctive") {
  SUBCASE("identity matrix passes") {
    const auto rep = tdc::verify_disjunctive(identity4(), 2);
    CHECK(rep.passed);
    CHECK(rep.subsets_checked == 6);  // C(4,2)
  }
  SUBCASE("duplicated column fails with the duplicate pair as witness") {
    const BinaryCode code = code_from_rows({"110", "110", "001"});
    const auto rep = tdc::verify_disjunctive(code, 1);
    CHECK_FALSE(rep.passed);
    CHECK(rep.violation == tdc::Violation::cover);
    CHECK(rep.witness == std::vector<int>{0});
    CHECK(rep.covered == 1);
  }
  SUBCASE("KS q=5 lambda=1 is a disjunctive 2-code") {
    const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
    const auto rep = tdc::verify_disjunctive(code, 2);
    CHECK(rep.passed);
    CHECK(rep.subsets_checked == 300);  // C(25,2)
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(tdc::verify_disjunctive(identity4(), 0),
                    tdc::InvalidParamsError);
    CHECK_THROWS_AS(tdc::verify_disjunctive(identity4(), 4),
                    tdc::InvalidParamsError);
  }
}

TEST_CASE("verify_threshold on the q=5 KS code") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  SUBCASE("passes with the derived threshold T = ws = 12") {
    const auto rep = tdc::verify_threshold(code, 2, 12);
    CHECK(rep.passed);
    CHECK(rep.subsets_checked == 300 + 2300);  // C(25,2) + C(25,3)
  }
  SUBCASE("fails at T = 10 with a 2-subset witness of weight 11 or 12") {
    const auto rep = tdc::verify_threshold(code, 2, 10);
    CHECK_FALSE(rep.passed);
    CHECK(rep.violation == tdc::Violation::union_too_heavy);
    REQUIRE(rep.witness.size() == 2);
    const int weight = code.union_weight(rep.witness);
    CHECK(weight >= 11);
    CHECK(weight <= 12);
  }
  SUBCASE("constant-weight code with T = w-1 fails on a singleton") {
    const auto rep = tdc::verify_threshold(code, 1, 5);  // w = 6
    CHECK_FALSE(rep.passed);
    CHECK(rep.violation == tdc::Violation::union_too_heavy);
    CHECK(rep.witness == std::vector<int>{0});
  }
}

TEST_CASE("witness re-check reproduces the violation") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  const auto rep = tdc::verify_threshold(code, 2, 10);
  REQUIRE_FALSE(rep.passed);
  CHECK(code.union_weight(rep.witness) > 10);
}

TEST_CASE("verify_bounded_weight") {
  SUBCASE("a threshold pass implies a bounded-weight pass") {
    const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
    REQUIRE(tdc::verify_threshold(code, 2, 12).passed);
    CHECK(tdc::verify_bounded_weight(code, 2, 12).passed);
  }
  SUBCASE("identity matrix fails for T = 1") {
    const auto rep = tdc::verify_bounded_weight(identity4(), 2, 1);
    CHECK_FALSE(rep.passed);
    CHECK(rep.violation == tdc::Violation::union_too_heavy);
    CHECK(rep.witness == std::vector<int>{0, 1});
  }
  SUBCASE("no lower-weight clause: sparse unions are fine") {
    // Threshold check would fail this code (3-unions have weight 3 <= T),
    // the bounded-weight check must not.
    const auto rep = tdc::verify_bounded_weight(identity4(), 2, 3);
    CHECK(rep.passed);
    CHECK_FALSE(tdc::verify_threshold(identity4(), 2, 3).passed);
  }
}

TEST_CASE("exact-size reduction equals the full-range brute force") {
  // Tiny deterministic codes: compare verify_threshold (sizes s and s+1 only)
  // with a scan over all subset sizes <= s and >= s+1.
  std::mt19937_64 eng(777);
  for (int round = 0; round < 10; ++round) {
    BinaryCode code(10, 8);
    for (int r = 0; r < 10; ++r)
      for (int c = 0; c < 8; ++c)
        if (eng() & 1) code.set(r, c, true);
    const int t = code.size();
    for (int s = 1; s <= 3; ++s) {
      for (int T = 1; T < 10; ++T) {
        bool brute = tdc::verify_disjunctive(code, s).passed;
        for (std::uint32_t mask = 1; mask < (1u << t) && brute; ++mask) {
          std::vector<int> idx;
          for (int j = 0; j < t; ++j)
            if (mask & (1u << j)) idx.push_back(j);
          const int k = static_cast<int>(idx.size());
          const int weight = code.union_weight(idx);
          if (k <= s && weight > T) brute = false;
          if (k >= s + 1 && weight < T + 1) brute = false;
        }
        CHECK(tdc::verify_threshold(code, s, T).passed == brute);
      }
    }
  }
}

TEST_CASE("verification is independent of thread partitioning") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  for (int threads : {2, 4, 7}) {
    VerifyOptions par;
    par.threads = threads;
    const auto a = tdc::verify_threshold(code, 2, 12);
    const auto b = tdc::verify_threshold(code, 2, 12, par);
    CHECK(a.passed == b.passed);
    CHECK(a.subsets_checked == b.subsets_checked);
    const auto fa = tdc::verify_threshold(code, 2, 10);
    const auto fb = tdc::verify_threshold(code, 2, 10, par);
    CHECK(fa.witness == fb.witness);
    CHECK(fa.subsets_checked == fb.subsets_checked);
  }
}

TEST_CASE("budget guard refuses oversized scans") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  VerifyOptions tiny;
  tiny.budget = 100;
  CHECK_THROWS_AS(tdc::verify_threshold(code, 2, 12, tiny), tdc::BudgetError);
  try {
    tdc::verify_threshold(code, 2, 12, tiny);
  } catch (const tdc::BudgetError& e) {
    CHECK(e.required_ops > 100);
  }
}

TEST_CASE("sampled mode is seeded and reproducible") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  VerifyOptions opts;
  opts.sample_count = 500;
  opts.seed = 99;
  const auto a = tdc::verify_threshold(code, 2, 12, opts);
  const auto b = tdc::verify_threshold(code, 2, 12, opts);
  CHECK(a.sampled);
  CHECK(a.passed);
  CHECK(a.samples == 500);
  CHECK(a.subsets_checked == b.subsets_checked);
  // A sampled scan must still find gross violations.
  const auto fail = [&] {
    VerifyOptions o = opts;
    const auto rep = tdc::verify_threshold(code, 2, 10, o);
    return rep;
  }();
  CHECK_FALSE(fail.passed);
}

// ---------------------------------------------------------------------------
// union weight distribution

TEST_CASE("union weight distribution basics") {
  SUBCASE("s = 1 is a point mass at w") {
    const auto d = tdc::union_weight_distribution(10, 4, 1);
    for (int k = 0; k <= 10; ++k)
      CHECK(d[static_cast<std::size_t>(k)] == (k == 4 ? 1.0 : 0.0));
  }
  SUBCASE("two coins") {
    const auto d = tdc::union_weight_distribution(2, 1, 2);
    CHECK(d[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d[2] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("rejects invalid parameters") {
    CHECK_THROWS_AS(tdc::union_weight_distribution(5, 6, 2),
                    tdc::InvalidParamsError);
    CHECK_THROWS_AS(tdc::union_weight_distribution(5, 0, 2),
                    tdc::InvalidParamsError);
    CHECK_THROWS_AS(tdc::union_weight_distribution(5, 2, 0),
                    tdc::InvalidParamsError);
  }
}

TEST_CASE("union weight distribution sums to one with correct support") {
  struct Case {
    int N, w, s;
  };
  for (auto [N, w, s] : {Case{30, 7, 3}, Case{60, 18, 2}, Case{200, 60, 2},
                         Case{200, 40, 3}, Case{50, 10, 5}}) {
    const auto d = tdc::union_weight_distribution(N, w, s);
    double sum = 0.0;
    for (double v : d) sum += v;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    for (int k = 0; k < w; ++k) CHECK(d[static_cast<std::size_t>(k)] == 0.0);
    for (int k = std::min(N, s * w) + 1; k <= N; ++k)
      CHECK(d[static_cast<std::size_t>(k)] == 0.0);
    CHECK(d[static_cast<std::size_t>(std::min(N, s * w))] > 0.0);
  }
}

TEST_CASE("floating DP matches the exact rational DP") {
  struct Case {
    int N, w, s;
  };
  for (auto [N, w, s] : {Case{40, 12, 3}, Case{60, 18, 2}, Case{25, 5, 4}}) {
    const auto approx = tdc::union_weight_distribution(N, w, s);
    const auto exact = tdc::union_weight_distribution_exact(N, w, s);
    for (int k = 0; k <= N; ++k)
      CHECK(std::abs(approx[static_cast<std::size_t>(k)] -
                     exact[static_cast<std::size_t>(k)]) < 1e-12);
  }
  CHECK_THROWS_AS(tdc::union_weight_distribution_exact(81, 10, 2),
                  tdc::InvalidParamsError);
}

TEST_CASE("finite-N union weight matches the random coding exponent") {
  // -log2 P{W_{2, floor(q*N)}}/N vs A(2, 0.3, q) with O(log N / N) slack.
  const int N = 60;
  const int w = static_cast<int>(0.3 * N);
  const auto d = tdc::union_weight_distribution(N, w, 2);
  const double q = 0.45;
  const int k = static_cast<int>(q * N);
  const double finite = -std::log2(d[static_cast<std::size_t>(k)]) / N;
  const double limit = tdc::exponent_A(2, 0.3, q);
  CHECK(std::abs(finite - limit) <= 6.0 * std::log2(N) / N);
}

// ---------------------------------------------------------------------------
// file format

TEST_CASE("code file round trip") {
  const BinaryCode code = tdc::build_code(tdc::derive_params(5, 1));
  std::stringstream buf;
  code.save(buf);
  const std::string text = buf.str();
  CHECK(text.substr(0, 6) == "30 25\n");
  CHECK(text.find('\r') == std::string::npos);
  std::stringstream in(text);
  const BinaryCode back = BinaryCode::load(in);
  CHECK(back.length() == code.length());
  CHECK(back.size() == code.size());
  for (int j = 0; j < code.size(); ++j)
    CHECK(back.column(j).covers(code.column(j)));
  std::stringstream buf2;
  back.save(buf2);
  CHECK(buf2.str() == text);  // byte-identical
}

TEST_CASE("malformed code files are rejected with the line cited") {
  const auto expect_line = [](const std::string& text, int line) {
    std::stringstream in(text);
    try {
      BinaryCode::load(in);
      FAIL("expected FormatError");
    } catch (const tdc::FormatError& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("", 1);
  expect_line("2\n10\n01\n", 1);             // header missing t
  expect_line("2 2 9\n10\n01\n", 1);         // trailing junk in header
  expect_line("2 2\n10\n0\n", 3);            // short row
  expect_line("2 2\n10\n021\n", 3);          // bad char and width
  expect_line("2 2\n10\n0x\n", 3);           // bad char
  expect_line("2 2\n10\n", 3);               // missing row
  expect_line("2 2\n10\n01\n11\n", 4);       // trailing content
  expect_line("2 2\r\n10\n01\n", 1);         // CR line ending
  expect_line("2 2\n10\n01", 3);             // missing final newline
}

// ---------------------------------------------------------------------------
// colex machinery

TEST_CASE("binomial and colex unrank") {
  CHECK(tdc::binomial(25, 2) == 300);
  CHECK(tdc::binomial(49, 4) == 211876);
  CHECK(tdc::binomial(5, 9) == 0);
  std::vector<int> idx;
  // Rank 0 is {0,1,2}; enumerate by rank and check strict colex order.
  std::vector<std::vector<int>> all;
  for (std::uint64_t r = 0; r < tdc::binomial(6, 3); ++r) {
    tdc::colex_unrank(r, 3, idx);
    all.push_back(idx);
  }
  CHECK(all.front() == std::vector<int>{0, 1, 2});
  CHECK(all.back() == std::vector<int>{3, 4, 5});
  for (std::size_t i = 1; i < all.size(); ++i) {
    // colex comparison: largest differing element decides
    const auto &a = all[i - 1], &b = all[i];
    int j = 2;
    while (j >= 0 && a[static_cast<std::size_t>(j)] == b[static_cast<std::size_t>(j)]) --j;
    REQUIRE(j >= 0);
    CHECK(a[static_cast<std::size_t>(j)] < b[static_cast<std::size_t>(j)]);
  }
}
