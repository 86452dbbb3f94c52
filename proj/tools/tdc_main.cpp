// Command-line front end: construction, verification, rate bounds, protocol
// simulation, and the published-parameter-table reproduction.
//
// Exit codes: 0 pass, 1 property failure, 2 usage/domain error,
// 3 I/O or file-format error, 4 operation budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdc/finite_field.hpp"
#include "tdc/json_io.hpp"
#include "tdc/ks_construction.hpp"
#include "tdc/rate_bounds.hpp"
#include "tdc/simulator.hpp"

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct GlobalOpts {
  std::string format = "text";
  double budget = 1e9;
  int threads = 1;
};

bool json_mode(const GlobalOpts& g) { return g.format == "json"; }

void print_params_text(const tdc::KsFamilyParams& p) {
  // Same column order as the published table: q, t, N, w, lambda, s, T, T'.
  std::printf("q=%u t=%lld N=%d w=%d lambda=%d s=%d T=%d T'=%d R=%s\n", p.q,
              static_cast<long long>(p.t), p.N, p.w, p.lambda, p.s, p.T,
              p.T_prime, fmt(p.R).c_str());
}

int cmd_construct(const GlobalOpts& g, std::uint32_t q, int lambda,
                  const std::string& out_path, double memory_budget) {
  const tdc::KsFamilyParams params = tdc::derive_params(q, lambda);
  if (!out_path.empty()) {
    const tdc::BinaryCode code = tdc::build_code(params, memory_budget);
    code.save_file(out_path);
    std::ofstream sidecar(out_path + ".json", std::ios::binary);
    if (!sidecar) throw tdc::FormatError("cannot open " + out_path + ".json", 0);
    sidecar << tdc::to_json(params).dump(2) << '\n';
    if (!sidecar.flush())
      throw tdc::FormatError("write failure on " + out_path + ".json", 0);
  }
  if (json_mode(g))
    std::cout << tdc::to_json(params).dump(2) << '\n';
  else
    print_params_text(params);
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& code_path,
               const std::string& property, int s, std::optional<int> T,
               std::optional<std::uint64_t> sample,
               std::optional<std::uint64_t> seed) {
  const tdc::BinaryCode code = tdc::BinaryCode::load_file(code_path);
  tdc::VerifyOptions opts;
  opts.budget = g.budget;
  opts.threads = g.threads;
  if (sample) {
    if (!seed) throw tdc::InvalidParamsError("--sample requires --seed");
    opts.sample_count = *sample;
    opts.seed = *seed;
  }
  tdc::VerificationReport rep;
  if (property == "disjunctive") {
    rep = tdc::verify_disjunctive(code, s, opts);
  } else if (property == "threshold") {
    if (!T) throw tdc::InvalidParamsError("threshold check needs --T");
    rep = tdc::verify_threshold(code, s, *T, opts);
  } else {  // "bounded"
    if (!T) throw tdc::InvalidParamsError("bounded check needs --T");
    rep = tdc::verify_bounded_weight(code, s, *T, opts);
  }
  if (json_mode(g)) {
    std::cout << tdc::to_json(rep).dump(2) << '\n';
  } else {
    std::printf("property=%s s=%d", tdc::property_name(rep.property), rep.s);
    if (rep.T) std::printf(" T=%d", *rep.T);
    std::printf(" mode=%s subsets_checked=%llu result=%s\n",
                rep.sampled ? "sampled (not a proof)" : "exhaustive",
                static_cast<unsigned long long>(rep.subsets_checked),
                rep.passed ? "PASS" : "FAIL");
    if (!rep.passed) {
      std::printf("violation=%s witness={", tdc::violation_name(rep.violation));
      for (std::size_t i = 0; i < rep.witness.size(); ++i)
        std::printf("%s%d", i ? "," : "", rep.witness[i]);
      std::printf("}");
      if (rep.covered) std::printf(" covered=%d", *rep.covered);
      std::printf("\n");
    }
  }
  return rep.passed ? 0 : 1;
}

int cmd_bound(const GlobalOpts& g, const std::string& kind, int s, double tau,
              double c, double d) {
  tdc::Json j;
  if (kind == "lower-tau" || kind == "lower-thr") {
    const tdc::BoundResult r =
        kind == "lower-tau" ? tdc::lower_rate_tau(s, tau) : tdc::lower_rate_thr(s);
    // Root certificates: residual of q = Q*(1+y+...+y^{s-1}) at each root.
    const auto residual = [&](int strength, double y) {
      double sum = 0.0, term = 1.0;
      for (int i = 0; i < strength; ++i) {
        sum += term;
        term *= y;
      }
      return std::abs(r.argmax_tau - r.argmax_Q * sum);
    };
    j = tdc::to_json(r);
    j["kind"] = kind;
    j["residual_y1"] = residual(s, r.y1);
    j["residual_y2"] = residual(s + 1, r.y2);
    if (!json_mode(g)) {
      std::printf(
          "%s s=%d value=%s Q*=%s tau*=%s y1=%s y2=%s residuals=(%s, %s) "
          "iterations=%ld\n",
          kind.c_str(), s, fmt(r.value).c_str(), fmt(r.argmax_Q).c_str(),
          fmt(r.argmax_tau).c_str(), fmt(r.y1).c_str(), fmt(r.y2).c_str(),
          fmt(j["residual_y1"].get<double>()).c_str(),
          fmt(j["residual_y2"].get<double>()).c_str(), r.iterations);
      return 0;
    }
  } else if (kind == "upper") {
    const double v = tdc::bonis_upper(s, tau);
    j = tdc::Json{{"kind", kind}, {"s", s}, {"tau", tau}, {"value", v}};
    if (!json_mode(g)) {
      std::printf("upper s=%d tau=%s value=%s\n", s, fmt(tau).c_str(),
                  fmt(v).c_str());
      return 0;
    }
  } else {  // theorem2-objective
    const double v = tdc::theorem2_objective(c, d);
    j = tdc::Json{{"kind", kind}, {"c", c}, {"d", d}, {"value", v}};
    if (!json_mode(g)) {
      std::printf("theorem2-objective c=%s d=%s value=%s\n", fmt(c).c_str(),
                  fmt(d).c_str(), fmt(v).c_str());
      return 0;
    }
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_table1(const GlobalOpts& g) {
  const auto rows = tdc::table1_comparison();
  bool unexpected = false;
  if (json_mode(g)) {
    tdc::Json j = tdc::Json::array();
    for (const auto& row : rows) j.push_back(tdc::to_json(row));
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("%-4s %-9s %-5s %-4s %-7s %-3s %-5s %-5s\n", "q", "t", "N", "w",
                "lambda", "s", "T", "T'");
    for (const auto& row : rows) {
      const auto& p = row.computed;
      std::printf("%-4u %-9lld %-5d %-4d %-7d %-3d %-5d %-5d", p.q,
                  static_cast<long long>(p.t), p.N, p.w, p.lambda, p.s, p.T,
                  p.T_prime);
      if (row.documented_typo)
        std::printf("  t printed as %lld, inconsistent with t = q^(lambda+1)",
                    static_cast<long long>(row.printed[1]));
      std::printf("\n");
    }
  }
  for (const auto& row : rows)
    for (std::size_t i = 0; i < 8; ++i)
      if (row.mismatch[i] && !(i == 1 && row.documented_typo)) unexpected = true;
  if (unexpected) {
    std::fprintf(stderr, "unexpected mismatch against the printed table\n");
    return 1;
  }
  return 0;
}

int cmd_simulate(const std::string& code_path, int s, int T,
                 std::uint64_t trials, std::uint64_t seed,
                 const std::string& sizes_arg, const std::string& out_path) {
  const tdc::BinaryCode code = tdc::BinaryCode::load_file(code_path);
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos < sizes_arg.size()) {
    std::size_t next = sizes_arg.find(',', pos);
    if (next == std::string::npos) next = sizes_arg.size();
    sizes.push_back(std::stoi(sizes_arg.substr(pos, next - pos)));
    pos = next + 1;
  }
  const tdc::TrialReport rep = tdc::random_trials(code, s, T, sizes, trials, seed);
  const std::string doc = tdc::to_json(rep).dump(2) + "\n";
  std::cout << doc;
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw tdc::FormatError("cannot open " + out_path, 0);
    out << doc;
    if (!out.flush()) throw tdc::FormatError("write failure on " + out_path, 0);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold disjunctive code toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  if (const char* env = std::getenv("TDC_BUDGET")) g.budget = std::atof(env);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", g.budget, "cap on elementary bitset operations");
  app.add_option("--threads", g.threads, "worker hint for exhaustive scans");

  // construct
  auto* construct = app.add_subcommand("construct", "build a family code");
  std::uint32_t q = 0;
  int lambda = 0;
  std::string out_path;
  double memory_budget = 2147483648.0;
  construct->add_option("--q", q, "field order (prime power)")->required();
  construct->add_option("--lambda", lambda, "maximal dot product")->required();
  construct->add_option("-o,--out", out_path,
                        "code file path (sidecar <out>.json holds the params)");
  construct->add_option("--memory-budget-bits", memory_budget,
                        "cap on t*N bits for the built code");

  // verify
  auto* verify = app.add_subcommand("verify", "check a code property");
  std::string code_path, property;
  int s = 0;
  std::optional<int> T;
  std::optional<std::uint64_t> sample, seed_opt;
  verify->add_option("--code", code_path, "code file")->required();
  verify->add_option("--property", property, "property to check")
      ->check(CLI::IsMember({"disjunctive", "threshold", "bounded"}))
      ->required();
  verify->add_option("--s", s, "strength")->required();
  verify->add_option("--T", T, "threshold");
  verify->add_option("--sample", sample,
                     "check this many random subsets instead of all");
  verify->add_option("--seed", seed_opt, "seed for --sample");

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate a rate bound");
  std::string kind;
  int bs = 2;
  double tau = 0.0, c = 0.0, d = 0.0;
  bound->add_option("--kind", kind, "bound kind")
      ->check(CLI::IsMember({"lower-tau", "lower-thr", "upper",
                             "theorem2-objective"}))
      ->required();
  bound->add_option("--s", bs, "strength");
  bound->add_option("--tau", tau, "relative threshold");
  bound->add_option("--c", c, "objective parameter c");
  bound->add_option("--d", d, "objective parameter d");

  // table1
  app.add_subcommand("table1",
                     "recompute the published family parameter table");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run protocol trials");
  std::string sim_code, sizes_arg = "0,1,2,3", sim_out;
  int sim_s = 0, sim_T = 0;
  std::uint64_t trials = 0, sim_seed = 0;
  simulate->add_option("--code", sim_code, "code file")->required();
  simulate->add_option("--s", sim_s, "strength")->required();
  simulate->add_option("--T", sim_T, "threshold")->required();
  simulate->add_option("--trials", trials, "number of trials")->required();
  simulate->add_option("--seed", sim_seed, "RNG seed")->required();
  simulate->add_option("--sizes", sizes_arg, "comma list of defect-set sizes")
      ->capture_default_str();
  simulate->add_option("-o,--out", sim_out, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (construct->parsed())
      return cmd_construct(g, q, lambda, out_path, memory_budget);
    if (verify->parsed())
      return cmd_verify(g, code_path, property, s, T, sample, seed_opt);
    if (bound->parsed()) return cmd_bound(g, kind, bs, tau, c, d);
    if (app.get_subcommand("table1")->parsed()) return cmd_table1(g);
    if (simulate->parsed())
      return cmd_simulate(sim_code, sim_s, sim_T, trials, sim_seed, sizes_arg,
                          sim_out);
  } catch (const tdc::FormatError& e) {
    if (e.line > 0)
      std::fprintf(stderr, "error: %s (line %d)\n", e.what(), e.line);
    else
      std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const tdc::BudgetError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const tdc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
