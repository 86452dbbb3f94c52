#include "tdc/json_io.hpp"

namespace tdc {

const char* property_name(Property p) {
  switch (p) {
    case Property::disjunctive:
      return "disjunctive";
    case Property::threshold:
      return "threshold";
    case Property::bounded_weight:
      return "bounded";
  }
  return "?";
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::none:
      return "none";
    case Violation::cover:
      return "cover";
    case Violation::union_too_heavy:
      return "union_too_heavy";
    case Violation::union_too_light:
      return "union_too_light";
  }
  return "?";
}

Json to_json(const KsFamilyParams& p) {
  return Json{{"q", p.q},
              {"lambda", p.lambda},
              {"t", p.t},
              {"N", p.N},
              {"w", p.w},
              {"s", p.s},
              {"T", p.T},
              {"T_prime", p.T_prime},
              {"R", p.R}};
}

Json to_json(const VerificationReport& r) {
  Json j{{"property", property_name(r.property)},
         {"s", r.s},
         {"passed", r.passed},
         {"violation", violation_name(r.violation)},
         {"subsets_checked", r.subsets_checked},
         {"mode", r.sampled ? "sampled" : "exhaustive"}};
  if (r.T) j["T"] = *r.T;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.covered) j["covered"] = *r.covered;
  if (r.sampled) {
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["note"] = "sampled, not a proof";
  }
  return j;
}

Json to_json(const BoundResult& r) {
  return Json{{"value", r.value},
              {"argmax_Q", r.argmax_Q},
              {"argmax_tau", r.argmax_tau},
              {"y1", r.y1},
              {"y2", r.y2},
              {"iterations", r.iterations},
              {"tolerance_met", r.tolerance_met}};
}

Json to_json(const TrialReport& r) {
  Json sizes = Json::array();
  for (const auto& acc : r.accuracy_by_size)
    sizes.push_back(Json{{"size", acc.size},
                         {"trials", acc.trials},
                         {"errors", acc.errors}});
  Json hist = Json::array();
  for (const auto& [p, count] : r.p_histogram)
    hist.push_back(Json{{"p", p}, {"count", count}});
  return Json{{"code_meta", Json{{"N", r.code_length}, {"t", r.code_size}}},
              {"s", r.s},
              {"T", r.T},
              {"trials", r.trials},
              {"accuracy", r.accuracy},
              {"accuracy_by_size", sizes},
              {"p_histogram", hist},
              {"seed", r.seed},
              {"rng", r.rng}};
}

Json to_json(const ExhaustiveReport& r) {
  Json sizes = Json::array();
  for (const auto& acc : r.by_size)
    sizes.push_back(Json{{"size", acc.size},
                         {"subsets", acc.trials},
                         {"errors", acc.errors}});
  return Json{{"s", r.s},
              {"T", r.T},
              {"max_size", r.max_size},
              {"by_size", sizes},
              {"subsets", r.subsets},
              {"errors", r.errors}};
}

Json to_json(const Table1Row& r) {
  static const char* kCols[8] = {"q", "t", "N", "w", "lambda", "s", "T", "T_prime"};
  Json j{{"computed", to_json(r.computed)}};
  Json printed;
  for (int i = 0; i < 8; ++i) printed[kCols[i]] = r.printed[static_cast<std::size_t>(i)];
  j["printed"] = printed;
  Json mism = Json::array();
  for (int i = 0; i < 8; ++i)
    if (r.mismatch[static_cast<std::size_t>(i)]) mism.push_back(kCols[i]);
  j["mismatches"] = mism;
  j["documented_typo"] = r.documented_typo;
  return j;
}

}  // namespace tdc
