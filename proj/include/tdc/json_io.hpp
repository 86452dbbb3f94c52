#pragma once

#include <json.hpp>

#include "tdc/binary_code.hpp"
#include "tdc/ks_construction.hpp"
#include "tdc/rate_bounds.hpp"
#include "tdc/simulator.hpp"

namespace tdc {

// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const KsFamilyParams& p);
Json to_json(const VerificationReport& r);
Json to_json(const BoundResult& r);
Json to_json(const TrialReport& r);
Json to_json(const ExhaustiveReport& r);
Json to_json(const Table1Row& r);

const char* property_name(Property p);
const char* violation_name(Violation v);

}  // namespace tdc
