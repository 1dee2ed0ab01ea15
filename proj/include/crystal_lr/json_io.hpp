#pragma once

#include <json.hpp>

#include "crystal_lr/hall_littlewood.hpp"
#include "crystal_lr/lr_engine.hpp"
#include "crystal_lr/suites.hpp"

namespace clr {

using json = nlohmann::ordered_json;

// [[exponent, coefficient], ...] in increasing exponent
json to_json(const TPoly& p);
json to_json(const ExtremalClass& c);
// [{"class": {...}, "mult": m}, ...] in canonical class order
json to_json(const Decomposition& d);
json to_json(const KostkaWindow& w, int T);
json to_json(const VerifyReport& r);
json to_json(const CheckResult& r, bool timings);

ExtremalClass class_from_json(const json& j);
Decomposition decomposition_from_json(const json& j);

}  // namespace clr
