#pragma once

#include <json.hpp>

#include "powerstab/finring.hpp"
#include "powerstab/generic.hpp"
#include "powerstab/stability.hpp"

namespace powerstab {

using Json = nlohmann::ordered_json;

Json to_json(const Ideal& I);
Json to_json(const FinIdeal& I);
Json to_json(const StabilityReport& r);
Json to_json(const GradedReport& r);
Json to_json(const CheckReport& r);
Json to_json(const PropagationReport& r);
Json to_json(const PowerProfile& p);
Json to_json(const CrossCheckReport& r);

}  // namespace powerstab
