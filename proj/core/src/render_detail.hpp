#pragma once

#include "json.hpp"

#include "nlat/obstruction.hpp"

// Shared between the scenario and suite renderers; not installed.
namespace nlat::detail {

nlohmann::ordered_json verdict_obj(const Verdict& v);

}  // namespace nlat::detail
