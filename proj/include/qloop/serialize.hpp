#pragma once

#include <string>

#include "json.hpp"
#include "qloop/dpoly.hpp"
#include "qloop/module.hpp"
#include "qloop/selfext.hpp"

namespace qloop {

nlohmann::json module_to_json(const Module& v);
Module module_from_json(const nlohmann::json& j);

nlohmann::json dpoly_to_json(const DrinfeldPoly& pi);
DrinfeldPoly dpoly_from_json(const nlohmann::json& j);

nlohmann::json cocycle_to_json(const Cocycle& c, long rows, long cols);

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace qloop
