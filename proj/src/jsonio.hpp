#pragma once

#include "json.hpp"
#include "term.hpp"

namespace prb {

nlohmann::json word_json_obj(const WordPtr& w, char opsym);

}  // namespace prb
