#pragma once

#include <string>
#include <string_view>

#include "folp/oracle/oracle.hpp"

namespace folp {

// Sorted lines `universe <element>` followed by sorted lines `atom <atom>`.
std::string print_model(const OpenInterpretation& model);

// Accepts the output of print_model, optionally preceded by a verdict line.
OpenInterpretation parse_model(std::string_view text, const std::string& file = "<model>");

}  // namespace folp
