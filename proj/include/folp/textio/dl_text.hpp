#pragma once

#include <string>
#include <string_view>

#include "folp/shoq/concept.hpp"
#include "folp/textio/program_text.hpp"

namespace folp {

struct DlParseOptions {
  unsigned number_cap = 8;
};

// One axiom per line: `C <= D`, `r <= s` or `trans(r)`. `%` and `#` start
// comments.
DlKnowledgeBase parse_dl(std::string_view text, const std::string& file = "<input>", const DlParseOptions& options = {});
ConceptPtr parse_concept(std::string_view text, const DlParseOptions& options = {});

std::string print_dl(const DlKnowledgeBase& kb);

}  // namespace folp
