#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "folp/textio/program_text.hpp"

namespace folp::testing {

inline std::string corpus_path(const std::string& name) { return std::string(FOLP_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program corpus_program(const std::string& name) { return parse_program(read_corpus(name), name); }

inline const std::vector<std::string>& program_corpus() {
  static const std::vector<std::string> files{"happy.folp",       "happy-constraints.folp", "example1.folp",
                                              "example6.folp",    "choice-inconsistent.folp", "marked-cycle.folp",
                                              "marked-acyclic.folp", "father-rules.folp"};
  return files;
}

inline Program program_of(const std::string& text) { return parse_program(text); }

}  // namespace folp::testing
