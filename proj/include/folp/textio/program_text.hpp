#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folp/core/program.hpp"

namespace folp {

struct SourceSpan {
  std::string file;
  int line = 1;
  int col_start = 1;
  int col_end = 1;

  std::string str() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

struct ParsedProgram {
  Program program;
  std::vector<Diagnostic> diagnostics;
};

ParsedProgram parse_program_checked(std::string_view text, const std::string& file = "<input>");
Program parse_program(std::string_view text, const std::string& file = "<input>");

std::string print_predicate_name(const std::string& name);
std::string print_rule(const Rule& rule);
std::string print_program(const Program& program);

}  // namespace folp
