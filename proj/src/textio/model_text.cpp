#include "folp/textio/model_text.hpp"

#include <algorithm>
#include <vector>

#include "folp/textio/program_text.hpp"

namespace folp {

namespace {

std::string print_atom(const GroundAtom& a) {
  std::string out = print_predicate_name(a.pred) + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ',';
    out += a.args[i];
  }
  return out + ")";
}

GroundAtom parse_atom(std::string_view s, const SourceSpan& span) {
  auto fail = [&](const std::string& msg) { return ParseError(msg, span); };
  GroundAtom a;
  std::size_t i = 0;
  if (!s.empty() && s[0] == '\'') {
    for (i = 1; i < s.size() && s[i] != '\''; ++i) {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      a.pred += s[i];
    }
    if (i >= s.size()) throw fail("unterminated quoted name");
    ++i;
  } else {
    while (i < s.size() && s[i] != '(') a.pred += s[i++];
  }
  if (a.pred.empty() || i >= s.size() || s[i] != '(' || s.back() != ')') throw fail("malformed atom");
  std::string_view inner = s.substr(i + 1, s.size() - i - 2);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = inner.find(',', start);
    std::string_view arg = inner.substr(start, comma == std::string_view::npos ? inner.size() - start : comma - start);
    if (arg.empty()) throw fail("empty argument");
    a.args.emplace_back(arg);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return a;
}

}  // namespace

std::string print_model(const OpenInterpretation& model) {
  std::string out;
  for (const auto& e : model.universe) out += "universe " + e + "\n";
  std::vector<std::string> atoms;
  for (const auto& a : model.atoms) atoms.push_back(print_atom(a));
  std::sort(atoms.begin(), atoms.end());
  for (const auto& a : atoms) out += "atom " + a + "\n";
  return out;
}

OpenInterpretation parse_model(std::string_view text, const std::string& file) {
  OpenInterpretation m;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    const SourceSpan span{file, line_no, 1, static_cast<int>(std::max<std::size_t>(line.size(), 1))};
    if (line.empty() || line == "SAT") continue;
    if (line.starts_with("universe ")) {
      m.universe.emplace(line.substr(9));
    } else if (line.starts_with("atom ")) {
      m.atoms.insert(parse_atom(line.substr(5), span));
    } else {
      throw ParseError("expected 'universe' or 'atom' line", span);
    }
  }
  return m;
}

}  // namespace folp
