#include "folp/textio/dl_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace folp {

namespace {

enum class Tok { ident, number, lparen, rparen, lbrace, rbrace, dot, sub, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int col = 1;
  int len = 0;
};

bool is_keyword(const std::string& s) {
  return s == "not" || s == "and" || s == "or" || s == "exists" || s == "forall" || s == "atleast" ||
         s == "atmost" || s == "trans";
}

bool capitalized(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

class LineParser {
 public:
  LineParser(std::string_view line, std::string file, int line_no, const DlParseOptions& options)
      : file_(std::move(file)), line_no_(line_no), options_(options) {
    lex(line);
  }

  bool empty() const { return toks_.front().kind == Tok::end; }

  void axiom(DlKnowledgeBase& kb) {
    const Token& first = peek();
    if (first.kind == Tok::ident && first.text == "trans") {
      next();
      expect(Tok::lparen, "'('");
      kb.transitive.push_back(role());
      expect(Tok::rparen, "')'");
    } else if (first.kind == Tok::ident && !is_keyword(first.text) && !capitalized(first.text)) {
      std::string sub = role();
      expect(Tok::sub, "'<='");
      std::string super = role();
      kb.role_axioms.push_back({std::move(sub), std::move(super)});
    } else {
      ConceptPtr sub = disjunction();
      expect(Tok::sub, "'<='");
      ConceptPtr super = disjunction();
      kb.concept_axioms.push_back({std::move(sub), std::move(super)});
    }
    expect(Tok::end, "end of line");
  }

  ConceptPtr whole_concept() {
    ConceptPtr c = disjunction();
    expect(Tok::end, "end of input");
    return c;
  }

 private:
  ParseError error(const Token& t, const std::string& msg) const {
    return ParseError(msg, {file_, line_no_, t.col, t.col + std::max(t.len, 1) - 1});
  }

  void lex(std::string_view s) {
    std::size_t i = 0;
    while (true) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      Token t;
      t.col = static_cast<int>(i) + 1;
      if (i >= s.size() || s[i] == '%' || s[i] == '#') {
        toks_.push_back(t);
        return;
      }
      const char c = s[i];
      const std::size_t start = i;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        t.kind = Tok::ident;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        t.kind = Tok::number;
      } else if (c == '<' && i + 1 < s.size() && s[i + 1] == '=') {
        i += 2;
        t.kind = Tok::sub;
      } else {
        ++i;
        switch (c) {
          case '(': t.kind = Tok::lparen; break;
          case ')': t.kind = Tok::rparen; break;
          case '{': t.kind = Tok::lbrace; break;
          case '}': t.kind = Tok::rbrace; break;
          case '.': t.kind = Tok::dot; break;
          default:
            t.len = 1;
            throw error(t, std::string("unexpected character '") + c + "'");
        }
      }
      t.text = std::string(s.substr(start, i - start));
      t.len = static_cast<int>(i - start);
      toks_.push_back(std::move(t));
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_word(const char* w) const { return peek().kind == Tok::ident && peek().text == w; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw error(peek(), "expected " + what);
    return next();
  }

  std::string role() {
    const Token& t = peek();
    if (t.kind != Tok::ident || is_keyword(t.text)) throw error(t, "expected role name");
    if (capitalized(t.text)) throw error(t, "role names start with a lowercase letter");
    return next().text;
  }

  ConceptPtr disjunction() {
    ConceptPtr c = conjunction();
    while (at_word("or")) {
      next();
      c = Concept::disjunction(c, conjunction());
    }
    return c;
  }

  ConceptPtr conjunction() {
    ConceptPtr c = unary();
    while (at_word("and")) {
      next();
      c = Concept::conjunction(c, unary());
    }
    return c;
  }

  unsigned number() {
    const Token& t = expect(Tok::number, "number");
    unsigned long v = 0;
    for (char d : t.text) {
      v = v * 10 + static_cast<unsigned>(d - '0');
      if (v > options_.number_cap) {
        throw error(t, "number " + t.text + " exceeds the cap of " + std::to_string(options_.number_cap));
      }
    }
    return static_cast<unsigned>(v);
  }

  ConceptPtr filler() {
    expect(Tok::dot, "'.'");
    return unary();
  }

  ConceptPtr unary() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      next();
      ConceptPtr c = disjunction();
      expect(Tok::rparen, "')'");
      return c;
    }
    if (t.kind == Tok::lbrace) {
      next();
      const Token& o = expect(Tok::ident, "individual");
      std::string name = o.text;
      expect(Tok::rbrace, "'}'");
      return Concept::nominal(std::move(name));
    }
    if (t.kind != Tok::ident) throw error(t, "expected concept");
    if (t.text == "not") {
      next();
      return Concept::negation(unary());
    }
    if (t.text == "exists" || t.text == "forall") {
      const bool ex = next().text == "exists";
      std::string r = role();
      ConceptPtr c = filler();
      return ex ? Concept::exists(std::move(r), std::move(c)) : Concept::forall(std::move(r), std::move(c));
    }
    if (t.text == "atleast" || t.text == "atmost") {
      const bool least = next().text == "atleast";
      const unsigned n = number();
      std::string r = role();
      ConceptPtr c = filler();
      return least ? Concept::at_least(n, std::move(r), std::move(c)) : Concept::at_most(n, std::move(r), std::move(c));
    }
    if (is_keyword(t.text)) throw error(t, "unexpected '" + t.text + "'");
    if (!capitalized(t.text)) throw error(t, "concept names start with an uppercase letter");
    return Concept::atomic(next().text);
  }

  std::string file_;
  int line_no_;
  const DlParseOptions& options_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

DlKnowledgeBase parse_dl(std::string_view text, const std::string& file, const DlParseOptions& options) {
  DlKnowledgeBase kb;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    LineParser p(text.substr(start, end - start), file, line_no, options);
    if (!p.empty()) p.axiom(kb);
    start = end + 1;
  }
  return kb;
}

ConceptPtr parse_concept(std::string_view text, const DlParseOptions& options) {
  LineParser p(text, "<concept>", 1, options);
  return p.whole_concept();
}

std::string print_dl(const DlKnowledgeBase& kb) {
  std::ostringstream out;
  for (const auto& ax : kb.concept_axioms) out << ax.sub->str() << " <= " << ax.super->str() << '\n';
  for (const auto& ax : kb.role_axioms) out << ax.sub << " <= " << ax.super << '\n';
  for (const auto& r : kb.transitive) out << "trans(" << r << ")\n";
  return out.str();
}

}  // namespace folp
