#include "folp/textio/program_text.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace folp {

std::string SourceSpan::str() const {
  std::ostringstream out;
  out << file << ':' << line << ':' << col_start;
  if (col_end > col_start) out << '-' << col_end;
  return out.str();
}

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error(span.str() + ": " + message), span_(std::move(span)) {}

namespace {

enum class Tok { ident, quoted, lparen, rparen, comma, dot, neck, neq, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
  int len = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::end;
        if (!out.empty()) {
          t.line = end_line_;
          t.col = end_col_;
        }
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) advance();
        t.kind = Tok::ident;
        t.text = std::string(text_.substr(start, pos_ - start));
      } else if (c == '\'') {
        advance();
        while (true) {
          if (pos_ >= text_.size() || text_[pos_] == '\n') throw error(t, "unterminated quoted name");
          char d = text_[pos_];
          advance();
          if (d == '\'') break;
          if (d == '\\' && pos_ < text_.size()) {
            d = text_[pos_];
            advance();
          }
          t.text += d;
        }
        if (t.text.empty()) throw error(t, "empty quoted name");
        t.kind = Tok::quoted;
      } else if (c == '(') {
        single(t, Tok::lparen);
      } else if (c == ')') {
        single(t, Tok::rparen);
      } else if (c == ',') {
        single(t, Tok::comma);
      } else if (c == '.') {
        single(t, Tok::dot);
      } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance();
        advance();
        t.kind = Tok::neck;
      } else if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        advance();
        advance();
        t.kind = Tok::neq;
      } else {
        t.len = 1;
        throw error(t, std::string("unexpected character '") + c + "'");
      }
      t.len = col_ - t.col;
      if (t.line != line_) t.len = 1;
      end_line_ = line_;
      end_col_ = col_;
      out.push_back(t);
    }
  }

  ParseError error(const Token& t, const std::string& message) const {
    return ParseError(message, SourceSpan{file_, t.line, t.col, t.col + std::max(t.len, 1) - 1});
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void single(Token& t, Tok kind) {
    t.kind = kind;
    advance();
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int end_line_ = 1;
  int end_col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Lexer& lexer) : toks_(std::move(tokens)), lexer_(lexer) {}

  std::vector<Rule> rules() {
    std::vector<Rule> out;
    while (peek().kind != Tok::end) out.push_back(shape_rule(rule()));
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::ident: return "'" + t.text + "'";
      case Tok::quoted: return "quoted name";
      case Tok::lparen: return "'('";
      case Tok::rparen: return "')'";
      case Tok::comma: return "','";
      case Tok::dot: return "'.'";
      case Tok::neck: return "':-'";
      case Tok::neq: return "'!='";
      case Tok::end: return "end of input";
    }
    return "token";
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw lexer_.error(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  bool is_keyword(const Token& t, const char* word) const { return t.kind == Tok::ident && t.text == word; }

  Term term() {
    const Token& t = expect(Tok::ident, "term");
    if (std::isupper(static_cast<unsigned char>(t.text[0]))) return Term::variable(t.text);
    if (std::islower(static_cast<unsigned char>(t.text[0]))) return Term::constant(t.text);
    throw lexer_.error(t, "term must start with a letter");
  }

  Atom atom() {
    const Token& name = peek();
    if (name.kind != Tok::ident && name.kind != Tok::quoted) {
      throw lexer_.error(name, "expected predicate name, found " + describe(name));
    }
    next();
    expect(Tok::lparen, "'('");
    Atom a;
    a.args.push_back(term());
    while (peek().kind == Tok::comma) {
      next();
      a.args.push_back(term());
    }
    expect(Tok::rparen, "')'");
    a.pred = Predicate{name.text, static_cast<int>(a.args.size())};
    return a;
  }

  void body_item(FlatRule& flat) {
    if (is_keyword(peek(), "not") && peek(1).kind != Tok::lparen && peek(1).kind != Tok::neq) {
      next();
      flat.body.push_back(Literal{atom(), false});
      return;
    }
    if (peek().kind == Tok::ident && peek(1).kind == Tok::neq) {
      Term lhs = term();
      next();
      Term rhs = term();
      flat.neq.push_back({lhs, rhs});
      return;
    }
    flat.body.push_back(Literal{atom(), true});
  }

  FlatRule rule() {
    FlatRule flat;
    if (peek().kind == Tok::neck) {
      next();
    } else {
      Token head_tok = peek();
      flat.head = atom();
      if (is_keyword(peek(), "v")) {
        next();
        if (!is_keyword(peek(), "not")) throw lexer_.error(peek(), "expected 'not' after 'v'");
        next();
        Token other_tok = peek();
        Atom other = atom();
        if (other != *flat.head) throw lexer_.error(other_tok, "free rule must repeat the head atom");
        flat.free = true;
        expect(Tok::dot, "'.'");
        return flat;
      }
      if (peek().kind == Tok::dot) {
        next();
        return flat;
      }
      expect(Tok::neck, "':-' or '.'");
    }
    body_item(flat);
    while (peek().kind == Tok::comma) {
      next();
      body_item(flat);
    }
    expect(Tok::dot, "'.'");
    return flat;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Lexer& lexer_;
};

bool plain_identifier(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return name != "not" && name != "v";
}

std::string print_atom(const Atom& a) {
  std::string out = print_predicate_name(a.pred.name) + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ',';
    out += a.args[i].name;
  }
  return out + ")";
}

}  // namespace

ParsedProgram parse_program_checked(std::string_view text, const std::string& file) {
  Lexer lexer(text, file);
  Parser parser(lexer.run(), lexer);
  ParsedProgram out{Program(parser.rules()), {}};
  out.diagnostics = validate_folp(out.program);
  return out;
}

Program parse_program(std::string_view text, const std::string& file) {
  return parse_program_checked(text, file).program;
}

std::string print_predicate_name(const std::string& name) {
  if (plain_identifier(name)) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'' || c == '\\') out += '\\';
    out += c;
  }
  return out + "'";
}

std::string print_rule(const Rule& rule) {
  const FlatRule flat = flatten(rule);
  std::string out;
  if (flat.head) {
    out = print_atom(*flat.head);
    if (flat.free) return out + " v not " + out + ".";
  }
  std::vector<std::string> items;
  for (const auto& lit : flat.body) items.push_back((lit.positive ? "" : "not ") + print_atom(lit.atom));
  for (const auto& ne : flat.neq) items.push_back(ne.lhs.name + " != " + ne.rhs.name);
  if (items.empty()) return flat.head ? out + "." : ":- .";
  out += flat.head ? " :- " : ":- ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + ".";
}

std::string print_program(const Program& program) {
  std::string out;
  for (const auto& r : program.rules()) out += print_rule(r) + "\n";
  return out;
}

}  // namespace folp
