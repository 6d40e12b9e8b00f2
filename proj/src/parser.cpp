#include "mpc/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mpc/error.hpp"

namespace mpc {

namespace {

enum class Tok { End, Ident, Number, Sym };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          t.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::Number;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          t.text += advance();
        }
        if (pos_ + 1 < src_.size() && src_[pos_] == '.' &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          t.text += advance();
          while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            t.text += advance();
          }
        }
      } else if (c == '|' || c == ']') {
        t.kind = Tok::Sym;
        t.text += advance();
        char expect = c == '|' ? '[' : '|';
        if (pos_ >= src_.size() || src_[pos_] != expect) {
          throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
        }
        t.text += advance();
      } else if (std::string_view("<>,.+(){}/:;=").find(c) != std::string_view::npos) {
        t.kind = Tok::Sym;
        t.text += advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.column);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Term term() { return parse_par(); }

  bool at_end() const { return peek().kind == Tok::End; }
  const Token& peek() const { return toks_[pos_]; }

  bool is_sym(std::string_view s) const { return peek().kind == Tok::Sym && peek().text == s; }
  bool is_ident(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }

  Token expect_sym(std::string_view s) {
    if (!is_sym(s)) fail("expected '" + std::string(s) + "'");
    return toks_[pos_++];
  }

  std::string expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier");
    return toks_[pos_++].text;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", found " + found, t.line, t.column);
  }

 private:
  Term parse_par() {
    Term left = parse_sum();
    while (is_sym("|[")) {
      ++pos_;
      NameSet sync;
      if (!is_sym("]|")) sync = names();
      expect_sym("]|");
      left = par(left, std::move(sync), parse_sum());
    }
    return left;
  }

  Term parse_sum() {
    Term left = parse_pre();
    while (is_sym("+")) {
      ++pos_;
      left = choice(left, parse_pre());
    }
    return left;
  }

  Term parse_pre() {
    if (!is_sym("<")) return parse_post();
    ++pos_;
    const Token& name_tok = peek();
    std::string name = expect_ident();
    ActionName action;
    if (name != "tau") {
      try {
        action = ActionName::visible(name);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), name_tok.line, name_tok.column);
      }
    }
    expect_sym(",");
    Rational r = rate();
    expect_sym(">");
    expect_sym(".");
    return prefix(std::move(action), std::move(r), parse_pre());
  }

  Rational rate() {
    const Token start = peek();
    if (start.kind != Tok::Number) fail("expected a rate");
    std::string text = toks_[pos_++].text;
    if (is_sym("/")) {
      ++pos_;
      if (peek().kind != Tok::Number || peek().text.find('.') != std::string::npos) {
        fail("expected an integer denominator");
      }
      if (text.find('.') != std::string::npos) {
        throw ParseError("decimal numerator in a fraction", start.line, start.column);
      }
      text += "/" + toks_[pos_++].text;
    }
    Rational r;
    try {
      r = parse_rational(text);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start.line, start.column);
    }
    if (r <= 0) throw ParseError("rate must be positive", start.line, start.column);
    return r;
  }

  Term parse_post() {
    Term t = parse_atom();
    while (is_sym("/")) {
      ++pos_;
      expect_sym("{");
      NameSet hidden;
      if (!is_sym("}")) hidden = names();
      expect_sym("}");
      t = hide(t, std::move(hidden));
    }
    return t;
  }

  Term parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Number && t.text == "0") {
      ++pos_;
      return nil();
    }
    if (is_sym("(")) {
      ++pos_;
      Term inner = parse_par();
      expect_sym(")");
      return inner;
    }
    if (is_ident("rec")) {
      ++pos_;
      const Token& v = peek();
      std::string x = expect_ident();
      if (x == "rec" || x == "tau" || x == "let") {
        throw ParseError("'" + x + "' cannot be a variable", v.line, v.column);
      }
      expect_sym(":");
      return rec(x, parse_par());
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "tau" || t.text == "let") fail("unexpected keyword");
      ++pos_;
      return var(t.text);
    }
    fail("expected a term");
  }

  NameSet names() {
    NameSet out;
    while (true) {
      const Token& t = peek();
      std::string n = expect_ident();
      if (n == "tau") throw ParseError("'tau' cannot appear in a hiding or synchronization set",
                                       t.line, t.column);
      try {
        ActionName::visible(n);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), t.line, t.column);
      }
      out.insert(n);
      if (!is_sym(",")) return out;
      ++pos_;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  friend TermFile mpc::parse_file(std::string_view);
};

}  // namespace

Term parse(std::string_view text) {
  Parser p(Lexer(text).run());
  Term t = p.term();
  if (!p.at_end()) p.fail("expected end of input");
  return t;
}

const Term& TermFile::get(const std::string& name) const {
  for (const auto& [n, t] : defs_) {
    if (n == name) return t;
  }
  throw SemanticError("undefined term name '" + name + "'");
}

bool TermFile::contains(const std::string& name) const {
  for (const auto& d : defs_) {
    if (d.first == name) return true;
  }
  return false;
}

void TermFile::add(std::string name, Term t) {
  for (auto& d : defs_) {
    if (d.first == name) {
      d.second = std::move(t);
      return;
    }
  }
  defs_.emplace_back(std::move(name), std::move(t));
}

TermFile parse_file(std::string_view text) {
  Parser p(Lexer(text).run());
  TermFile file;
  while (!p.at_end()) {
    if (!p.is_ident("let")) p.fail("expected 'let'");
    p.pos_++;
    const Token name_tok = p.peek();
    std::string name = p.expect_ident();
    if (name == "rec" || name == "tau" || name == "let") {
      throw ParseError("'" + name + "' cannot be a definition name", name_tok.line,
                       name_tok.column);
    }
    p.expect_sym("=");
    Term t = p.term();
    p.expect_sym(";");
    for (const auto& fv : check_well_formed(t).free_vars) {
      if (file.contains(fv)) t = substitute(t, file.get(fv), fv);
    }
    file.add(std::move(name), std::move(t));
  }
  return file;
}

TermFile load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_file(ss.str());
}

}  // namespace mpc
