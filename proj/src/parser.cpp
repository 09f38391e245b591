#include "mtspace/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "mtspace/errors.hpp"

namespace mts {

namespace {

enum class Tok { LParen, RParen, Dot, Equal, NotEqual, Bang, Amp, Pipe, Arrow, DArrow, Ident, Forall, Exists, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& input) : in_(input) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    cur_.pos = pos_;
    if (pos_ >= in_.size()) {
      cur_.kind = Tok::End;
      cur_.text.clear();
      return;
    }
    char c = in_[pos_];
    auto simple = [&](Tok k, std::size_t len) {
      cur_.kind = k;
      cur_.text = in_.substr(pos_, len);
      pos_ += len;
    };
    switch (c) {
      case '(': simple(Tok::LParen, 1); return;
      case ')': simple(Tok::RParen, 1); return;
      case '.': simple(Tok::Dot, 1); return;
      case '=': simple(Tok::Equal, 1); return;
      case '&': simple(Tok::Amp, 1); return;
      case '|': simple(Tok::Pipe, 1); return;
      case '!':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '=') simple(Tok::NotEqual, 2);
        else simple(Tok::Bang, 1);
        return;
      case '-':
        if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '>') simple(Tok::Arrow, 2);
        else throw ParseError("unexpected '-'", pos_);
        return;
      case '<':
        if (pos_ + 2 < in_.size() && in_[pos_ + 1] == '-' && in_[pos_ + 2] == '>') simple(Tok::DArrow, 3);
        else throw ParseError("unexpected '<'", pos_);
        return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < in_.size() &&
             (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_'))
        ++pos_;
      cur_.text = in_.substr(start, pos_ - start);
      cur_.pos = start;
      if (cur_.text == "forall") cur_.kind = Tok::Forall;
      else if (cur_.text == "exists") cur_.kind = Tok::Exists;
      else cur_.kind = Tok::Ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& in_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
public:
  Parser(const std::string& text, const Signature* sig, Signature* inferred)
      : lex_(text), sig_(sig), inferred_(inferred) {}

  Sentence parse() {
    Sentence s = parse_iff();
    expect(Tok::End, "end of input");
    return s;
  }

  std::vector<std::string> inferred_symbols;

private:
  Sentence parse_iff() {
    Sentence lhs = parse_implies();
    if (lex_.peek().kind == Tok::DArrow) {
      lex_.take();
      return iff(lhs, parse_iff());
    }
    return lhs;
  }

  Sentence parse_implies() {
    Sentence lhs = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return implies(lhs, parse_implies());
    }
    return lhs;
  }

  Sentence parse_or() {
    Sentence lhs = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      lhs = lor(lhs, parse_and());
    }
    return lhs;
  }

  Sentence parse_and() {
    Sentence lhs = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      lhs = land(lhs, parse_unary());
    }
    return lhs;
  }

  Sentence parse_unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Bang) {
      lex_.take();
      return lnot(parse_unary());
    }
    if (t.kind == Tok::Forall || t.kind == Tok::Exists) {
      Token q = lex_.take();
      Token var = expect(Tok::Ident, "bound variable name");
      expect(Tok::Dot, "'.'");
      bound_.push_back(var.text);
      Sentence body = parse_iff(); // scope extends maximally right
      bound_.pop_back();
      return q.kind == Tok::Forall ? forall(var.text, std::move(body))
                                   : exists(var.text, std::move(body));
    }
    return parse_primary();
  }

  Sentence parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::LParen) {
      lex_.take();
      Sentence s = parse_iff();
      expect(Tok::RParen, "')'");
      return s;
    }
    if (t.kind == Tok::Ident) {
      Token name = lex_.take();
      const Token& next = lex_.peek();
      if (next.kind == Tok::LParen) {
        lex_.take();
        Token var = expect(Tok::Ident, "variable name");
        expect(Tok::RParen, "')'");
        check_predicate(name);
        check_bound(var);
        return pred(name.text, var.text);
      }
      if (next.kind == Tok::Equal || next.kind == Tok::NotEqual) {
        Token op = lex_.take();
        Token rhs = expect(Tok::Ident, "variable name");
        check_bound(name);
        check_bound(rhs);
        Sentence e = eq(name.text, rhs.text);
        return op.kind == Tok::Equal ? e : lnot(e);
      }
      throw ParseError("expected '(' (predicate application) or '='/'!=' after '" + name.text + "'",
                       next.pos);
    }
    throw ParseError("expected a formula", t.pos);
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind)
      throw ParseError("expected " + what, lex_.peek().pos);
    return lex_.take();
  }

  void check_predicate(const Token& name) {
    if (sig_) {
      if (!sig_->has_symbol(name.text))
        throw SignatureError("unknown predicate '" + name.text + "'");
    } else if (std::find(inferred_symbols.begin(), inferred_symbols.end(), name.text) ==
               inferred_symbols.end()) {
      inferred_symbols.push_back(name.text);
    }
  }

  void check_bound(const Token& var) {
    if (std::find(bound_.begin(), bound_.end(), var.text) == bound_.end())
      throw SignatureError("unbound variable '" + var.text + "'");
  }

  Lexer lex_;
  const Signature* sig_;
  Signature* inferred_;
  std::vector<std::string> bound_;
};

} // namespace

Sentence parse_sentence(const std::string& text, const Signature& sig) {
  Parser p(text, &sig, nullptr);
  return p.parse();
}

std::pair<Sentence, Signature> parse_sentence_infer(const std::string& text) {
  Parser p(text, nullptr, nullptr);
  Sentence s = p.parse();
  return {std::move(s), Signature(p.inferred_symbols)};
}

} // namespace mts
