#include "cplkit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cplkit {

namespace {

enum class Tok {
  Ident,     // [a-zA-Z][a-zA-Z0-9_]*
  Constant,  // 'label
  LParen, RParen, LBracket, RBracket,
  Colon, Dot, Comma,
  Eq, Tilde, Amp, Pipe, Arrow,
  BoxOp,      // []
  DiamondOp,  // <>
  End,
};

struct Token {
  Tok kind;
  std::string text;  // identifier or constant label
  int line, col;
};

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Constant: return "constant";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Eq: return "'='";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::BoxOp: return "'[]'";
    case Tok::DiamondOp: return "'<>'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') { ++line; col = 1; } else { ++col; }
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    auto emit = [&](Tok k, std::size_t len, std::string s = {}) {
      out.push_back({k, std::move(s), tl, tc});
      advance(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      emit(Tok::Ident, j - i, text.substr(i, j - i));
      continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      if (j == i + 1) {
        fail(ErrorCode::ParseError, std::to_string(tl) + ":" + std::to_string(tc) +
                                        ": expected a label after \"'\"");
      }
      emit(Tok::Constant, j - i, text.substr(i + 1, j - i - 1));
      continue;
    }
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '[':
        if (i + 1 < text.size() && text[i + 1] == ']') emit(Tok::BoxOp, 2);
        else emit(Tok::LBracket, 1);
        continue;
      case ']': emit(Tok::RBracket, 1); continue;
      case ':': emit(Tok::Colon, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case '=': emit(Tok::Eq, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      case '&': emit(Tok::Amp, 1); continue;
      case '|': emit(Tok::Pipe, 1); continue;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '>') { emit(Tok::DiamondOp, 2); continue; }
        break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') { emit(Tok::Arrow, 2); continue; }
        break;
      default: break;
    }
    fail(ErrorCode::ParseError, std::to_string(tl) + ":" + std::to_string(tc) +
                                    ": unexpected character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& peek2() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  Token expect(Tok k, const char* context) {
    if (peek().kind != k) err(std::string("expected ") + tok_name(k) + " " + context);
    return next();
  }
  [[noreturn]] void err(const std::string& what) const {
    const Token& t = peek();
    fail(ErrorCode::ParseError, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                    ": " + what + ", got " + tok_name(t.kind));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- CPL ----

class CplParser {
 public:
  CplParser(TokenStream ts, const Signature& sig) : ts_(std::move(ts)), sig_(sig) {}

  CplFormula parse() {
    CplFormula f = formula();
    if (ts_.peek().kind != Tok::End) ts_.err("expected end of formula");
    return f;
  }

 private:
  TokenStream ts_;
  const Signature& sig_;

  bool at_keyword(const char* kw) const {
    return ts_.peek().kind == Tok::Ident && ts_.peek().text == kw;
  }

  // formula := implication; quantifier bodies recurse into formula, so a
  // quantifier encountered at operand level swallows everything rightward.
  CplFormula formula() { return implication(); }

  CplFormula implication() {
    CplFormula lhs = disjunction();
    if (ts_.accept(Tok::Arrow)) return CplFormula::implies(lhs, implication());
    return lhs;
  }

  CplFormula disjunction() {
    CplFormula f = conjunction();
    while (ts_.accept(Tok::Pipe)) f = CplFormula::disj(f, conjunction());
    return f;
  }

  CplFormula conjunction() {
    CplFormula f = unary();
    while (ts_.accept(Tok::Amp)) f = CplFormula::conj(f, unary());
    return f;
  }

  CplFormula unary() {
    if (ts_.accept(Tok::Tilde)) return CplFormula::negation(unary());
    if (at_keyword("exists") || at_keyword("forall")) {
      bool ex = ts_.peek().text == "exists";
      ts_.next();
      Token v = ts_.expect(Tok::Ident, "after quantifier");
      ts_.expect(Tok::Dot, "after quantified variable");
      CplFormula body = formula();
      return ex ? CplFormula::exists(v.text, body) : CplFormula::forall(v.text, body);
    }
    return atom();
  }

  Term term() {
    if (ts_.peek().kind == Tok::Constant) return Term::constant(ts_.next().text);
    Token t = ts_.expect(Tok::Ident, "as a term");
    return Term::var(t.text);
  }

  CplFormula atom() {
    if (ts_.accept(Tok::LParen)) {
      CplFormula f = formula();
      ts_.expect(Tok::RParen, "to close '('");
      return f;
    }
    if (ts_.peek().kind == Tok::Ident && ts_.peek2().kind == Tok::LParen) {
      Token p = ts_.next();
      ts_.next();
      auto it = sig_.predicates.find(p.text);
      if (it == sig_.predicates.end()) {
        fail(ErrorCode::UnknownPredicate, "unknown predicate \"" + p.text + "\"");
      }
      std::vector<Term> args{term()};
      while (ts_.accept(Tok::Comma)) args.push_back(term());
      ts_.expect(Tok::RParen, "to close predicate arguments");
      if (static_cast<int>(args.size()) != it->second) {
        fail(ErrorCode::SortError,
             "predicate \"" + p.text + "\" takes " + std::to_string(it->second) +
                 " argument(s), got " + std::to_string(args.size()));
      }
      return CplFormula::pred(p.text, std::move(args));
    }
    Term t = term();
    if (ts_.accept(Tok::Eq)) return CplFormula::equal(t, term());
    if (ts_.accept(Tok::LBracket)) {
      Token v = ts_.expect(Tok::Ident, "as the box binder");
      ts_.expect(Tok::Colon, "after box binder");
      CplFormula body = formula();
      ts_.expect(Tok::RBracket, "to close box");
      return CplFormula::box(t, v.text, body);
    }
    ts_.err("expected '=' or '[' after term");
  }
};

// ---- modal ----

class ModalParser {
 public:
  explicit ModalParser(TokenStream ts) : ts_(std::move(ts)) {}

  ModalFormula parse() {
    ModalFormula f = implication();
    if (ts_.peek().kind != Tok::End) ts_.err("expected end of formula");
    return f;
  }

 private:
  TokenStream ts_;

  ModalFormula implication() {
    ModalFormula lhs = disjunction();
    if (ts_.accept(Tok::Arrow)) return ModalFormula::implies(lhs, implication());
    return lhs;
  }

  ModalFormula disjunction() {
    ModalFormula f = conjunction();
    while (ts_.accept(Tok::Pipe)) f = ModalFormula::disj(f, conjunction());
    return f;
  }

  ModalFormula conjunction() {
    ModalFormula f = unary();
    while (ts_.accept(Tok::Amp)) f = ModalFormula::conj(f, unary());
    return f;
  }

  ModalFormula unary() {
    if (ts_.accept(Tok::Tilde)) return ModalFormula::negation(unary());
    if (ts_.accept(Tok::BoxOp)) return ModalFormula::box(unary());
    if (ts_.accept(Tok::DiamondOp)) return ModalFormula::diamond(unary());
    if (ts_.accept(Tok::LParen)) {
      ModalFormula f = implication();
      ts_.expect(Tok::RParen, "to close '('");
      return f;
    }
    Token t = ts_.expect(Tok::Ident, "as a proposition");
    if (t.text == "true") return ModalFormula::top();
    if (t.text == "false") return ModalFormula::bottom();
    return ModalFormula::prop(t.text);
  }
};

// ---- two-sorted ----

class Fol2Parser {
 public:
  explicit Fol2Parser(TokenStream ts) : ts_(std::move(ts)) {}

  Fol2Formula parse() {
    Fol2Formula f = formula();
    if (ts_.peek().kind != Tok::End) ts_.err("expected end of formula");
    return f;
  }

 private:
  TokenStream ts_;

  Term term() {
    if (ts_.peek().kind == Tok::Constant) return Term::constant(ts_.next().text);
    Token t = ts_.expect(Tok::Ident, "as a term");
    return Term::var(t.text);
  }

  Fol2Formula formula() {
    ts_.expect(Tok::LParen, "to open an s-expression");
    Fol2Formula f = head();
    ts_.expect(Tok::RParen, "to close the s-expression");
    return f;
  }

  Fol2Formula head() {
    if (ts_.accept(Tok::Eq)) {
      Term a = term(), b = term();
      bool an = a.is_variable() && is_nbhd_variable(a.name);
      bool bn = b.is_variable() && is_nbhd_variable(b.name);
      if (an != bn) {
        fail(ErrorCode::SortError, "'=' needs both sides of the same sort, got \"" +
                                       a.name + "\" and \"" + b.name + "\"");
      }
      if (an) return Fol2Formula::equal_nbhd(a.name, b.name);
      return Fol2Formula::equal_state(a, b);
    }
    Token h = ts_.expect(Tok::Ident, "as the operator");
    const std::string& op = h.text;
    if (op == "pred") {
      Token p = ts_.expect(Tok::Ident, "as the predicate name");
      std::vector<Term> args;
      while (ts_.peek().kind == Tok::Ident || ts_.peek().kind == Tok::Constant) {
        args.push_back(term());
      }
      if (args.empty()) ts_.err("expected at least one predicate argument");
      return Fol2Formula::pred(p.text, std::move(args));
    }
    if (op == "in" || op == "N") {
      Term s = term();
      Token u = ts_.expect(Tok::Ident, "as the neighborhood variable");
      if (op == "in") return Fol2Formula::in(s, u.text);
      return Fol2Formula::n(s, u.text);
    }
    if (op == "not") return Fol2Formula::negation(formula());
    if (op == "and" || op == "or" || op == "implies" || op == "iff") {
      Fol2Formula a = formula();
      Fol2Formula b = formula();
      if (op == "and") return Fol2Formula::conj(a, b);
      if (op == "or") return Fol2Formula::disj(a, b);
      if (op == "implies") return Fol2Formula::implies(a, b);
      return Fol2Formula::iff(a, b);
    }
    if (op == "exists" || op == "forall") {
      Token v = ts_.expect(Tok::Ident, "as the quantified variable");
      Fol2Formula body = formula();
      if (op == "exists") return Fol2Formula::exists(v.text, body);
      return Fol2Formula::forall(v.text, body);
    }
    fail(ErrorCode::ParseError,
         std::to_string(h.line) + ":" + std::to_string(h.col) + ": unknown operator \"" +
             op + "\"");
  }
};

}  // namespace

CplFormula parse_cpl(const std::string& text, const Signature& sig) {
  return CplParser(TokenStream(tokenize(text)), sig).parse();
}

ModalFormula parse_modal(const std::string& text) {
  return ModalParser(TokenStream(tokenize(text))).parse();
}

Fol2Formula parse_fol2(const std::string& text) {
  return Fol2Parser(TokenStream(tokenize(text))).parse();
}

std::vector<std::string> formula_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace cplkit
