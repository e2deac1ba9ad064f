// Recursive-descent reader for the presentation DSL.
//
//   gens a[i] for i >= 1, x;
//   attrs torsion_free;
//   let p = 3;
//   rels a[1]^p; a[s]^p a[s-1]^-1 for s >= 2;
//   rels [a[k], a[l]] for k, l >= 1;
//
// `^` takes an integer or affine exponent (power) or a word (conjugation):
// `y^x`, `y^-x`, `y^[x y^2]`, `y^(x y)` conjugate; `y^2`, `y^-s`, `y^(s-1)`
// raise to a power.  A bare identifier after `^` is a power when it names a
// parameter or constant and a conjugator when it names a generator.

#include <cctype>
#include <set>

#include "twogen/presentation.hpp"

namespace twogen {

namespace {

enum class Tok {
  ident,
  integer,
  lbrack,
  rbrack,
  lparen,
  rparen,
  comma,
  semi,
  newline,
  caret,
  star,
  minus,
  plus,
  equals,
  dotdot,
  ge,
  colon,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  std::size_t line = 1;
  std::size_t col = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  int depth = 0;
  auto push = [&](Tok k, std::size_t len, std::string text = {}) {
    out.push_back({k, std::move(text), 0, line, col});
    i += len;
    col += len;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      if (depth == 0) {
        out.push_back({Tok::newline, "\n", 0, line, col});
      }
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        ++i;
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_')) {
        ++j;
      }
      std::string word(src.substr(i, j - i));
      push(Tok::ident, j - i, word);
      // `gamma:` opens the image listing of an embedding report, which is
      // not DSL; nothing after it is read.
      if (word == "gamma" && depth == 0) {
        std::size_t k = i;
        while (k < src.size() && (src[k] == ' ' || src[k] == '\t')) {
          ++k;
        }
        if (k < src.size() && src[k] == ':') {
          out.push_back({Tok::colon, ":", 0, line, col});
          break;
        }
      }
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      std::string digits(src.substr(i, j - i));
      if (digits.size() > 15) {
        throw ParseError(line, col, "integer literal too large");
      }
      Token t{Tok::integer, digits, std::stol(digits), line, col};
      out.push_back(t);
      col += j - i;
      i = j;
      continue;
    }
    switch (c) {
      case '[':
        ++depth;
        push(Tok::lbrack, 1, "[");
        break;
      case ']':
        --depth;
        push(Tok::rbrack, 1, "]");
        break;
      case '(':
        ++depth;
        push(Tok::lparen, 1, "(");
        break;
      case ')':
        --depth;
        push(Tok::rparen, 1, ")");
        break;
      case ',':
        push(Tok::comma, 1, ",");
        break;
      case ';':
        push(Tok::semi, 1, ";");
        break;
      case '^':
        push(Tok::caret, 1, "^");
        break;
      case '*':
        push(Tok::star, 1, "*");
        break;
      case '-':
        push(Tok::minus, 1, "-");
        break;
      case '+':
        push(Tok::plus, 1, "+");
        break;
      case '=':
        push(Tok::equals, 1, "=");
        break;
      case ':':
        push(Tok::colon, 1, ":");
        break;
      case '.':
        if (i + 1 < src.size() && src[i + 1] == '.') {
          push(Tok::dotdot, 2, "..");
          break;
        }
        throw ParseError(line, col, "unexpected '.'");
      case '>':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          push(Tok::ge, 2, ">=");
          break;
        }
        throw ParseError(line, col, "expected '>='");
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c +
                                        "'");
    }
  }
  out.push_back({Tok::end, "", 0, line, col});
  return out;
}

bool is_keyword(std::string const& s) {
  static std::set<std::string> const kw = {"gens", "rels", "attrs", "let",
                                           "for",  "in",   "gamma"};
  return kw.contains(s);
}

class Parser {
 public:
  Parser(std::string_view src, Presentation base, bool lenient)
      : toks_(lex(src)), p_(std::move(base)), lenient_(lenient) {
    limit_ = toks_.size() - 1;
  }

  Presentation parse_all() {
    enum class Mode { none, gens, rels } mode = Mode::none;
    while (peek().kind != Tok::end) {
      Token const& t = peek();
      if (t.kind == Tok::semi || t.kind == Tok::newline) {
        ++pos_;
        continue;
      }
      if (t.kind == Tok::ident && t.text == "gens") {
        ++pos_;
        mode = Mode::gens;
        continue;
      }
      if (t.kind == Tok::ident && t.text == "rels") {
        ++pos_;
        mode = Mode::rels;
        continue;
      }
      if (t.kind == Tok::ident && t.text == "attrs") {
        ++pos_;
        parse_attrs();
        mode = Mode::none;
        continue;
      }
      if (t.kind == Tok::ident && t.text == "let") {
        ++pos_;
        parse_let();
        mode = Mode::none;
        continue;
      }
      if (t.kind == Tok::ident && t.text == "gamma" &&
          toks_[pos_ + 1].kind == Tok::colon) {
        break;
      }
      if (mode == Mode::gens) {
        parse_gen_decls();
      } else if (mode == Mode::rels) {
        parse_relator_item();
      } else {
        fail(t, "expected 'gens', 'rels', 'attrs' or 'let'");
      }
    }
    try {
      validate(p_);
    } catch (PresentationError const& e) {
      fail(peek(), e.what());
    }
    return std::move(p_);
  }

  Word parse_single_word() {
    SchemaWord w = parse_product();
    if (peek().kind != Tok::end) {
      fail(peek(), "unexpected '" + peek().text + "' after word");
    }
    return evaluate(w, {});
  }

 private:
  [[noreturn]] void fail(Token const& t, std::string const& what) const {
    throw ParseError(t.line, t.col, what);
  }

  Token const& peek(std::size_t ahead = 0) const {
    std::size_t k = pos_ + ahead;
    if (k < limit_) {
      return toks_[k];
    }
    Token const& at = toks_[limit_];
    sentinel_ = Token{Tok::end, "", 0, at.line, at.col};
    return sentinel_;
  }

  Token const& expect(Tok kind, char const* what) {
    Token const& t = peek();
    if (t.kind != kind) {
      fail(t, std::string("expected ") + what);
    }
    ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string expect_name(char const* what) {
    Token const& t = expect(Tok::ident, what);
    if (is_keyword(t.text)) {
      fail(t, std::string("keyword '") + t.text + "' used as " + what);
    }
    return t.text;
  }

  long parse_int_value() {
    bool neg = accept(Tok::minus);
    Token const& t = peek();
    long v = 0;
    if (t.kind == Tok::integer) {
      v = t.value;
    } else if (t.kind == Tok::ident && consts_.contains(t.text)) {
      v = consts_.at(t.text);
    } else {
      fail(t, "expected an integer");
    }
    ++pos_;
    return neg ? -v : v;
  }

  void parse_attrs() {
    do {
      Token const& t = expect(Tok::ident, "attribute name");
      if (t.text == "torsion_free") {
        p_.torsion_free_asserted = true;
      } else {
        fail(t, "unknown attribute '" + t.text + "'");
      }
    } while (accept(Tok::comma));
  }

  void parse_let() {
    Token const& at = peek();
    std::string name = expect_name("constant name");
    if (p_.find(name) != nullptr || consts_.contains(name)) {
      fail(at, "'" + name + "' is already defined");
    }
    expect(Tok::equals, "'='");
    consts_[name] = parse_int_value();
  }

  void parse_gen_decls() {
    do {
      Token const& at = peek();
      GeneratorDecl d;
      d.name = expect_name("generator name");
      if (p_.find(d.name) != nullptr || consts_.contains(d.name)) {
        fail(at, "generator '" + d.name + "' declared twice");
      }
      if (accept(Tok::lbrack)) {
        std::string param = expect_name("family parameter");
        expect(Tok::rbrack, "']'");
        Token const& kw = expect(Tok::ident, "'for'");
        if (kw.text != "for") {
          fail(kw, "expected 'for'");
        }
        Token const& pt = peek();
        if (expect_name("family parameter") != param) {
          fail(pt, "family parameter must match '" + param + "'");
        }
        expect(Tok::ge, "'>='");
        d.param = param;
        d.lo = parse_int_value();
      }
      p_.generators.push_back(std::move(d));
    } while (accept(Tok::comma));
  }

  bool ends_item(Token const& t) const {
    return t.kind == Tok::semi || t.kind == Tok::newline ||
           t.kind == Tok::end ||
           (t.kind == Tok::ident &&
            (t.text == "gens" || t.text == "rels" || t.text == "attrs" ||
             t.text == "let" || t.text == "gamma"));
  }

  void parse_relator_item() {
    std::size_t start = pos_;
    std::size_t end = pos_;
    std::size_t for_at = 0;
    int depth = 0;
    while (true) {
      Token const& t = toks_[end];
      if (t.kind == Tok::lbrack || t.kind == Tok::lparen) {
        ++depth;
      } else if (t.kind == Tok::rbrack || t.kind == Tok::rparen) {
        --depth;
      }
      if (depth <= 0 && (t.kind == Tok::end || ends_item(t))) {
        break;
      }
      if (depth == 0 && t.kind == Tok::ident && t.text == "for" &&
          for_at == 0) {
        for_at = end;
      }
      ++end;
    }
    range_ = ParamRange{};
    if (for_at != 0) {
      pos_ = for_at + 1;
      limit_ = end;
      parse_range();
      if (peek().kind != Tok::end) {
        fail(peek(), "unexpected '" + peek().text + "' after range");
      }
    }
    pos_ = start;
    limit_ = for_at != 0 ? for_at : end;
    Token const& first = peek();
    SchemaWord w = parse_product();
    if (peek().kind != Tok::end) {
      fail(peek(), "unexpected '" + peek().text + "'");
    }
    limit_ = toks_.size() - 1;
    pos_ = end;

    if (range_.params.empty()) {
      Word concrete = evaluate(w, {});
      if (!concrete.empty()) {
        p_.relators.push_back(std::move(concrete));
      }
      return;
    }
    if (range_.params.size() > 2) {
      fail(first, "a relator schema takes at most two parameters");
    }
    p_.schemas.push_back({std::move(w), range_});
    range_ = ParamRange{};
  }

  void parse_range() {
    do {
      std::vector<Token> names;
      do {
        Token const& t = peek();
        std::string name = expect_name("parameter name");
        if (p_.find(name) != nullptr || consts_.contains(name)) {
          fail(t, "parameter '" + name + "' clashes with a declared name");
        }
        if (range_.find(name) != nullptr) {
          fail(t, "parameter '" + name + "' bound twice");
        }
        names.push_back(t);
      } while (accept(Tok::comma));
      ParamBound b;
      Token const& op = peek();
      if (accept(Tok::ge)) {
        b.lo = parse_int_value();
      } else if (op.kind == Tok::ident && op.text == "in") {
        ++pos_;
        b.lo = parse_int_value();
        expect(Tok::dotdot, "'..'");
        b.hi = parse_int_value();
        if (*b.hi < b.lo) {
          fail(op, "empty parameter range");
        }
      } else {
        fail(op, "expected '>=' or 'in'");
      }
      for (auto const& n : names) {
        b.name = n.text;
        range_.params.push_back(b);
      }
    } while (accept(Tok::comma));
  }

  bool is_param(std::string const& s) const {
    return range_.find(s) != nullptr || consts_.contains(s);
  }

  bool starts_factor(Token const& t) const {
    return t.kind == Tok::ident || t.kind == Tok::lparen ||
           t.kind == Tok::lbrack || t.kind == Tok::minus ||
           (t.kind == Tok::integer && t.value == 1);
  }

  SchemaWord parse_product() {
    SchemaWord w;
    bool any = false;
    while (true) {
      if (any && accept(Tok::star)) {
        w = concat(w, parse_factor());
        continue;
      }
      if (!starts_factor(peek())) {
        break;
      }
      w = concat(w, parse_factor());
      any = true;
    }
    if (!any) {
      fail(peek(), "expected a word");
    }
    return w;
  }

  SchemaWord parse_factor() {
    bool invert = accept(Tok::minus);
    SchemaWord w = parse_primary();
    while (accept(Tok::caret)) {
      w = parse_exponent(w);
    }
    return invert ? inverse(w) : w;
  }

  SchemaWord parse_primary() {
    Token const& t = peek();
    if (t.kind == Tok::integer && t.value == 1) {
      ++pos_;
      return {};
    }
    if (accept(Tok::lparen)) {
      SchemaWord w = parse_product();
      expect(Tok::rparen, "')'");
      return w;
    }
    if (accept(Tok::lbrack)) {
      SchemaWord u = parse_product();
      expect(Tok::comma, "',' in commutator");
      SchemaWord v = parse_product();
      expect(Tok::rbrack, "']'");
      return concat(concat(inverse(u), inverse(v)), concat(u, v));
    }
    if (t.kind == Tok::ident) {
      return parse_generator();
    }
    fail(t, "expected a generator, '(' or '['");
  }

  SchemaWord parse_generator() {
    Token const& t = peek();
    std::string name = expect_name("generator");
    if (is_param(name)) {
      fail(t, "'" + name + "' is a parameter, not a generator");
    }
    SchemaLetter l{name, std::nullopt, Affine(1)};
    if (accept(Tok::lbrack)) {
      l.index = parse_affine();
      expect(Tok::rbrack, "']'");
    }
    if (lenient_ && p_.generators.empty()) {
      if (l.index && !l.index->is_constant()) {
        fail(t, "parametric index outside a schema");
      }
      return SchemaWord({l});
    }
    auto const* d = p_.find(name);
    if (d == nullptr) {
      fail(t, "undeclared generator '" + name + "'");
    }
    if (d->is_family() && !l.index) {
      fail(t, "generator family '" + name + "' needs an index");
    }
    if (!d->is_family() && l.index) {
      fail(t, "generator '" + name + "' is not an indexed family");
    }
    if (l.index) {
      auto iv = bounds_over(*l.index, range_);
      if (!iv.lo || *iv.lo < d->lo) {
        fail(t, "index " + to_string(*l.index) + " out of range for family " +
                    name + " (starts at " + std::to_string(d->lo) + ")");
      }
    }
    return SchemaWord({l});
  }

  // Decides whether a parenthesised group after '^' is an exponent.
  bool paren_is_affine() const {
    int depth = 0;
    for (std::size_t k = pos_;; ++k) {
      Token const& t = peek(k - pos_);
      switch (t.kind) {
        case Tok::lparen:
          ++depth;
          break;
        case Tok::rparen:
          if (--depth == 0) {
            return true;
          }
          break;
        case Tok::integer:
        case Tok::plus:
        case Tok::minus:
        case Tok::star:
          break;
        case Tok::ident:
          if (!is_param(t.text)) {
            return false;
          }
          break;
        default:
          return false;
      }
    }
  }

  SchemaWord with_power(SchemaWord const& base, Affine const& e,
                        Token const& at) {
    try {
      return power(base, e);
    } catch (SchemaError const& err) {
      fail(at, err.what());
    }
  }

  SchemaWord parse_exponent(SchemaWord const& base) {
    Token const& at = peek();
    if (accept(Tok::lbrack)) {
      SchemaWord h = parse_product();
      expect(Tok::rbrack, "']'");
      return concat(concat(inverse(h), base), h);
    }
    if (at.kind == Tok::lparen) {
      if (paren_is_affine()) {
        return with_power(base, parse_affine_atom(), at);
      }
      ++pos_;
      SchemaWord h = parse_product();
      expect(Tok::rparen, "')'");
      return concat(concat(inverse(h), base), h);
    }
    bool neg = accept(Tok::minus);
    Token const& t = peek();
    if (t.kind == Tok::integer) {
      ++pos_;
      return with_power(base, Affine(neg ? -t.value : t.value), at);
    }
    if (t.kind == Tok::ident && is_param(t.text)) {
      Affine e = parse_affine_atom();
      return with_power(base, neg ? -e : e, at);
    }
    if (t.kind == Tok::ident) {
      SchemaWord h = parse_generator();
      if (neg) {
        h = inverse(h);
      }
      return concat(concat(inverse(h), base), h);
    }
    fail(t, "expected an exponent or conjugator after '^'");
  }

  Affine parse_affine() {
    bool neg = accept(Tok::minus);
    Affine a = parse_affine_term();
    if (neg) {
      a = -a;
    }
    while (true) {
      if (accept(Tok::plus)) {
        a += parse_affine_term();
      } else if (accept(Tok::minus)) {
        a -= parse_affine_term();
      } else {
        return a;
      }
    }
  }

  Affine parse_affine_term() {
    Token const& t = peek();
    if (t.kind == Tok::integer) {
      ++pos_;
      if (accept(Tok::star)) {
        return parse_affine_atom() * t.value;
      }
      return Affine(t.value);
    }
    return parse_affine_atom();
  }

  Affine parse_affine_atom() {
    Token const& t = peek();
    if (accept(Tok::lparen)) {
      Affine a = parse_affine();
      expect(Tok::rparen, "')'");
      return a;
    }
    if (t.kind == Tok::integer) {
      ++pos_;
      return Affine(t.value);
    }
    if (t.kind == Tok::ident) {
      ++pos_;
      if (auto it = consts_.find(t.text); it != consts_.end()) {
        return Affine(it->second);
      }
      if (range_.find(t.text) != nullptr) {
        return Affine::param(t.text);
      }
      fail(t, "unknown parameter '" + t.text + "'");
    }
    fail(t, "expected an integer expression");
  }

  std::vector<Token> toks_;
  mutable Token sentinel_{Tok::end, "", 0, 1, 1};
  std::size_t pos_ = 0;
  std::size_t limit_ = 0;
  Presentation p_;
  std::map<std::string, long> consts_;
  ParamRange range_;
  bool lenient_ = false;
};

}  // namespace

Presentation parse(std::string_view text) {
  return Parser(text, {}, false).parse_all();
}

Word parse_word(std::string_view text, Presentation const& p) {
  return Parser(text, p, true).parse_single_word();
}

}  // namespace twogen
