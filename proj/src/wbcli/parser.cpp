#include <algorithm>
#include <cctype>
#include <set>

#include "povswb/wbcli/document.hpp"

namespace povswb::wbcli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const SpaceDecl* WorkbenchFile::find_space(std::string_view name) const {
  for (const auto& s : spaces)
    if (s.name == name) return &s;
  return nullptr;
}

const MapDecl* WorkbenchFile::find_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

order::PreOrderedSpace WorkbenchFile::space(std::string_view name) const {
  const SpaceDecl* s = find_space(name);
  if (s == nullptr) throw std::invalid_argument("unknown space " + std::string(name));
  return order::PreOrderedSpace(s->wedge);
}

namespace {

using semilin::Cell;
using semilin::LinConstraint;
using semilin::Relation;

enum class Tok { Ident, Number, Symbol, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  static const std::vector<std::string> symbols = {":=", "->", "<=", ">=", "(", ")", "[", "]", ",", ":", ".",
                                                   "&",  "|",  "<",  ">",  "=", "+", "-", "*", "/", "^"};
  std::vector<Token> out;
  std::size_t line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().kind != Tok::Newline) out.push_back({Tok::Newline, "", line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& s : symbols) {
      if (src.substr(i, s.size()) == s) {
        if (s == "(" || s == "[") ++depth;
        if ((s == ")" || s == "]") && depth > 0) --depth;
        out.push_back({Tok::Symbol, s, l, cc});
        advance(s.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
  }
  if (!out.empty() && out.back().kind != Tok::Newline) out.push_back({Tok::Newline, "", line, col});
  out.push_back({Tok::End, "", line, col});
  // A line starting with | or & continues the previous one.
  std::vector<Token> joined;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const bool continues = out[j].kind == Tok::Newline && j + 1 < out.size() && out[j + 1].kind == Tok::Symbol &&
                           (out[j + 1].text == "|" || out[j + 1].text == "&");
    if (!continues) joined.push_back(std::move(out[j]));
  }
  return joined;
}

// Affine form sum coeffs[i] x_{i+1} + constant; grows as variables appear.
struct Form {
  Vector coeffs;
  Rational constant = 0;

  void add(const Form& o, const Rational& f) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += f * o.coeffs[i];
    constant += f * o.constant;
  }
};

// Boolean expression tree over atoms.
struct Expr {
  enum Kind { Atom, And, Or, True, False } kind;
  Form lhs;
  Relation rel = Relation::LE;
  bool flipped = false;  // lhs REL 0 read as 0 REL lhs
  std::vector<Expr> children;
  std::size_t line = 0, column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  WorkbenchFile file() {
    while (peek().kind != Tok::End) {
      if (accept_newline()) continue;
      declaration();
      if (peek().kind != Tok::End) expect_newline();
    }
    for (const auto& s : out_.spaces)
      if (!wedge_seen_.count(s.name))
        throw ParseError(s.line, 1, "space " + s.name + " has no wedge declaration");
    return std::move(out_);
  }

  seq::SymbolicSequence sequence_only() {
    auto s = sequence();
    accept_newline();
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after sequence");
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::Newline:
        return "end of line";
      case Tok::End:
        return "end of input";
      default:
        return "'" + t.text + "'";
    }
  }

  bool is_symbol(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
  }
  bool is_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }

  bool accept(const std::string& s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) fail(peek(), "expected '" + s + "', found " + describe(peek()));
  }
  void expect_word(const std::string& w) {
    if (!is_word(w)) fail(peek(), "expected '" + w + "', found " + describe(peek()));
    next();
  }
  bool accept_newline() {
    if (peek().kind != Tok::Newline) return false;
    next();
    return true;
  }
  void expect_newline() {
    if (!accept_newline()) fail(peek(), "expected end of line, found " + describe(peek()));
  }

  const Token& identifier(const char* what) {
    if (peek().kind != Tok::Ident) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

  const Token& fresh_name() {
    const Token& t = identifier("a name");
    if (!names_.insert(t.text).second) fail(t, "duplicate name '" + t.text + "'");
    return t;
  }

  const SpaceDecl& space_ref() {
    const Token& t = identifier("a space name");
    const SpaceDecl* s = out_.find_space(t.text);
    if (s == nullptr) fail(t, "unknown identifier '" + t.text + "'");
    return *s;
  }

  exact::Integer integer() {
    if (peek().kind != Tok::Number) fail(peek(), "expected a number, found " + describe(peek()));
    return exact::Integer(next().text);
  }

  // [-] n [/ m]
  Rational rational() {
    const bool neg = accept("-");
    const Token& at = peek();
    Rational r(integer());
    if (accept("/")) {
      const exact::Integer d = integer();
      if (d == 0) fail(at, "zero denominator");
      r /= Rational(d);
    }
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

  void declaration() {
    const Token& kw = identifier("a declaration");
    if (kw.text == "space") return space_decl();
    if (kw.text == "wedge") return wedge_decl();
    if (kw.text == "vector") return vector_decl();
    if (kw.text == "set") return set_decl();
    if (kw.text == "map") return map_decl();
    if (kw.text == "seq") return seq_decl();
    if (kw.text == "expect") return expect_decl();
    fail(kw, "unknown declaration '" + kw.text + "'");
  }

  void space_decl() {
    const Token& name = fresh_name();
    expect_word("dim");
    const Token& at = peek();
    const exact::Integer d = integer();
    if (d > 64) fail(at, "dimension too large");
    out_.spaces.push_back({name.text, d.get_ui(), SemiLinearSet::universe(d.get_ui()), name.line});
  }

  void wedge_decl() {
    const Token& name = identifier("a space name");
    if (accept(".")) {
      SpaceDecl* s = nullptr;
      for (auto& sp : out_.spaces)
        if (sp.name == name.text) s = &sp;
      if (s == nullptr) fail(name, "unknown identifier '" + name.text + "'");
      expect_word("pos");
      expect(":=");
      if (!wedge_seen_.insert(name.text).second) fail(name, "wedge of " + name.text + " declared twice");
      const Expr e = expression(true);
      s->wedge = semilin::normalize(to_set(e, s->dim));
      return;
    }
    if (!names_.insert(name.text).second) fail(name, "duplicate name '" + name.text + "'");
    expect(":=");
    const Expr e = expression(true);
    const std::size_t dim = std::max<std::size_t>(1, max_variable(e));
    out_.spaces.push_back({name.text, dim, semilin::normalize(to_set(e, dim)), name.line});
    wedge_seen_.insert(name.text);
  }

  void vector_decl() {
    const Token& name = fresh_name();
    expect_word("in");
    const SpaceDecl& s = space_ref();
    expect(":=");
    const Token& at = peek();
    Vector v = rational_list();
    if (v.size() != s.dim)
      fail(at, "dimension mismatch: vector has " + std::to_string(v.size()) + " entries, " + s.name + " has dim " +
                   std::to_string(s.dim));
    out_.vectors.push_back({name.text, s.name, std::move(v)});
  }

  void set_decl() {
    const Token& name = fresh_name();
    expect_word("in");
    const SpaceDecl& s = space_ref();
    expect(":=");
    const Expr e = expression(false);
    out_.sets.push_back({name.text, s.name, semilin::normalize(to_set(e, s.dim))});
  }

  void map_decl() {
    const Token& name = fresh_name();
    expect(":");
    const SpaceDecl& dom = space_ref();
    expect("->");
    const SpaceDecl& cod = space_ref();
    expect_word("matrix");
    const Token& at = peek();
    expect("[");
    std::vector<Vector> rows;
    if (!is_symbol("]")) {
      do rows.push_back(rational_list());
      while (accept(","));
    }
    expect("]");
    if (rows.size() != cod.dim)
      fail(at, "dimension mismatch: " + std::to_string(rows.size()) + " rows for codomain " + cod.name + " of dim " +
                   std::to_string(cod.dim));
    for (const auto& r : rows)
      if (r.size() != dom.dim)
        fail(at, "dimension mismatch: row of length " + std::to_string(r.size()) + " for domain " + dom.name +
                     " of dim " + std::to_string(dom.dim));
    out_.maps.push_back({name.text, dom.name, cod.name, Matrix::from_rows(dom.dim, rows)});
  }

  void seq_decl() {
    const Token& name = fresh_name();
    std::optional<seq::SeqClass> ambient;
    if (is_word("in")) {
      next();
      const Token& a = identifier("c0 or linf");
      if (a.text == "c0") {
        ambient = seq::SeqClass::c0;
      } else if (a.text == "linf") {
        ambient = seq::SeqClass::linf;
      } else {
        fail(a, "ambient space must be c0 or linf");
      }
    }
    expect(":=");
    out_.sequences.push_back({name.text, ambient, sequence()});
  }

  void expect_decl() {
    const Token& subject = identifier("a name");
    if (!names_.count(subject.text)) fail(subject, "unknown identifier '" + subject.text + "'");
    const Token& prop = identifier("a property");
    expect("=");
    std::string value;
    if (peek().kind == Tok::Ident || peek().kind == Tok::Number) {
      value = next().text;
    } else {
      fail(peek(), "expected a value, found " + describe(peek()));
    }
    out_.expectations.push_back({subject.text, prop.text, value, subject.line});
  }

  Vector rational_list() {
    expect("[");
    Vector v;
    if (!is_symbol("]")) {
      do v.push_back(rational());
      while (accept(","));
    }
    expect("]");
    return v;
  }

  // ---- wedge and set expressions ----

  Expr expression(bool homogeneous) {
    Expr first = conjunction(homogeneous);
    if (!is_symbol("|")) return first;
    Expr e{Expr::Or, {}, Relation::LE, false, {std::move(first)}, 0, 0};
    while (accept("|")) e.children.push_back(conjunction(homogeneous));
    return e;
  }

  Expr conjunction(bool homogeneous) {
    Expr first = primary(homogeneous);
    if (!is_symbol("&")) return first;
    Expr e{Expr::And, {}, Relation::LE, false, {std::move(first)}, 0, 0};
    while (accept("&")) e.children.push_back(primary(homogeneous));
    return e;
  }

  Expr primary(bool homogeneous) {
    if (accept("(")) {
      Expr e = expression(homogeneous);
      expect(")");
      return e;
    }
    if (is_word("true")) {
      next();
      return {Expr::True, {}, Relation::LE, false, {}, 0, 0};
    }
    if (is_word("false")) {
      next();
      return {Expr::False, {}, Relation::LE, false, {}, 0, 0};
    }
    const Token& at = peek();
    Form lhs = linear_form();
    const Token& op = peek();
    if (op.kind != Tok::Symbol) fail(op, "expected a comparison, found " + describe(op));
    Relation rel;
    bool flipped = false;
    if (op.text == "<") {
      rel = Relation::LT;
    } else if (op.text == "<=") {
      rel = Relation::LE;
    } else if (op.text == "=") {
      rel = Relation::EQ;
    } else if (op.text == ">=") {
      rel = Relation::LE;
      flipped = true;
    } else if (op.text == ">") {
      rel = Relation::LT;
      flipped = true;
    } else {
      fail(op, "expected a comparison, found " + describe(op));
    }
    next();
    const Form rhs = linear_form();
    lhs.add(rhs, -1);
    if (homogeneous && sgn(lhs.constant) != 0) fail(at, "non-homogeneous wedge constraint (nonzero constant term)");
    return {Expr::Atom, std::move(lhs), rel, flipped, {}, at.line, at.column};
  }

  // [±] term {± term}, term = rational [*] variable | variable | rational
  Form linear_form() {
    Form f;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!first && !accept("+")) {
        break;
      } else if (first) {
        accept("+");
      }
      f.add(term(), sign);
      first = false;
      if (!is_symbol("+") && !is_symbol("-")) break;
    }
    return f;
  }

  Form term() {
    Form f;
    Rational c = 1;
    bool have_number = false;
    if (peek().kind == Tok::Number) {
      c = rational();
      have_number = true;
      accept("*");
    }
    if (peek().kind == Tok::Ident) {
      const Token& v = next();
      const std::size_t idx = variable_index(v);
      f.coeffs.assign(idx + 1, Rational(0));
      f.coeffs[idx] = c;
      return f;
    }
    if (!have_number) fail(peek(), "expected a term, found " + describe(peek()));
    f.constant = c;
    return f;
  }

  std::size_t variable_index(const Token& v) {
    const std::string& s = v.text;
    const bool ok = s.size() >= 2 && s[0] == 'x' && s[1] != '0' &&
                    std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (!ok || s.size() > 4) fail(v, "unknown identifier '" + s + "' (variables are x1, x2, ...)");
    return std::stoul(s.substr(1)) - 1;
  }

  static std::size_t max_variable(const Expr& e) {
    if (e.kind == Expr::Atom) {
      for (std::size_t i = e.lhs.coeffs.size(); i > 0; --i)
        if (sgn(e.lhs.coeffs[i - 1]) != 0) return i;
      return 0;
    }
    std::size_t m = 0;
    for (const auto& c : e.children) m = std::max(m, max_variable(c));
    return m;
  }

  static SemiLinearSet to_set(const Expr& e, std::size_t dim) {
    switch (e.kind) {
      case Expr::True:
        return SemiLinearSet::universe(dim);
      case Expr::False:
        return SemiLinearSet::empty(dim);
      case Expr::Atom: {
        for (std::size_t i = dim; i < e.lhs.coeffs.size(); ++i)
          if (sgn(e.lhs.coeffs[i]) != 0)
            throw ParseError(e.line, e.column,
                             "dimension mismatch: x" + std::to_string(i + 1) + " used in a space of dim " +
                                 std::to_string(dim));
        Vector coeffs = e.lhs.coeffs;
        coeffs.resize(dim, Rational(0));
        Rational constant = -e.lhs.constant;
        if (e.flipped) {
          coeffs = exact::negate(coeffs);
          constant = -constant;
        }
        return SemiLinearSet::from_cell(Cell(dim, {LinConstraint(std::move(coeffs), e.rel, constant)}));
      }
      case Expr::And: {
        SemiLinearSet acc = SemiLinearSet::universe(dim);
        for (const auto& c : e.children) acc = semilin::intersect(acc, to_set(c, dim));
        return acc;
      }
      case Expr::Or: {
        SemiLinearSet acc = SemiLinearSet::empty(dim);
        for (const auto& c : e.children) acc = semilin::unite(acc, to_set(c, dim));
        return acc;
      }
    }
    return SemiLinearSet::empty(dim);
  }

  // ---- sequences ----

  seq::SymbolicSequence sequence() {
    seq::SymbolicSequence s;
    bool first = true;
    while (true) {
      Rational sign = 1;
      if (accept("-")) {
        sign = -1;
      } else if (!first && !accept("+")) {
        break;
      } else if (first) {
        accept("+");
      }
      s = s + sign * seq_term();
      first = false;
      if (!is_symbol("+") && !is_symbol("-")) break;
    }
    return s;
  }

  // c | c*item | item, item = (q)^k | k^(-p) | delta(n)
  seq::SymbolicSequence seq_term() {
    Rational c = 1;
    if (peek().kind == Tok::Number) {
      c = rational();
      if (!accept("*")) return seq::SymbolicSequence::constant(c);
    }
    const Token& at = peek();
    if (accept("(")) {
      const Rational q = rational();
      expect(")");
      expect("^");
      expect_word("k");
      if (sgn(q) <= 0 || q >= 1) fail(at, "geometric ratio must lie strictly between 0 and 1");
      return seq::SymbolicSequence::geometric(c, q);
    }
    if (is_word("k")) {
      next();
      expect("^");
      expect("(");
      expect("-");
      const Token& pt = peek();
      const Rational p = rational();
      expect(")");
      if (sgn(p) <= 0) fail(pt, "power exponent must be positive");
      return seq::SymbolicSequence::power(c, p);
    }
    if (is_word("delta")) {
      next();
      expect("(");
      const Token& it = peek();
      const exact::Integer k = integer();
      if (k < 1) fail(it, "sequence indices start at 1");
      expect(")");
      return seq::SymbolicSequence::delta(k.get_ui(), c);
    }
    fail(at, "expected a sequence term, found " + describe(at));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  WorkbenchFile out_;
  std::set<std::string> names_;
  std::set<std::string> wedge_seen_;
};

}  // namespace

WorkbenchFile parse(std::string_view text) { return Parser(text).file(); }

seq::SymbolicSequence parse_sequence(std::string_view text) { return Parser(text).sequence_only(); }

std::string to_dsl(const SemiLinearSet& s) { return s.to_string(); }

std::string to_dsl(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += to_dsl(m.row(r));
  }
  return out + "]";
}

std::string to_dsl(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += exact::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace povswb::wbcli
