#include "hhcalc/presentation.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace hhcalc {

void validate(const BoundQuiverPresentation& pres) {
  const bool explicit_order = pres.order.kind == OrderPolicy::Kind::explicit_leading;
  if (explicit_order && pres.leading.size() != pres.relations.size()) {
    throw ValidationError("explicit order requires one leading term per relation");
  }
  if (!explicit_order && !pres.leading.empty()) {
    throw ValidationError("leading terms given without explicit order");
  }
  std::set<std::size_t> seen;
  for (std::size_t a : pres.order.precedence) {
    if (a >= pres.quiver.arrow_count() || !seen.insert(a).second) {
      throw ValidationError("invalid arrow precedence list");
    }
  }
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const AlgebraElement& rel = pres.relations[i];
    if (!(rel.field() == pres.field)) throw ValidationError("relation over the wrong field");
    if (rel.is_zero()) throw ValidationError("relation " + std::to_string(i + 1) + " is zero");
    const Path& first = rel.terms().begin()->first;
    for (const auto& [path, coeff] : rel.terms()) {
      if (!path.parallel_to(first)) {
        throw ValidationError("relation " + std::to_string(i + 1) + " has non-parallel terms '" +
                              first.to_string(pres.quiver) + "' and '" +
                              path.to_string(pres.quiver) + "'");
      }
      if (path.length() < 2) {
        throw ValidationError("relation " + std::to_string(i + 1) +
                              " has a term of length < 2");
      }
      if (path.length() != first.length()) {
        throw ValidationError("relation " + std::to_string(i + 1) + " is not length-homogeneous");
      }
    }
    if (explicit_order && rel.coefficient(pres.leading[i]).is_zero()) {
      throw ValidationError("leading term of relation " + std::to_string(i + 1) +
                            " does not occur in it");
    }
  }
}

namespace {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance();
      continue;
    }
    const std::size_t l = line;
    const std::size_t k = col;
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      std::string word;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) != 0 ||
                                 text[i] == '_' || text[i] == '\'')) {
        word += text[i];
        advance();
      }
      out.push_back({Token::Kind::ident, word, l, k});
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        digits += text[i];
        advance();
      }
      out.push_back({Token::Kind::number, digits, l, k});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance();
      advance();
      out.push_back({Token::Kind::punct, "->", l, k});
    } else if (std::string_view("{}:;*/+-,").find(c) != std::string_view::npos) {
      advance();
      out.push_back({Token::Kind::punct, std::string(1, c), l, k});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, k);
    }
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  BoundQuiverPresentation run() {
    BoundQuiverPresentation pres;
    bool have_quiver = false;
    bool have_field = false;
    bool have_order = false;
    bool have_relations = false;
    while (peek().kind != Token::Kind::end) {
      const Token& t = peek();
      if (is_word("field")) {
        if (have_field || have_quiver) fail("'field' must come first and only once", t);
        next();
        pres.field = parse_field_spec();
        have_field = true;
      } else if (is_word("quiver")) {
        if (have_quiver) fail("duplicate quiver block", t);
        next();
        parse_quiver(pres.quiver);
        have_quiver = true;
      } else if (is_word("order")) {
        if (!have_quiver || have_order || have_relations) {
          fail("'order' must follow the quiver block", t);
        }
        next();
        parse_order(pres);
        have_order = true;
      } else if (is_word("relations")) {
        if (!have_quiver || have_relations) fail("'relations' must follow the quiver block", t);
        next();
        parse_relations(pres);
        have_relations = true;
      } else {
        fail("expected 'field', 'quiver', 'order' or 'relations'", t);
      }
    }
    if (!have_quiver) fail("missing quiver block", peek());
    validate(pres);
    return pres;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool is_punct(std::string_view p) const {
    return peek().kind == Token::Kind::punct && peek().text == p;
  }
  bool is_word(std::string_view w) const {
    return peek().kind == Token::Kind::ident && peek().text == w;
  }
  [[noreturn]] static void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.column);
  }
  void expect(std::string_view p) {
    if (!is_punct(p)) fail("expected '" + std::string(p) + "'", peek());
    next();
  }
  void expect_word(std::string_view w) {
    if (!is_word(w)) fail("expected '" + std::string(w) + "'", peek());
    next();
  }
  std::string name() {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident && t.kind != Token::Kind::number) fail("expected a name", t);
    next();
    return t.text;
  }

  Field parse_field_spec() {
    const Token& t = peek();
    if (is_word("rational")) {
      next();
      return Field::rationals();
    }
    if (is_word("fp")) {
      next();
      expect(":");
      if (peek().kind != Token::Kind::number) fail("expected a modulus", peek());
      const std::string digits = next().text;
      try {
        return parse_field("fp:" + digits);
      } catch (const Error& e) {
        fail(e.what(), t);
      }
    }
    fail("expected 'rational' or 'fp:<p>'", t);
  }

  void parse_quiver(Quiver& q) {
    expect("{");
    expect_word("vertices");
    expect(":");
    while (!is_punct(";") && !is_punct("}")) {
      const Token& t = peek();
      const std::string v = name();
      if (q.find_vertex(v)) fail("duplicate vertex '" + v + "'", t);
      q.add_vertex(v);
    }
    if (is_punct(";")) next();
    if (is_word("arrows")) {
      next();
      expect(":");
      while (!is_punct("}")) {
        const Token& t = peek();
        if (t.kind != Token::Kind::ident) fail("expected an arrow name", t);
        const std::string a = next().text;
        expect(":");
        const std::size_t s = vertex_ref(q);
        expect("->");
        const std::size_t r = vertex_ref(q);
        if (q.find_arrow(a)) fail("duplicate arrow '" + a + "'", t);
        q.add_arrow(a, s, r);
        if (is_punct(";")) {
          next();
        } else if (!is_punct("}")) {
          fail("expected ';' or '}'", peek());
        }
      }
    }
    expect("}");
  }

  std::size_t vertex_ref(const Quiver& q) {
    const Token& t = peek();
    const std::string v = name();
    auto idx = q.find_vertex(v);
    if (!idx) fail("unknown vertex '" + v + "'", t);
    return *idx;
  }

  void parse_order(BoundQuiverPresentation& pres) {
    if (is_word("explicit")) {
      next();
      pres.order.kind = OrderPolicy::Kind::explicit_leading;
      return;
    }
    expect_word("deglex");
    pres.order.kind = OrderPolicy::Kind::deglex;
    if (!is_punct(":")) return;
    next();
    while (peek().kind == Token::Kind::ident && !is_word("relations")) {
      const Token& t = next();
      auto a = pres.quiver.find_arrow(t.text);
      if (!a) fail("unknown arrow '" + t.text + "'", t);
      pres.order.precedence.push_back(*a);
    }
    if (pres.order.precedence.size() != pres.quiver.arrow_count()) {
      fail("precedence list must name every arrow exactly once", peek());
    }
  }

  Scalar coefficient() {
    std::string lit = next().text;
    if (is_punct("/")) {
      next();
      if (peek().kind != Token::Kind::number) fail("expected a denominator", peek());
      lit += "/" + next().text;
    }
    return parse_field_scalar(lit);
  }

  Scalar parse_field_scalar(const std::string& lit) {
    try {
      return field_->parse_scalar(lit);
    } catch (const Error& e) {
      fail(e.what(), peek());
    }
  }

  Path path(const Quiver& q) {
    std::vector<std::size_t> arrows;
    const Token& start = peek();
    while (true) {
      const Token& t = peek();
      if (t.kind != Token::Kind::ident) fail("expected an arrow name", t);
      auto a = q.find_arrow(t.text);
      if (!a) fail("unknown arrow '" + t.text + "'", t);
      arrows.push_back(*a);
      next();
      if (!is_punct("*")) break;
      next();
    }
    try {
      return Path::from_arrows(q, std::move(arrows));
    } catch (const ValidationError& e) {
      fail(std::string("non-composable path: ") + e.what(), start);
    }
  }

  void parse_relations(BoundQuiverPresentation& pres) {
    field_ = &pres.field;
    expect("{");
    while (!is_punct("}")) {
      const Token& start = peek();
      AlgebraElement rel(pres.field);
      std::optional<Path> first;
      bool leading_sign = true;
      while (!is_punct(";") && !is_punct("}")) {
        bool negative = false;
        if (is_punct("+") || is_punct("-")) {
          negative = next().text == "-";
        } else if (!leading_sign) {
          fail("expected '+' or '-'", peek());
        }
        leading_sign = false;
        Scalar c = pres.field.one();
        if (peek().kind == Token::Kind::number) {
          c = coefficient();
          expect("*");
        }
        if (negative) c = -c;
        Path p = path(pres.quiver);
        if (!first) first = p;
        rel.add_term(p, c);
      }
      if (leading_sign) fail("empty relation", start);
      if (is_punct(";")) next();
      if (rel.is_zero()) {
        pres.warnings.push_back("line " + std::to_string(start.line) +
                                ": relation cancels to zero and was dropped");
        continue;
      }
      if (pres.order.kind == OrderPolicy::Kind::explicit_leading) pres.leading.push_back(*first);
      try {
        BoundQuiverPresentation probe;
        probe.quiver = pres.quiver;
        probe.field = pres.field;
        probe.relations = {rel};
        validate(probe);
      } catch (const ValidationError& e) {
        fail(e.what(), start);
      }
      pres.relations.push_back(std::move(rel));
    }
    expect("}");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Field* field_ = nullptr;
};

std::string term_text(const Quiver& q, const Path& p, const Scalar& c, bool first) {
  std::string coeff = c.to_string();
  const bool negative = coeff.front() == '-';
  if (negative) coeff.erase(0, 1);
  std::string out;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (coeff != "1") out += coeff + "*";
  return out + p.to_string(q);
}

}  // namespace

BoundQuiverPresentation parse_presentation(std::string_view text) { return Parser(text).run(); }

std::string serialize_presentation(const BoundQuiverPresentation& pres) {
  const Quiver& q = pres.quiver;
  std::string out = "field " + pres.field.to_string() + "\n";
  out += "quiver {\n  vertices:";
  for (const auto& v : q.vertices()) out += " " + v;
  out += " ;\n  arrows:";
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrow(a);
    out += (a == 0 ? " " : " ;\n    ") + arr.name + ": " + q.vertex(arr.source) + " -> " +
           q.vertex(arr.target);
  }
  out += "\n}\n";
  if (pres.order.kind == OrderPolicy::Kind::explicit_leading) {
    out += "order explicit\n";
  } else {
    out += "order deglex";
    if (!pres.order.precedence.empty()) {
      out += ":";
      for (std::size_t a : pres.order.precedence) out += " " + q.arrow(a).name;
    }
    out += "\n";
  }
  out += "relations {\n";
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    const AlgebraElement& rel = pres.relations[i];
    std::string line;
    bool first = true;
    if (pres.order.kind == OrderPolicy::Kind::explicit_leading) {
      line += term_text(q, pres.leading[i], rel.coefficient(pres.leading[i]), true);
      first = false;
    }
    for (auto it = rel.terms().rbegin(); it != rel.terms().rend(); ++it) {
      if (!first && pres.order.kind == OrderPolicy::Kind::explicit_leading &&
          it->first == pres.leading[i]) {
        continue;
      }
      line += term_text(q, it->first, it->second, first);
      first = false;
    }
    out += "  " + line + " ;\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hhcalc
