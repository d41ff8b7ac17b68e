#pragma once

// Graph expressions:
//   expr := term { "+" term }
//   term := [ INT "*" ] atom
//   atom := NAME [ "(" INT { "," INT } ")" ] | "cone" "(" expr ")" | "(" expr ")"
// A '+' written directly after At, Dt or Et belongs to the name (At+, Dt+, Et+).

#include <cctype>
#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace seidelcert {

struct GraphExpr;

struct ConeAtom {
  std::shared_ptr<const GraphExpr> inner;
};

struct GroupAtom {
  std::shared_ptr<const GraphExpr> inner;
};

using Atom = std::variant<FamilySpec, ConeAtom, GroupAtom>;

struct Term {
  std::optional<long> count;
  Atom atom;
};

struct GraphExpr {
  std::vector<Term> terms;
};

namespace detail {

inline const std::pair<std::string_view, Family> kFamilyNames[] = {
    {"K", Family::CompleteMultipartite}, {"P", Family::Path},    {"C", Family::Cycle},
    {"At", Family::ATilde},              {"Dt", Family::DTilde}, {"Et", Family::ETilde},
    {"At+", Family::ATildePlus},         {"Dt+", Family::DTildePlus},
    {"Et+", Family::ETildePlus},         {"B1", Family::B1},     {"B2", Family::B2},
    {"B3", Family::B3},                  {"M", Family::M},       {"iso", Family::Isolated},
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  GraphExpr parse() {
    GraphExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  long integer() {
    if (!at_digit()) fail("expected integer");
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int d = s_[pos_] - '0';
      if (v > (LONG_MAX - d) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  GraphExpr expr() {
    GraphExpr e;
    e.terms.push_back(term());
    while (accept('+')) e.terms.push_back(term());
    return e;
  }

  Term term() {
    Term t;
    if (at_digit()) {
      t.count = integer();
      expect('*');
    }
    t.atom = atom();
    return t;
  }

  Atom atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      auto inner = std::make_shared<const GraphExpr>(expr());
      expect(')');
      return GroupAtom{inner};
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name.empty()) fail("expected graph name");
    if ((name == "At" || name == "Dt" || name == "Et") && pos_ < s_.size() && s_[pos_] == '+') {
      name += '+';
      ++pos_;
    }
    if (name == "cone") {
      expect('(');
      auto inner = std::make_shared<const GraphExpr>(expr());
      expect(')');
      return ConeAtom{inner};
    }
    std::optional<Family> fam;
    for (const auto& [token, f] : kFamilyNames)
      if (token == name) fam = f;
    if (!fam) {
      pos_ = start;
      fail("unknown graph name '" + name + "'");
    }
    FamilySpec spec{*fam, {}};
    if (accept('(')) {
      spec.params.push_back(integer());
      while (accept(',')) spec.params.push_back(integer());
      expect(')');
    }
    return spec;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GraphExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

std::string to_string(const GraphExpr& e);

namespace detail {

inline std::string atom_string(const Atom& a) {
  if (const auto* f = std::get_if<FamilySpec>(&a)) {
    std::string out(family_token(f->family));
    if (!f->params.empty()) {
      out += '(';
      for (std::size_t i = 0; i < f->params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f->params[i]);
      }
      out += ')';
    }
    return out;
  }
  if (const auto* c = std::get_if<ConeAtom>(&a)) return "cone(" + to_string(*c->inner) + ")";
  return "(" + to_string(*std::get<GroupAtom>(a).inner) + ")";
}

}  // namespace detail

/// Canonical form: terms joined by " + ", no other whitespace.
inline std::string to_string(const GraphExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    if (i) out += " + ";
    const Term& t = e.terms[i];
    if (t.count) out += std::to_string(*t.count) + "*";
    out += detail::atom_string(t.atom);
  }
  return out;
}

inline Graph evaluate(const GraphExpr& e) {
  Graph g;
  for (const Term& t : e.terms) {
    Graph a;
    if (const auto* f = std::get_if<FamilySpec>(&t.atom))
      a = build_family(*f);
    else if (const auto* c = std::get_if<ConeAtom>(&t.atom))
      a = cone(evaluate(*c->inner));
    else
      a = evaluate(*std::get<GroupAtom>(t.atom).inner);
    g = disjoint_union(g, t.count ? repeat(a, static_cast<std::size_t>(*t.count)) : a);
  }
  return g;
}

inline Graph parse_graph_expr(std::string_view text) { return evaluate(parse_expr(text)); }

}  // namespace seidelcert
