#pragma once

// RPQ expression trees. Atoms carry nonempty sets of symbol names; an atom
// over the empty set is represented as Empty. Counted repetition is parsed
// away into concatenation chains, so it never appears here.

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpq {

enum class AstKind { Empty, Epsilon, Atom, Concat, Union, Opt, Star, Plus };

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  AstKind kind;
  std::vector<std::string> symbols;  // Atom only; sorted, unique, nonempty
  AstPtr left, right;                // children (unary ops use left)
};

namespace ast {

inline AstPtr empty() { return std::make_shared<Ast>(Ast{AstKind::Empty, {}, nullptr, nullptr}); }
inline AstPtr epsilon() { return std::make_shared<Ast>(Ast{AstKind::Epsilon, {}, nullptr, nullptr}); }

inline AstPtr atom(std::vector<std::string> symbols) {
  std::set<std::string> s(symbols.begin(), symbols.end());
  if (s.empty()) return empty();
  return std::make_shared<Ast>(
      Ast{AstKind::Atom, std::vector<std::string>(s.begin(), s.end()), nullptr, nullptr});
}
inline AstPtr atom(const std::string& symbol) { return atom(std::vector<std::string>{symbol}); }

inline AstPtr concat(AstPtr l, AstPtr r) {
  return std::make_shared<Ast>(Ast{AstKind::Concat, {}, std::move(l), std::move(r)});
}
inline AstPtr alt(AstPtr l, AstPtr r) {
  return std::make_shared<Ast>(Ast{AstKind::Union, {}, std::move(l), std::move(r)});
}
inline AstPtr opt(AstPtr e) {
  return std::make_shared<Ast>(Ast{AstKind::Opt, {}, std::move(e), nullptr});
}
inline AstPtr star(AstPtr e) {
  return std::make_shared<Ast>(Ast{AstKind::Star, {}, std::move(e), nullptr});
}
inline AstPtr plus(AstPtr e) {
  return std::make_shared<Ast>(Ast{AstKind::Plus, {}, std::move(e), nullptr});
}

// r^n as a concat chain; r^0 is epsilon.
inline AstPtr repeat(const AstPtr& e, uint32_t n) {
  if (n == 0) return epsilon();
  AstPtr out = e;
  for (uint32_t i = 1; i < n; ++i) out = concat(out, e);
  return out;
}
// (r?)^n
inline AstPtr up_to(const AstPtr& e, uint32_t n) { return repeat(opt(e), n); }

}  // namespace ast

// Number of symbol occurrences; an atom over A counts |A|.
inline size_t expr_size(const AstPtr& r) {
  if (!r) return 0;
  switch (r->kind) {
    case AstKind::Empty:
    case AstKind::Epsilon:
      return 0;
    case AstKind::Atom:
      return r->symbols.size();
    case AstKind::Concat:
    case AstKind::Union:
      return expr_size(r->left) + expr_size(r->right);
    case AstKind::Opt:
    case AstKind::Star:
    case AstKind::Plus:
      return expr_size(r->left);
  }
  return 0;
}

inline std::string to_string(const AstPtr& r) {
  if (!r) return "";
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (r->kind) {
    case AstKind::Empty:
      return "{}";
    case AstKind::Epsilon:
      return "()";
    case AstKind::Atom: {
      if (r->symbols.size() == 1) return r->symbols[0];
      std::string s = "(";
      for (size_t i = 0; i < r->symbols.size(); ++i)
        s += (i ? "+" : "") + r->symbols[i];
      return s + ")";
    }
    case AstKind::Concat:
      return to_string(r->left) + " " + to_string(r->right);
    case AstKind::Union:
      return paren(to_string(r->left) + "+" + to_string(r->right));
    case AstKind::Opt:
      return paren(to_string(r->left)) + "?";
    case AstKind::Star:
      return paren(to_string(r->left)) + "*";
    case AstKind::Plus:
      return paren(to_string(r->left)) + "+";
  }
  return "";
}

// The merged symbol set when r is an atom or a union tree of atoms.
inline std::optional<std::vector<std::string>> atom_set(const AstPtr& r) {
  if (!r) return std::nullopt;
  if (r->kind == AstKind::Atom) return r->symbols;
  if (r->kind == AstKind::Union) {
    auto l = atom_set(r->left), rr = atom_set(r->right);
    if (!l || !rr) return std::nullopt;
    std::set<std::string> s(l->begin(), l->end());
    s.insert(rr->begin(), rr->end());
    return std::vector<std::string>(s.begin(), s.end());
  }
  return std::nullopt;
}

// Alphabet of an expression: sorted union of its atom symbols.
inline std::vector<std::string> expr_alphabet(const AstPtr& r) {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const AstPtr& e) -> void {
    if (!e) return;
    if (e->kind == AstKind::Atom) out.insert(e->symbols.begin(), e->symbols.end());
    self(self, e->left);
    self(self, e->right);
  };
  walk(walk, r);
  return {out.begin(), out.end()};
}

}  // namespace rpq
