#pragma once

// Shared test utilities: a brute-force AST word matcher (the language
// oracle, independent of the NFA pipeline), random instance generators,
// and small word enumeration.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rpq/ast.hpp"
#include "rpq/graph.hpp"

namespace rpqtest {

using rpq::Ast;
using rpq::AstKind;
using rpq::AstPtr;

// Does word[i..j) belong to L(r)? Plain recursion over the tree; fine for
// the short words the tests use.
inline bool match_range(const AstPtr& r, const std::vector<std::string>& w, size_t i, size_t j) {
  switch (r->kind) {
    case AstKind::Empty:
      return false;
    case AstKind::Epsilon:
      return i == j;
    case AstKind::Atom:
      if (j != i + 1) return false;
      for (const auto& s : r->symbols)
        if (s == w[i]) return true;
      return false;
    case AstKind::Concat:
      for (size_t m = i; m <= j; ++m)
        if (match_range(r->left, w, i, m) && match_range(r->right, w, m, j)) return true;
      return false;
    case AstKind::Union:
      return match_range(r->left, w, i, j) || match_range(r->right, w, i, j);
    case AstKind::Opt:
      return i == j || match_range(r->left, w, i, j);
    case AstKind::Star: {
      if (i == j) return true;
      // Try a nonempty first chunk to keep the recursion well-founded.
      for (size_t m = i + 1; m <= j; ++m)
        if (match_range(r->left, w, i, m) && match_range(r, w, m, j)) return true;
      return false;
    }
    case AstKind::Plus:
      for (size_t m = i + 1; m <= j; ++m)
        if (match_range(r->left, w, i, m) &&
            (m == j || match_range(rpq::ast::star(r->left), w, m, j)))
          return true;
      return false;
  }
  return false;
}

inline bool brute_match(const AstPtr& r, const std::vector<std::string>& word) {
  return match_range(r, word, 0, word.size());
}

// All words over `alphabet` of length up to max_len, shortest first.
inline std::vector<std::vector<std::string>> all_words(const std::vector<std::string>& alphabet,
                                                       size_t max_len) {
  std::vector<std::vector<std::string>> out{{}};
  size_t begin = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = begin; i < end; ++i)
      for (const auto& a : alphabet) {
        auto w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

inline std::string node_tag(int i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "n%02d", i);
  return buf;
}

// Random edge-labeled digraph: each ordered pair gets an edge with the given
// probability (uniform random label); self-loops at a tenth of that rate.
inline rpq::Graph random_graph(std::mt19937_64& rng, int n, double density,
                               const std::vector<std::string>& sigma) {
  std::vector<std::array<std::string, 3>> triples;
  std::vector<std::string> nodes;
  for (int i = 0; i < n; ++i) nodes.push_back(node_tag(i));
  auto chance = [&](double p) { return (rng() % 1000000) < p * 1000000; };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      double p = (u == v) ? density / 10 : density;
      if (chance(p)) triples.push_back({nodes[u], sigma[rng() % sigma.size()], nodes[v]});
    }
  return rpq::Graph::from_edges(triples, nodes);
}

}  // namespace rpqtest
