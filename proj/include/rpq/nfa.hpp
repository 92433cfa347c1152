#pragma once

// Epsilon-free NFAs compiled from RPQ expressions by the position-automaton
// construction, plus the language predicates the enumeration routing needs:
// emptiness, finiteness, left derivatives, and downward closure.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpq/ast.hpp"

namespace rpq {

struct NfaTransition {
  uint32_t from;
  uint32_t sym;  // index into Nfa::alphabet
  uint32_t to;
  friend auto operator<=>(const NfaTransition&, const NfaTransition&) = default;
};

struct Nfa {
  std::vector<std::string> alphabet;  // sorted, unique
  uint32_t num_states = 0;
  std::vector<NfaTransition> transitions;  // sorted
  std::vector<uint32_t> initial;           // sorted
  std::vector<uint32_t> final_states;      // sorted

  std::optional<uint32_t> sym_of(const std::string& name) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end() || *it != name) return std::nullopt;
    return static_cast<uint32_t>(it - alphabet.begin());
  }

  std::vector<std::vector<NfaTransition>> by_state() const {
    std::vector<std::vector<NfaTransition>> out(num_states);
    for (const auto& t : transitions) out[t.from].push_back(t);
    return out;
  }

  bool is_final(uint32_t q) const {
    return std::binary_search(final_states.begin(), final_states.end(), q);
  }
};

namespace detail {

// Glushkov bookkeeping over atom positions. Position 0 is the fresh initial
// state; atoms are positions 1..m, each accepting any symbol of its set.
struct PositionInfo {
  bool nullable;
  std::vector<uint32_t> first, last;
};

struct GlushkovBuilder {
  std::vector<const Ast*> atoms;                  // position p-1 -> atom
  std::vector<std::set<uint32_t>> follow;         // by position

  PositionInfo build(const AstPtr& r) {
    if (!r) return {true, {}, {}};
    switch (r->kind) {
      case AstKind::Empty:
        return {false, {}, {}};
      case AstKind::Epsilon:
        return {true, {}, {}};
      case AstKind::Atom: {
        atoms.push_back(r.get());
        follow.emplace_back();
        uint32_t p = static_cast<uint32_t>(atoms.size());
        return {false, {p}, {p}};
      }
      case AstKind::Concat: {
        PositionInfo a = build(r->left);
        PositionInfo b = build(r->right);
        for (uint32_t p : a.last)
          for (uint32_t q : b.first) follow[p - 1].insert(q);
        PositionInfo out;
        out.nullable = a.nullable && b.nullable;
        out.first = a.first;
        if (a.nullable) out.first.insert(out.first.end(), b.first.begin(), b.first.end());
        out.last = b.last;
        if (b.nullable) out.last.insert(out.last.end(), a.last.begin(), a.last.end());
        return out;
      }
      case AstKind::Union: {
        PositionInfo a = build(r->left);
        PositionInfo b = build(r->right);
        PositionInfo out;
        out.nullable = a.nullable || b.nullable;
        out.first = a.first;
        out.first.insert(out.first.end(), b.first.begin(), b.first.end());
        out.last = a.last;
        out.last.insert(out.last.end(), b.last.begin(), b.last.end());
        return out;
      }
      case AstKind::Opt: {
        PositionInfo a = build(r->left);
        a.nullable = true;
        return a;
      }
      case AstKind::Star:
      case AstKind::Plus: {
        PositionInfo a = build(r->left);
        for (uint32_t p : a.last)
          for (uint32_t q : a.first) follow[p - 1].insert(q);
        if (r->kind == AstKind::Star) a.nullable = true;
        return a;
      }
    }
    return {false, {}, {}};
  }
};

}  // namespace detail

// L(result) = L(r); epsilon-free; at most expr_size(r)+1 states. The initial
// state has no incoming transitions and is final iff epsilon is in L(r).
inline Nfa to_nfa(const AstPtr& r) {
  detail::GlushkovBuilder b;
  detail::PositionInfo info = b.build(r);
  Nfa n;
  n.alphabet = expr_alphabet(r);
  n.num_states = static_cast<uint32_t>(b.atoms.size()) + 1;
  n.initial = {0};
  std::set<uint32_t> finals(info.last.begin(), info.last.end());
  if (info.nullable) finals.insert(0);
  n.final_states.assign(finals.begin(), finals.end());
  std::set<NfaTransition> ts;
  auto add_into = [&](uint32_t from, uint32_t pos) {
    for (const std::string& s : b.atoms[pos - 1]->symbols)
      ts.insert({from, *n.sym_of(s), pos});
  };
  for (uint32_t p : info.first) add_into(0, p);
  for (uint32_t p = 1; p <= b.atoms.size(); ++p)
    for (uint32_t q : b.follow[p - 1]) add_into(p, q);
  n.transitions.assign(ts.begin(), ts.end());
  return n;
}

// delta*(w) starting from the given state set (defaults to Q_I).
inline std::vector<uint32_t> states_after(const Nfa& n, const std::vector<uint32_t>& word_syms,
                                          const std::vector<uint32_t>* from = nullptr) {
  std::set<uint32_t> cur(from ? from->begin() : n.initial.begin(),
                         from ? from->end() : n.initial.end());
  auto table = n.by_state();
  for (uint32_t sym : word_syms) {
    std::set<uint32_t> next;
    for (uint32_t q : cur)
      for (const auto& t : table[q])
        if (t.sym == sym) next.insert(t.to);
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return {cur.begin(), cur.end()};
}

inline std::vector<uint32_t> states_after_names(const Nfa& n,
                                                const std::vector<std::string>& word) {
  std::vector<uint32_t> syms;
  for (const auto& name : word) {
    auto s = n.sym_of(name);
    if (!s) return {};  // a symbol outside the alphabet kills every run
    syms.push_back(*s);
  }
  return states_after(n, syms);
}

// Same automaton with initial set J = delta*(w); accepts the left derivative.
inline Nfa derivative_nfa(const Nfa& n, const std::vector<std::string>& word) {
  Nfa d = n;
  d.initial = states_after_names(n, word);
  return d;
}

inline bool nfa_accepts(const Nfa& n, const std::vector<std::string>& word) {
  for (uint32_t q : states_after_names(n, word))
    if (n.is_final(q)) return true;
  return false;
}

namespace detail {

inline std::vector<char> forward_reach(const Nfa& n) {
  std::vector<char> seen(n.num_states, 0);
  std::deque<uint32_t> q;
  for (uint32_t s : n.initial) {
    seen[s] = 1;
    q.push_back(s);
  }
  auto table = n.by_state();
  while (!q.empty()) {
    uint32_t v = q.front();
    q.pop_front();
    for (const auto& t : table[v])
      if (!seen[t.to]) {
        seen[t.to] = 1;
        q.push_back(t.to);
      }
  }
  return seen;
}

inline std::vector<char> backward_reach(const Nfa& n) {
  std::vector<char> seen(n.num_states, 0);
  std::vector<std::vector<uint32_t>> preds(n.num_states);
  for (const auto& t : n.transitions) preds[t.to].push_back(t.from);
  std::deque<uint32_t> q;
  for (uint32_t s : n.final_states) {
    seen[s] = 1;
    q.push_back(s);
  }
  while (!q.empty()) {
    uint32_t v = q.front();
    q.pop_front();
    for (uint32_t p : preds[v])
      if (!seen[p]) {
        seen[p] = 1;
        q.push_back(p);
      }
  }
  return seen;
}

}  // namespace detail

inline bool is_empty_language(const Nfa& n) {
  auto fwd = detail::forward_reach(n);
  for (uint32_t f : n.final_states)
    if (fwd[f]) return false;
  return true;
}
inline bool is_empty_language(const AstPtr& r) { return is_empty_language(to_nfa(r)); }

// Finite iff the trimmed automaton has no cycle through a productive state.
inline bool is_finite_language(const Nfa& n) {
  auto fwd = detail::forward_reach(n);
  auto bwd = detail::backward_reach(n);
  std::vector<char> live(n.num_states, 0);
  for (uint32_t q = 0; q < n.num_states; ++q) live[q] = fwd[q] && bwd[q];
  auto table = n.by_state();
  std::vector<int> color(n.num_states, 0);  // 0 white, 1 gray, 2 black
  bool cyc = false;
  auto dfs = [&](auto&& self, uint32_t v) -> void {
    color[v] = 1;
    for (const auto& t : table[v]) {
      if (!live[t.to]) continue;
      if (color[t.to] == 1) {
        cyc = true;
        return;
      }
      if (color[t.to] == 0) self(self, t.to);
      if (cyc) return;
    }
    color[v] = 2;
  };
  for (uint32_t q = 0; q < n.num_states && !cyc; ++q)
    if (live[q] && color[q] == 0) dfs(dfs, q);
  return !cyc;
}
inline bool is_finite_language(const AstPtr& r) { return is_finite_language(to_nfa(r)); }

// Longest word length of a finite language (for bounded-match callers).
// Restricted to productive states the automaton is a DAG and every state
// reaches a final one, so plain memoized longest-path works.
inline uint32_t max_word_length(const Nfa& n) {
  if (!is_finite_language(n)) throw std::invalid_argument("language is infinite");
  auto fwd = detail::forward_reach(n);
  auto bwd = detail::backward_reach(n);
  std::vector<int64_t> best(n.num_states, -1);  // -1 = unvisited
  auto table = n.by_state();
  auto dfs = [&](auto&& self, uint32_t v) -> int64_t {
    if (best[v] >= 0) return best[v];
    int64_t b = 0;
    for (const auto& t : table[v]) {
      if (!(fwd[t.to] && bwd[t.to])) continue;
      b = std::max(b, self(self, t.to) + 1);
    }
    return best[v] = b;
  };
  int64_t out = 0;
  for (uint32_t s : n.initial)
    if (fwd[s] && bwd[s]) out = std::max(out, dfs(dfs, s));
  return static_cast<uint32_t>(out);
}

class StateCapExceeded : public std::runtime_error {
 public:
  explicit StateCapExceeded(size_t cap)
      : std::runtime_error("determinized state cap exceeded (" + std::to_string(cap) + ")") {}
};

namespace detail {

struct Dfa {
  uint32_t num_states = 0;
  uint32_t start = 0;
  std::vector<std::vector<uint32_t>> next;  // [state][sym], kNoDfa = dead
  std::vector<char> accepting;
  static constexpr uint32_t kDead = 0xffffffffu;
};

inline Dfa determinize(const Nfa& n, size_t cap) {
  Dfa d;
  size_t nsym = n.alphabet.size();
  std::map<std::vector<uint32_t>, uint32_t> index;
  std::vector<std::vector<uint32_t>> sets;
  auto intern = [&](std::vector<uint32_t> s) {
    auto [it, fresh] = index.try_emplace(s, static_cast<uint32_t>(sets.size()));
    if (fresh) {
      sets.push_back(std::move(s));
      if (sets.size() > cap) throw StateCapExceeded(cap);
    }
    return it->second;
  };
  auto table = n.by_state();
  d.start = intern(n.initial);
  for (uint32_t i = 0; i < sets.size(); ++i) {
    d.next.emplace_back(nsym, Dfa::kDead);
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      std::set<uint32_t> nxt;
      for (uint32_t q : sets[i])
        for (const auto& t : table[q])
          if (t.sym == sym) nxt.insert(t.to);
      if (!nxt.empty())
        d.next[i][sym] = intern(std::vector<uint32_t>(nxt.begin(), nxt.end()));
    }
  }
  d.num_states = static_cast<uint32_t>(sets.size());
  d.accepting.assign(d.num_states, 0);
  for (uint32_t i = 0; i < d.num_states; ++i)
    for (uint32_t q : sets[i])
      if (n.is_final(q)) d.accepting[i] = 1;
  return d;
}

// Is L(a) a subset of L(b)? Both DFAs must share an alphabet indexing.
inline bool dfa_subset(const Dfa& a, const Dfa& b, size_t nsym, size_t cap) {
  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::deque<std::pair<uint32_t, uint32_t>> q;
  q.emplace_back(a.start, b.start);
  seen.insert({a.start, b.start});
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    if (x != Dfa::kDead && a.accepting[x] && (y == Dfa::kDead || !b.accepting[y]))
      return false;
    if (x == Dfa::kDead) continue;  // nothing more of L(a) down this branch
    for (uint32_t sym = 0; sym < nsym; ++sym) {
      uint32_t nx = a.next[x][sym];
      if (nx == Dfa::kDead) continue;
      uint32_t ny = y == Dfa::kDead ? Dfa::kDead : b.next[y][sym];
      if (seen.insert({nx, ny}).second) {
        if (seen.size() > cap) throw StateCapExceeded(cap);
        q.emplace_back(nx, ny);
      }
    }
  }
  return true;
}

}  // namespace detail

// NFA for the downward closure (all subsequences): every transition also
// becomes a silent skip, realized by closing transition sources over
// label-oblivious reachability.
inline Nfa downward_closure_nfa(const Nfa& n) {
  // reach[q] = states reachable from q via >= 0 transitions of any label
  std::vector<std::set<uint32_t>> reach(n.num_states);
  auto table = n.by_state();
  for (uint32_t q = 0; q < n.num_states; ++q) {
    std::deque<uint32_t> bfs{q};
    reach[q].insert(q);
    while (!bfs.empty()) {
      uint32_t v = bfs.front();
      bfs.pop_front();
      for (const auto& t : table[v])
        if (reach[q].insert(t.to).second) bfs.push_back(t.to);
    }
  }
  Nfa d;
  d.alphabet = n.alphabet;
  d.num_states = n.num_states;
  d.initial = n.initial;
  std::set<uint32_t> finals;
  for (uint32_t q = 0; q < n.num_states; ++q)
    for (uint32_t r : reach[q])
      if (n.is_final(r)) finals.insert(q);
  d.final_states.assign(finals.begin(), finals.end());
  std::set<NfaTransition> ts;
  for (uint32_t q = 0; q < n.num_states; ++q)
    for (uint32_t mid : reach[q])
      for (const auto& t : table[mid]) ts.insert({q, t.sym, t.to});
  d.transitions.assign(ts.begin(), ts.end());
  return d;
}

// Exact check (throws StateCapExceeded on blowup): L equals its closure
// under taking subsequences. Only closure(L) subset-of L needs testing.
inline bool is_downward_closed(const Nfa& n, size_t state_cap = 1u << 16) {
  Nfa closed = downward_closure_nfa(n);
  detail::Dfa a = detail::determinize(closed, state_cap);
  detail::Dfa b = detail::determinize(n, state_cap);
  return detail::dfa_subset(a, b, n.alphabet.size(), state_cap * 4);
}
inline bool is_downward_closed(const AstPtr& r, size_t state_cap = 1u << 16) {
  return is_downward_closed(to_nfa(r), state_cap);
}

// Sufficient structural condition (sound, not complete): a nonempty
// downward-closed language must contain epsilon, which shapes the rules.
inline bool is_downward_closed_structural(const AstPtr& r) {
  if (!r) return true;
  switch (r->kind) {
    case AstKind::Empty:
    case AstKind::Epsilon:
      return true;
    case AstKind::Atom:
      return false;
    case AstKind::Concat:
    case AstKind::Union:
      return is_downward_closed_structural(r->left) && is_downward_closed_structural(r->right);
    case AstKind::Opt:
    case AstKind::Star:
      return atom_set(r->left).has_value() || is_downward_closed_structural(r->left);
    case AstKind::Plus:
      return is_downward_closed_structural(r->left);
  }
  return false;
}

}  // namespace rpq
