#pragma once

// Simple transitive expressions: recognition/normalization into the
// B_pre A* B_suff shape, cut borders, conflict positions, and the block
// derivatives that the FPT enumeration wrappers consume.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rpq/ast.hpp"
#include "rpq/nfa.hpp"

namespace rpq {

using LabelSet = std::vector<std::string>;  // sorted, unique

inline bool set_contains(const LabelSet& s, const std::string& x) {
  return std::binary_search(s.begin(), s.end(), x);
}
inline bool set_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline bool set_intersects(const LabelSet& a, const LabelSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    (*i < *j) ? ++i : ++j;
  }
  return false;
}

struct SteProfile {
  std::vector<LabelSet> prefix_atoms;  // A_1 .. A_k1, expression order
  bool prefix_optional = false;        // whole prefix is A_1? .. A_k1?
  LabelSet star_atom;                  // empty set = no star part
  std::vector<LabelSet> suffix_atoms;  // A'_k2 .. A'_1, expression order
  bool suffix_optional = false;

  uint32_t k1() const { return static_cast<uint32_t>(prefix_atoms.size()); }
  uint32_t k2() const { return static_cast<uint32_t>(suffix_atoms.size()); }
  uint32_t k_r() const { return k1() + k2(); }
  bool has_star() const { return !star_atom.empty(); }

  // A'_j, right-indexed: j = 1 is the last atom of the expression.
  const LabelSet& suffix_atom(uint32_t j) const { return suffix_atoms[k2() - j]; }
  const LabelSet& prefix_atom(uint32_t i) const { return prefix_atoms[i - 1]; }

  AstPtr to_ast() const {
    AstPtr out;
    auto app = [&](AstPtr e) { out = out ? ast::concat(std::move(out), std::move(e)) : e; };
    for (const auto& A : prefix_atoms)
      app(prefix_optional ? ast::opt(ast::atom(A)) : ast::atom(A));
    if (has_star()) app(ast::star(ast::atom(star_atom)));
    for (const auto& A : suffix_atoms)
      app(suffix_optional ? ast::opt(ast::atom(A)) : ast::atom(A));
    return out ? out : ast::epsilon();
  }
  Nfa to_nfa() const { return rpq::to_nfa(to_ast()); }

  bool accepts_epsilon() const {
    return (prefix_atoms.empty() || prefix_optional) &&
           (suffix_atoms.empty() || suffix_optional);
  }

  // The expression as a block sequence (for derivatives).
  enum class BlockKind { Mand, Opt, Star };
  struct Block {
    BlockKind kind;
    LabelSet atom;
  };
  std::vector<Block> blocks() const {
    std::vector<Block> out;
    for (const auto& A : prefix_atoms)
      out.push_back({prefix_optional ? BlockKind::Opt : BlockKind::Mand, A});
    if (has_star()) out.push_back({BlockKind::Star, star_atom});
    for (const auto& A : suffix_atoms)
      out.push_back({suffix_optional ? BlockKind::Opt : BlockKind::Mand, A});
    return out;
  }
};

struct NotSte {
  std::string reason;
};
using SteResult = std::variant<SteProfile, NotSte>;

namespace detail {

enum class UnitKind { Mand, Opt, Star, Plus };
struct Unit {
  UnitKind kind;
  LabelSet atom;
};

// Classify an expression as a (possibly wrapped) atomic unit.
inline std::optional<Unit> classify_unit(const AstPtr& e) {
  if (auto a = atom_set(e)) return Unit{UnitKind::Mand, *a};
  if (!e) return std::nullopt;
  if (e->kind == AstKind::Opt || e->kind == AstKind::Star || e->kind == AstKind::Plus) {
    auto inner = classify_unit(e->left);
    if (!inner) return std::nullopt;
    switch (e->kind) {
      case AstKind::Opt:
        if (inner->kind == UnitKind::Mand) return Unit{UnitKind::Opt, inner->atom};
        if (inner->kind == UnitKind::Opt) return Unit{UnitKind::Opt, inner->atom};
        return Unit{UnitKind::Star, inner->atom};  // (A*)?, (A+)?
      case AstKind::Star:
        return Unit{UnitKind::Star, inner->atom};
      case AstKind::Plus:
        if (inner->kind == UnitKind::Mand) return Unit{UnitKind::Plus, inner->atom};
        if (inner->kind == UnitKind::Plus) return Unit{UnitKind::Plus, inner->atom};
        return Unit{UnitKind::Star, inner->atom};  // (A?)+, (A*)+
      default:
        break;
    }
  }
  return std::nullopt;
}

inline void flatten_concat(const AstPtr& e, std::vector<AstPtr>& out) {
  if (!e) return;
  if (e->kind == AstKind::Concat) {
    flatten_concat(e->left, out);
    flatten_concat(e->right, out);
  } else {
    out.push_back(e);
  }
}

}  // namespace detail

// Normalize and match r against the B_pre A* B_suff shape. A+ rewrites to
// A A*; a lone bounded expression becomes an STE with no star part.
// Precondition: L(r) is nonempty (checked).
inline SteResult recognize_ste(const AstPtr& r) {
  if (is_empty_language(r)) throw std::invalid_argument("recognize_ste: empty language");

  std::vector<AstPtr> parts;
  detail::flatten_concat(r, parts);
  std::vector<detail::Unit> units;
  for (const AstPtr& p : parts) {
    if (p->kind == AstKind::Epsilon) continue;
    auto u = detail::classify_unit(p);
    if (!u) return NotSte{"factor is not an atomic unit: " + rpq::to_string(p)};
    if (u->kind == detail::UnitKind::Plus) {  // A+ = A A*
      units.push_back({detail::UnitKind::Mand, u->atom});
      units.push_back({detail::UnitKind::Star, u->atom});
    } else {
      units.push_back(*u);
    }
  }

  size_t star_at = units.size();
  for (size_t i = 0; i < units.size(); ++i) {
    if (units[i].kind == detail::UnitKind::Star) {
      if (star_at != units.size()) return NotSte{"more than one star block"};
      star_at = i;
    }
  }

  auto homogeneous = [](auto first, auto last,
                        bool& optional) -> bool {  // all Mand or all Opt
    bool any_opt = false, any_mand = false;
    for (auto it = first; it != last; ++it) {
      (it->kind == detail::UnitKind::Opt ? any_opt : any_mand) = true;
    }
    optional = any_opt;
    return !(any_opt && any_mand);
  };

  SteProfile p;
  if (star_at != units.size()) {
    p.star_atom = units[star_at].atom;
    for (size_t i = 0; i < star_at; ++i) p.prefix_atoms.push_back(units[i].atom);
    for (size_t i = star_at + 1; i < units.size(); ++i)
      p.suffix_atoms.push_back(units[i].atom);
    bool pre_opt = false, suf_opt = false;
    if (!homogeneous(units.begin(), units.begin() + star_at, pre_opt))
      return NotSte{"prefix mixes mandatory and optional atoms"};
    if (!homogeneous(units.begin() + star_at + 1, units.end(), suf_opt))
      return NotSte{"suffix mixes mandatory and optional atoms"};
    p.prefix_optional = pre_opt;
    p.suffix_optional = suf_opt;
    return p;
  }

  // No star: the bounded sequence must split into a homogeneous prefix and a
  // homogeneous suffix (either may be empty).
  size_t n = units.size();
  size_t flip = 0;
  while (flip < n && units[flip].kind == units[0].kind) ++flip;
  bool rest_ok = true;
  bool rest_opt = false;
  for (size_t i = flip; i < n; ++i)
    if (units[i].kind != units[flip].kind) rest_ok = false;
  if (!rest_ok) return NotSte{"bounded expression is not a two-run split"};
  bool first_opt = n > 0 && units[0].kind == detail::UnitKind::Opt;
  if (flip < n) rest_opt = units[flip].kind == detail::UnitKind::Opt;

  for (size_t i = 0; i < flip; ++i) p.prefix_atoms.push_back(units[i].atom);
  for (size_t i = flip; i < n; ++i) p.suffix_atoms.push_back(units[i].atom);
  p.prefix_optional = first_opt;
  p.suffix_optional = rest_opt;
  return p;
}

enum class Side { Left, Right };

struct BorderReport {
  uint32_t left_cut_border = 0;   // c1
  uint32_t right_cut_border = 0;  // c2
  uint32_t bordered_value = 0;    // max(c1, c2)
  std::vector<std::pair<Side, uint32_t>> conflict_positions;
};

// Largest position whose atom does not contain the star atom; zero for the
// optional form. An absent star (empty set) is contained in every atom.
inline BorderReport cut_borders(const SteProfile& p) {
  BorderReport out;
  if (!p.prefix_optional) {
    for (uint32_t i = 1; i <= p.k1(); ++i)
      if (!set_subset(p.star_atom, p.prefix_atom(i))) out.left_cut_border = i;
  }
  if (!p.suffix_optional) {
    for (uint32_t j = 1; j <= p.k2(); ++j)
      if (!set_subset(p.star_atom, p.suffix_atom(j))) out.right_cut_border = j;
  }
  out.bordered_value = std::max(out.left_cut_border, out.right_cut_border);
  for (uint32_t i = 1; i <= out.left_cut_border; ++i)
    if (set_intersects(p.prefix_atom(i), p.star_atom))
      out.conflict_positions.emplace_back(Side::Left, i);
  for (uint32_t j = 1; j <= out.right_cut_border; ++j)
    if (set_intersects(p.suffix_atom(j), p.star_atom))
      out.conflict_positions.emplace_back(Side::Right, j);
  return out;
}

inline std::vector<std::pair<Side, uint32_t>> conflict_positions(const SteProfile& p) {
  return cut_borders(p).conflict_positions;
}
inline uint32_t bordered_value(const SteProfile& p) { return cut_borders(p).bordered_value; }

// J = { j : w in L(B_1 .. B_j) } over the block sequence; the derivative
// language is the union of the suffix expressions starting at those j.
inline std::vector<uint32_t> block_boundaries_after(const SteProfile& p,
                                                    const std::vector<std::string>& w) {
  auto blocks = p.blocks();
  size_t n = blocks.size();
  std::vector<char> cur(n + 1, 0);
  auto closure = [&](std::vector<char>& st) {
    for (size_t j = 0; j < n; ++j)
      if (st[j] && blocks[j].kind != SteProfile::BlockKind::Mand) st[j + 1] |= 1;
  };
  cur[0] = 1;
  closure(cur);
  for (const auto& sym : w) {
    std::vector<char> nxt(n + 1, 0);
    for (size_t j = 0; j <= n; ++j) {
      if (!cur[j] || j == n) continue;
      const auto& b = blocks[j];
      if (b.kind == SteProfile::BlockKind::Star) {
        if (set_contains(b.atom, sym)) nxt[j] |= 1;  // absorb into the star
      } else if (set_contains(b.atom, sym)) {
        nxt[j + 1] |= 1;
      }
    }
    closure(nxt);
    cur = std::move(nxt);
  }
  std::vector<uint32_t> out;
  for (uint32_t j = 0; j <= n; ++j)
    if (cur[j]) out.push_back(j);
  return out;
}

// Suffix profile from block j onward. Every derivative of an STE is a union
// of at most k1+k2+1 of these, each bordered no worse than the original.
inline SteProfile suffix_profile(const SteProfile& p, uint32_t from_block) {
  auto blocks = p.blocks();
  SteProfile out;
  bool seen_star = false;
  for (uint32_t j = from_block; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    switch (b.kind) {
      case SteProfile::BlockKind::Star:
        out.star_atom = b.atom;
        seen_star = true;
        break;
      case SteProfile::BlockKind::Mand:
      case SteProfile::BlockKind::Opt: {
        bool optional = b.kind == SteProfile::BlockKind::Opt;
        if (!seen_star && !p.has_star()) {
          // Bounded original: keep the original prefix/suffix assignment.
          if (j < p.k1()) {
            out.prefix_atoms.push_back(b.atom);
            out.prefix_optional = optional;
          } else {
            out.suffix_atoms.push_back(b.atom);
            out.suffix_optional = optional;
          }
        } else if (!seen_star) {
          out.prefix_atoms.push_back(b.atom);
          out.prefix_optional = optional;
        } else {
          out.suffix_atoms.push_back(b.atom);
          out.suffix_optional = optional;
        }
        break;
      }
    }
  }
  return out;
}

inline std::vector<SteProfile> ste_derivative(const SteProfile& p,
                                              const std::vector<std::string>& w) {
  std::vector<SteProfile> out;
  for (uint32_t j : block_boundaries_after(p, w)) out.push_back(suffix_profile(p, j));
  return out;
}

// a^k w? a* detection (not an STE once |w| >= 2). The trailing star fixes a;
// the optional word sits immediately before it.
struct AkwaSpec {
  std::string a;
  uint32_t k = 0;
  std::vector<std::string> w;
};

inline std::optional<AkwaSpec> detect_akwa(const AstPtr& r) {
  std::vector<AstPtr> parts;
  detail::flatten_concat(r, parts);
  if (parts.empty()) return std::nullopt;
  auto star_set = [&](const AstPtr& e) -> std::optional<std::string> {
    if (e->kind != AstKind::Star) return std::nullopt;
    auto a = atom_set(e->left);
    if (!a || a->size() != 1) return std::nullopt;
    return a->front();
  };
  auto a = star_set(parts.back());
  if (!a) return std::nullopt;
  AkwaSpec spec;
  spec.a = *a;
  size_t end = parts.size() - 1;
  if (end > 0 && parts[end - 1]->kind == AstKind::Opt) {
    std::vector<AstPtr> wparts;
    detail::flatten_concat(parts[end - 1]->left, wparts);
    for (const AstPtr& wp : wparts) {
      auto s = atom_set(wp);
      if (!s || s->size() != 1) return std::nullopt;
      spec.w.push_back(s->front());
    }
    if (spec.w.empty()) return std::nullopt;
    --end;
  }
  for (size_t i = 0; i < end; ++i) {
    auto s = atom_set(parts[i]);
    if (!s || s->size() != 1 || s->front() != spec.a) return std::nullopt;
    ++spec.k;
  }
  return spec;
}

}  // namespace rpq
