#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rpq/parser.hpp"
#include "rpq/ste.hpp"

using namespace rpq;
using rpqtest::all_words;

static SteProfile profile_of(const std::string& expr) {
  auto res = recognize_ste(parse(expr));
  REQUIRE(std::holds_alternative<SteProfile>(res));
  return std::get<SteProfile>(res);
}

static bool is_ste(const std::string& expr) {
  try {
    return std::holds_alternative<SteProfile>(recognize_ste(parse(expr)));
  } catch (const ParseError& e) {
    if (e.unsupported_construct) return false;  // outside our syntax
    throw;
  }
}

TEST_CASE("recognize a*b") {
  SteProfile p = profile_of("a*b");
  REQUIRE(p.k1() == 0);
  REQUIRE(p.star_atom == LabelSet{"a"});
  REQUIRE(p.k2() == 1);
  REQUIRE(p.suffix_atom(1) == LabelSet{"b"});
  REQUIRE_FALSE(p.suffix_optional);
}

TEST_CASE("plus rewrites to A A*") {
  SteProfile p = profile_of("(a+b)+");
  REQUIRE(p.k1() == 1);
  REQUIRE(p.prefix_atom(1) == LabelSet{"a", "b"});
  REQUIRE(p.star_atom == LabelSet{"a", "b"});
  REQUIRE(p.k2() == 0);
}

TEST_CASE("non-STEs are rejected with a reason") {
  auto res = recognize_ste(parse("(ab*)+c"));
  REQUIRE(std::holds_alternative<NotSte>(res));
  REQUIRE_FALSE(std::get<NotSte>(res).reason.empty());
  REQUIRE_FALSE(is_ste("a*ba*"));
  REQUIRE_FALSE(is_ste("(aa)*"));
  REQUIRE_FALSE(is_ste("a b? c"));
}

TEST_CASE("empty language input is an error") {
  REQUIRE_THROWS_AS(recognize_ste(ast::concat(ast::empty(), ast::atom("a"))),
                    std::invalid_argument);
}

TEST_CASE("Table 1 classification, l = 2 instantiations") {
  struct Row {
    const char* expr;
    bool ste;
  };
  const Row rows[] = {
      {"(a+b)*", true},   {"a1 a2?", true},
      {"a*", true},       {"(ab*)+c", false},
      {"ab", true},       {"a*b?", true},
      {"a*b", true},      {"abc*", true},
      {"a+b", true},      {"!(a+b)", false},
      {"a+", true},       {"(a+b)+", true},
      {"a?b?", true},     {"(a+b)(b+c)", true},
      {"a(b+c)", true},
  };
  for (const Row& row : rows) {
    INFO(row.expr);
    REQUIRE(is_ste(row.expr) == row.ste);
  }
}

TEST_CASE("profile language equals the original language") {
  const char* exprs[] = {"a*b",  "(a+b)+", "abc*",   "a?b?",   "aab*",
                         "aaba*", "a1 a2?", "a(b+c)", "(a+b)(b+c)", "a*b?"};
  auto words = all_words({"a", "b", "c"}, 6);
  for (const char* es : exprs) {
    AstPtr r = parse(es);
    SteProfile p = profile_of(es);
    Nfa orig = to_nfa(r), norm = p.to_nfa();
    for (const auto& w : words) {
      INFO(es);
      REQUIRE(nfa_accepts(orig, w) == nfa_accepts(norm, w));
    }
  }
}

TEST_CASE("cut borders from the worked examples") {
  auto borders = [](const std::string& e) {
    BorderReport b = cut_borders(profile_of(e));
    return std::pair<uint32_t, uint32_t>{b.left_cut_border, b.right_cut_border};
  };
  REQUIRE(borders("a*b") == std::pair<uint32_t, uint32_t>{0, 1});
  REQUIRE(borders("abc*") == std::pair<uint32_t, uint32_t>{2, 0});
  REQUIRE(borders("(a+b)(a+b)(a+b)a*") == std::pair<uint32_t, uint32_t>{0, 0});
  REQUIRE(borders("a?b?c?") == std::pair<uint32_t, uint32_t>{0, 0});
  REQUIRE(borders("aaaab*") == std::pair<uint32_t, uint32_t>{4, 0});
  REQUIRE(bordered_value(profile_of("a*b")) == 1);
  REQUIRE(bordered_value(profile_of("a?b?c?")) == 0);
  REQUIRE(bordered_value(profile_of("aaaab*")) == 4);
}

TEST_CASE("conflict positions") {
  REQUIRE(conflict_positions(profile_of("aaab*")).empty());
  REQUIRE(conflict_positions(profile_of("bba*")).empty());

  // a a a b a*: left cut border 4, conflicts at prefix positions 1..3.
  auto conf = conflict_positions(profile_of("aaaba*"));
  REQUIRE(conf.size() == 3);
  for (auto& [side, i] : conf) {
    REQUIRE(side == Side::Left);
    REQUIRE(i <= 3);
  }

  // Every conflict position lies within its side's cut border; 0-bordered
  // profiles have none.
  for (const char* es : {"a*b", "abc*", "aaba*", "(a+b)(a+b)a*", "ab", "a?b?"}) {
    SteProfile p = profile_of(es);
    BorderReport b = cut_borders(p);
    for (auto& [side, i] : b.conflict_positions)
      REQUIRE(i <= (side == Side::Left ? b.left_cut_border : b.right_cut_border));
    if (b.bordered_value == 0) REQUIRE(b.conflict_positions.empty());
  }
}

TEST_CASE("block derivatives cover the quotient language") {
  const char* exprs[] = {"a*b", "aab*", "aaba*", "abc*", "a?b?", "(a+b)(a+b)a*"};
  auto words = all_words({"a", "b", "c"}, 3);
  auto tails = all_words({"a", "b", "c"}, 3);
  for (const char* es : exprs) {
    SteProfile p = profile_of(es);
    Nfa full = p.to_nfa();
    for (const auto& w : words) {
      auto residuals = ste_derivative(p, w);
      REQUIRE(residuals.size() <= p.k_r() + 2);
      for (const auto& v : tails) {
        std::vector<std::string> wv = w;
        wv.insert(wv.end(), v.begin(), v.end());
        bool in_union = false;
        for (const auto& res : residuals)
          if (nfa_accepts(res.to_nfa(), v)) in_union = true;
        INFO(es);
        REQUIRE(in_union == nfa_accepts(full, wv));
      }
      // Residual borders never exceed the original's.
      uint32_t orig = bordered_value(p);
      for (const auto& res : residuals) REQUIRE(bordered_value(res) <= orig);
    }
  }
}

TEST_CASE("akwa detection") {
  auto spec = detect_akwa(parse("aa(bc)?a*"));
  REQUIRE(spec.has_value());
  REQUIRE(spec->a == "a");
  REQUIRE(spec->k == 2);
  REQUIRE(spec->w == std::vector<std::string>{"b", "c"});

  auto single = detect_akwa(parse("ab?a*"));
  REQUIRE(single.has_value());
  REQUIRE(single->k == 1);
  REQUIRE(single->w == std::vector<std::string>{"b"});

  REQUIRE_FALSE(detect_akwa(parse("ab?b*")).has_value());
  REQUIRE_FALSE(detect_akwa(parse("a(b+c)?a*")).has_value());
}
