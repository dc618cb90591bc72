#include <doctest.h>

#include <random>

#include "tkit/error.hpp"
#include "tkit/nat.hpp"
#include "tkit/stdlib.hpp"
#include "tkit/term.hpp"
#include "tkit/type.hpp"

using namespace tkit;

TEST_CASE("type parsing") {
  CHECK(type_equal(parse_type("N"), ground()));
  CHECK(type_equal(parse_type("N -> N -> N"),
                   arrow(ground(), arrow(ground(), ground()))));
  // right associativity: N -> N -> N == N -> (N -> N)
  CHECK(!type_equal(parse_type("N -> N -> N"),
                    arrow(arrow(ground(), ground()), ground())));
  CHECK(type_equal(parse_type("((N -> N) -> N) -> N"),
                   arrow(arrow(arrow(ground(), ground()), ground()),
                         ground())));
  CHECK_THROWS_AS(parse_type("N ->"), ParseError);
  CHECK_THROWS_AS(parse_type("(N -> N"), ParseError);
  CHECK_THROWS_AS(parse_type("M"), ParseError);
}

TEST_CASE("type printing round-trips") {
  for (const char* text :
       {"N", "N -> N", "(N -> N) -> N", "((N -> N) -> N) -> N",
        "(N -> N -> N) -> N -> N", "N -> (N -> N) -> N"}) {
    TypePtr t = parse_type(text);
    CHECK(type_equal(parse_type(print_type(t)), t));
  }
}

TEST_CASE("term parsing") {
  TermPtr t = parse_term("\\x:N. S x");
  CHECK(t->kind == TermKind::Lam);
  CHECK(t->sub1->kind == TermKind::App);
  CHECK(t->sub1->sub1->kind == TermKind::Succ);
  CHECK(t->sub1->sub2->kind == TermKind::Var);

  CHECK(alpha_eq(parse_term("#3"),
                 mk_app(term_succ(),
                        mk_app(term_succ(), mk_app(term_succ(), term_zero())))));

  TermPtr pred = parse_term("R[N] #0 (\\a:N. \\b:N. b)");
  CHECK(alpha_eq(pred, arith("Pred").term));

  CHECK_THROWS_AS(parse_term("\\x:N."), ParseError);
  CHECK_THROWS_AS(parse_term("y"), UnboundVariableError);
  CHECK_THROWS_AS(parse_term("#"), ParseError);
  CHECK_THROWS_AS(parse_term("R N"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_term("\\x:N.\n  (S ?)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 6);
  }
}

TEST_CASE("comments and whitespace") {
  TermPtr t = parse_term("-- leading comment\n\\x:N. x -- trailing\n");
  CHECK(alpha_eq(t, parse_term("\\x:N. x")));
}

TEST_CASE("typing the constants") {
  CHECK(print_type(infer_type(mk_rec(ground()))) ==
        "N -> (N -> N -> N) -> N -> N");
  CHECK(print_type(infer_type(mk_rec(parse_type("N -> N")))) ==
        "(N -> N) -> ((N -> N) -> N -> N -> N) -> N -> N -> N");
  CHECK(print_type(infer_type(term_succ())) == "N -> N");
  CHECK(print_type(infer_type(term_zero())) == "N");
}

TEST_CASE("typing terms") {
  CHECK(print_type(infer_type(parse_term("\\x:N. x"))) == "N -> N");
  CHECK_THROWS_AS(infer_type(parse_term("S (\\x:N. x)")), TypeError);
  TypingContext ctx{{"f", parse_type("N -> N")}, {"n", ground()}};
  CHECK(print_type(infer_type(ctx, parse_term("f (f n)", ctx))) == "N");
  CHECK_THROWS_AS(infer_type({}, mk_var(0)), UnboundVariableError);
}

TEST_CASE("type error names the offending subterm") {
  try {
    infer_type(parse_term("(\\f:N -> N. f #1) #5"));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(std::string(e.what()).find("#5") != std::string::npos);
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(parse_term("\\x:N. x"), parse_term("\\y:N. y")));
  CHECK(!alpha_eq(parse_term("\\x:N. x"), parse_term("\\x:N. S x")));
  CHECK(alpha_eq(parse_term("\\f:N -> N. \\x:N. f x"),
                 parse_term("\\g:N -> N. \\y:N. g y")));
  CHECK(!alpha_eq(parse_term("\\x:N. \\y:N. x"),
                  parse_term("\\x:N. \\y:N. y")));
}

TEST_CASE("subtype lists") {
  auto subs_n = subtypes(ground());
  REQUIRE(subs_n.size() == 1);
  CHECK(type_equal(subs_n[0], ground()));

  auto subs = subtypes(parse_type("((N -> N) -> N) -> N"));
  REQUIRE(subs.size() == 4);
  CHECK(print_type(subs[0]) == "((N -> N) -> N) -> N");
  CHECK(print_type(subs[1]) == "(N -> N) -> N");
  CHECK(print_type(subs[2]) == "N -> N");  // tau_3 in the worked example
  CHECK(print_type(subs[3]) == "N");

  auto subs2 = subtypes(parse_type("(N -> N -> N) -> N -> N"));
  REQUIRE(subs2.size() == 4);
  CHECK(print_type(subs2[0]) == "(N -> N -> N) -> N -> N");
  CHECK(print_type(subs2[1]) == "N -> N -> N");
  CHECK(print_type(subs2[2]) == "N -> N");
  CHECK(print_type(subs2[3]) == "N");
}

namespace {

TypePtr random_type(std::mt19937& rng, int depth) {
  if (depth <= 0 || rng() % 3 == 0) return ground();
  return arrow(random_type(rng, depth - 1), random_type(rng, depth - 1));
}

}  // namespace

TEST_CASE("subtype list properties") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    TypePtr t = random_type(rng, 4);
    auto subs = subtypes(t);
    CHECK(type_equal(subs[0], t));
    bool has_ground = false;
    for (const auto& s : subs) has_ground |= !s->is_arrow;
    CHECK(has_ground);
    // duplicate-free
    for (size_t i = 0; i < subs.size(); ++i)
      for (size_t j = i + 1; j < subs.size(); ++j)
        CHECK(!type_equal(subs[i], subs[j]));
    // indices are 1-based and consistent
    for (size_t i = 0; i < subs.size(); ++i)
      CHECK(subtype_index(subs, subs[i]) == i + 1);
  }
}

TEST_CASE("print/parse closure on the combinator library") {
  for (const std::string& name : combinator_names()) {
    const Combinator* c = find_combinator(name);
    REQUIRE(c != nullptr);
    TermPtr reparsed = parse_term(print_term(c->term));
    CHECK(alpha_eq(reparsed, c->term));
    TermPtr reparsed_canonical = parse_term(print_term(c->term, {}, true));
    CHECK(alpha_eq(reparsed_canonical, c->term));
  }
}

TEST_CASE("printing open terms uses context names") {
  TypingContext ctx{{"f", parse_type("N -> N")}, {"n", ground()}};
  TermPtr t = parse_term("f (f n)", ctx);
  CHECK(print_term(t, ctx) == "f (f n)");
}

TEST_CASE("shadowed binders survive print/reparse") {
  for (const char* text :
       {"\\x:N. \\x:N. S x", "\\x:N. \\x:N. x",
        "\\f:N -> N. \\f:N -> N. \\x:N. f x",
        "\\x:N -> N. (\\x:N. x)"}) {
    TermPtr t = parse_term(text);
    CHECK(alpha_eq(parse_term(print_term(t)), t));
    CHECK(alpha_eq(parse_term(print_term(t, {}, true)), t));
  }
  // the inner binder wins
  TermPtr t = parse_term("\\x:N. \\x:N. x");
  CHECK(t->sub1->sub1->var == 0);
}

TEST_CASE("parser rejects garbage without crashing") {
  std::mt19937 rng(4242);
  const std::string alphabet = "\\xyzfNRS0#.():-> [];";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    size_t len = rng() % 24;
    for (size_t i = 0; i < len; ++i)
      text.push_back(alphabet[rng() % alphabet.size()]);
    try {
      TermPtr t = parse_term(text);
      // on the rare valid draw, printing must re-parse
      CHECK(alpha_eq(parse_term(print_term(t)), t));
    } catch (const Error&) {
      // parse or unbound errors are the expected outcome
    }
  }
}

TEST_CASE("numeral helpers") {
  CHECK(as_numeral(numeral_term(Nat(41))) == Nat(41));
  CHECK(as_numeral(parse_term("\\x:N. x")) == std::nullopt);
  auto [n, core] = split_succ_chain(parse_term("S (S x)", {{"x", ground()}}));
  CHECK(n == Nat(2));
  CHECK(core->kind == TermKind::Var);
}
