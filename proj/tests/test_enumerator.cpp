#include <doctest.h>

#include "golden_util.hpp"
#include "tkit/codec.hpp"
#include "tkit/enumerator.hpp"
#include "tkit/error.hpp"
#include "tkit/meta_nf.hpp"
#include "tkit/normalize.hpp"

using namespace tkit;

TEST_CASE("bundles typecheck at the declared types") {
  for (const char* type_text :
       {"N", "N -> N", "N -> N -> N", "(N -> N) -> N -> N",
        "((N -> N) -> N) -> N", "(N -> N -> N) -> N -> N"}) {
    TypePtr tau = parse_type(type_text);
    EnumeratorBundle bundle = build_bundle(tau);
    size_t n = bundle.subs.size();
    CHECK(type_equal(bundle.e_term.type, arrow(ground(), tau)));
    CHECK(type_equal(bundle.a_term.type,
                     arrow(ground(), arrow(ground(), bundle.upsilon_tuple))));
    CHECK(bundle.b_terms.size() == n);
    CHECK(bundle.j_terms.size() == n + 2);
    for (size_t j = 0; j <= n + 1; ++j) {
      REQUIRE(bundle.j_terms[j].size() == n);
      for (size_t i = 0; i < n; ++i) {
        CHECK(is_closed(bundle.j_terms[j][i].term));
        CHECK(type_equal(bundle.j_terms[j][i].type,
                         arrow(arrow(ground(), bundle.upsilon_tuple),
                               arrow(ground(), bundle.upsilon[i]))));
      }
    }
  }
}

TEST_CASE("upsilon types") {
  EnumeratorBundle bundle = build_bundle(parse_type("N -> N"));
  REQUIRE(bundle.subs.size() == 2);
  CHECK(print_type(bundle.upsilon[0]) ==
        "(N -> N -> N) -> (N -> N) -> N -> N -> N");
  CHECK(print_type(bundle.upsilon[1]) ==
        "(N -> N -> N) -> (N -> N) -> N -> N");
}

TEST_CASE("degenerate decoder table at N -> N") {
  EnumeratorBundle bundle = build_bundle(parse_type("N -> N"));
  std::string actual;
  for (size_t j = 0; j < bundle.j_degenerate.size(); ++j) {
    for (size_t i = 0; i < bundle.j_degenerate[j].size(); ++i) {
      actual += "J " + std::to_string(j) + " " + std::to_string(i + 1) +
                " " + (bundle.j_degenerate[j][i] ? "degenerate" : "defined") +
                "\n";
    }
  }
  CHECK_MESSAGE(testutil::check_golden("degeneracy_nn.txt", actual),
                actual);
  // the lambda-tag decoder for tau_1 = N -> N exists, the one for N does not
  CHECK(!bundle.j_degenerate[3][0]);
  CHECK(bundle.j_degenerate[3][1]);
  // the only application decoder is J_{2,2}: N -> N applied to N yields N
  CHECK(bundle.j_degenerate[1][0]);
  CHECK(bundle.j_degenerate[1][1]);
  CHECK(bundle.j_degenerate[2][0]);
  CHECK(!bundle.j_degenerate[2][1]);
}

TEST_CASE("vacuous bundle at the ground type") {
  EnumeratorBundle bundle = build_bundle(ground());
  CHECK(bundle.subs.size() == 1);
  CHECK(type_equal(bundle.e_term.type, parse_type("N -> N")));
  CHECK(enumerate_pure_closed_nf(ground(), 10).empty());
}

TEST_CASE("staging lemma on small indices") {
  for (const char* type_text : {"N -> N", "N -> N -> N"}) {
    EnumeratorBundle bundle = build_bundle(parse_type(type_text));
    for (uint64_t i = 0; i <= 2; ++i)
      for (uint64_t j = 0; j <= 2; ++j) CHECK(check_lemma_a(bundle, i, j));
  }
}

TEST_CASE("decoding reproduces the encoded term") {
  struct Case {
    const char* type_text;
    const char* term_text;
    uint64_t code;
  };
  for (Case c : {Case{"N -> N", "\\x:N. x", 9},
                 Case{"(N -> N) -> N -> N", "\\f:N -> N. f", 14},
                 Case{"N -> N -> N", "\\x:N. \\y:N. x", 175},
                 Case{"N -> N -> N", "\\x:N. \\y:N. y", 280}}) {
    TermPtr expected = parse_term(c.term_text);
    CHECK(encode_oslash(expected) == Nat(c.code));
    EnumeratorBundle bundle = build_bundle(parse_type(c.type_text));
    EvalStats stats;
    NormalForm got =
        apply_enumerator(bundle, Nat(c.code), Budget::for_enumerator(),
                         &stats);
    CHECK(alpha_eq(got.term, expected));
    CHECK(stats.steps > 0);
  }
}

TEST_CASE("the application-tag decoder reproduces an applied subterm") {
  // Decoding a whole term of type ((N -> N) -> N) -> N is out of reach (the
  // outer lambda tag drives the code beyond any materializable numeral),
  // but the decoding table recovers subterms directly: feed it the code of
  // the open application x (\y. y) at depth 1, with the context lists X_l
  // supplying the free x, and the application decoder must rebuild it.
  TypePtr tau = parse_type("((N -> N) -> N) -> N");
  EnumeratorBundle bundle = build_bundle(tau);
  REQUIRE(bundle.subs.size() == 4);

  // x (\y. y) = <3, <code of x, code of \y. y>> = <3, <0, 41>> = 373683
  Nat code = cantor_pair(
      Nat(3), cantor_pair(cantor_pair(Nat(0), Nat(0)),
                          cantor_pair(Nat(5), cantor_pair(Nat(0), Nat(2)))));
  CHECK(code == Nat(373683));

  TypingContext ctx{{"x", parse_type("(N -> N) -> N")}};
  TermPtr applied = mk_app(mk_app(bundle.a_term.term, numeral_term(code)),
                           numeral_term(Nat(0)));
  // B : N = tau_4, so project slot 4 of the table
  TermPtr lhs = mk_app(tuple_projection(bundle.upsilon, 4).term, applied);
  for (size_t l = 1; l <= 4; ++l) {
    TermPtr x_l =
        l == 2 ? parse_term("\\n:N. x", ctx)  // binder of x sits at depth 0
               : zero_of_type(arrow(ground(), bundle.subs[l - 1])).term;
    lhs = mk_app(lhs, x_l);
  }
  lhs = mk_app(lhs, numeral_term(Nat(1)));  // the subterm lives at depth 1

  TermPtr rhs = parse_term("x (\\y:N. y)", ctx);
  Budget budget = Budget::for_enumerator();
  budget.max_nodes = 100'000'000;
  EvalStats stats;
  NormalForm lhs_nf = normalize(lhs, budget, ctx, &stats);
  CHECK(alpha_eq(lhs_nf.term, normalize(rhs, budget, ctx).term));
  CHECK(stats.steps > 1'000'000);  // the staged table really is walked
}

TEST_CASE("nested application tags decode through both slots") {
  // x y y inside \x. \y. x y y at the tree type: the outer application
  // dispatches one slot, its function part another
  TypePtr star = parse_type("(N -> N -> N) -> N -> N");
  EnumeratorBundle bundle = build_bundle(star);
  REQUIRE(bundle.subs.size() == 4);

  TermPtr whole = parse_term("\\x:N -> N -> N. \\y:N. x y y");
  // code of the body = P2 (P2 (code of the whole term))
  Nat code = cantor_unpair(cantor_unpair(encode_oslash(whole)).second).second;
  CHECK(code == Nat(27265));

  TypingContext ctx{{"x", parse_type("N -> N -> N")}, {"y", ground()}};
  TermPtr applied = mk_app(mk_app(bundle.a_term.term, numeral_term(code)),
                           numeral_term(Nat(0)));
  TermPtr lhs = mk_app(tuple_projection(bundle.upsilon, 4).term, applied);
  for (size_t l = 1; l <= 4; ++l) {
    TermPtr x_l;
    if (l == 2)
      x_l = parse_term("\\n:N. x", ctx);  // binder of x at depth 0
    else if (l == 4)
      x_l = parse_term("\\n:N. y", ctx);  // binder of y at depth 1
    else
      x_l = zero_of_type(arrow(ground(), bundle.subs[l - 1])).term;
    lhs = mk_app(lhs, x_l);
  }
  lhs = mk_app(lhs, numeral_term(Nat(2)));

  TermPtr rhs = parse_term("x y y", ctx);
  Budget budget = Budget::for_enumerator();
  CHECK(equal_terms(lhs, rhs, budget, ctx));
}

TEST_CASE("decoder output on a non-image code is frozen") {
  EnumeratorBundle bundle = build_bundle(parse_type("N -> N"));
  NormalForm got = apply_enumerator(bundle, Nat(0));
  CHECK(type_equal(got.type, parse_type("N -> N")));
  std::string actual = print_term(got.term, {}, true) + "\n";
  CHECK_MESSAGE(testutil::check_golden("e_nn_code0.txt", actual), actual);
}

TEST_CASE("enumerator budget errors carry step counts") {
  EnumeratorBundle bundle = build_bundle(parse_type("N -> N"));
  Budget tiny;
  tiny.max_steps = 50;
  CHECK_THROWS_AS(apply_enumerator(bundle, Nat(9), tiny), BudgetError);
}
